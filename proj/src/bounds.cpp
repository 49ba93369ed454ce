#include "shiftlab/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "shiftlab/stats.hpp"

namespace shiftlab {

namespace {

void check_config(const SpectrumPair& pair, const BoundConfig& cfg) {
  if (cfg.n == 0) throw std::invalid_argument("bound config needs n >= 1");
  if (cfg.k >= cfg.n) throw std::invalid_argument("bound config needs k < n");
  if (cfg.k >= pair.source.size()) throw std::invalid_argument("bound config needs k < p");
  if (!(cfg.c > 0.0)) throw std::invalid_argument("bound config needs c > 0");
  if (!(cfg.b > 0.0)) throw std::invalid_argument("bound config needs b > 0");
}

// t_i/s_i with the 0/0 convention; s_i = 0 under t_i > 0 is unsupported.
double ratio_or_throw(double source_val, double target_val) {
  if (source_val > 0.0) return target_val / source_val;
  if (target_val == 0.0) return 0.0;
  throw std::domain_error("target eigenvalue is positive where source vanishes");
}

double rho_or_throw(const SpectrumPair& pair, const BoundConfig& cfg) {
  return rho_k(pair.source, cfg.k, cfg.n);  // throws when s_{k+1} = 0
}

}  // namespace

double variance_lower(const SpectrumPair& pair, const BoundConfig& cfg) {
  check_config(pair, cfg);
  const double rho = rho_or_throw(pair, cfg);
  const double pivot = pair.source[cfg.k];
  const double denom = pivot * pivot * (rho + 1.0) * (rho + 1.0);
  CompensatedSum s;
  for (std::size_t i = 0; i < pair.source.size(); ++i) {
    const double ratio = ratio_or_throw(pair.source[i], pair.target[i]);
    if (ratio == 0.0) continue;
    const double si = pair.source[i];
    s.add(ratio * std::min(1.0, si * si / denom));
  }
  return s.value() / (cfg.c * static_cast<double>(cfg.n));
}

double variance_upper(const SpectrumPair& pair, const BoundConfig& cfg, bool* benign_violated) {
  check_config(pair, cfg);
  const double rho = rho_or_throw(pair, cfg);
  if (benign_violated != nullptr) *benign_violated = rho < cfg.b;
  CompensatedSum head;
  for (std::size_t i = 0; i < cfg.k; ++i) {
    head.add(ratio_or_throw(pair.source[i], pair.target[i]));
  }
  CompensatedSum tail_cross;
  for (std::size_t i = cfg.k; i < pair.source.size(); ++i) {
    ratio_or_throw(pair.source[i], pair.target[i]);  // enforce the support condition
    tail_cross.add(pair.target[i] * pair.source[i]);
  }
  const double tail_sum = pair.source.tail_sum(cfg.k);
  const double n = static_cast<double>(cfg.n);
  double tail_term = 0.0;
  if (tail_cross.value() > 0.0) {
    tail_term = n * tail_cross.value() / (tail_sum * tail_sum);
  }
  return cfg.c * (head.value() / n + tail_term);
}

double bias_lower(const SpectrumPair& pair, const Eigen::VectorXd& theta_source,
                  const BoundConfig& cfg) {
  check_config(pair, cfg);
  if (static_cast<std::size_t>(theta_source.size()) != pair.source.size()) {
    throw std::invalid_argument("bias_lower theta length must equal p");
  }
  const double rho = rho_or_throw(pair, cfg);
  const double scale = pair.source[cfg.k] * rho;  // s_{k+1} rho_k = tail mass / n
  CompensatedSum s;
  for (std::size_t i = 0; i < pair.source.size(); ++i) {
    const double ti = pair.target[i];
    const double th2 = theta_source[static_cast<Eigen::Index>(i)] *
                       theta_source[static_cast<Eigen::Index>(i)];
    if (ti == 0.0 || th2 == 0.0) {
      ratio_or_throw(pair.source[i], ti);
      continue;
    }
    if (i < cfg.k) {
      ratio_or_throw(pair.source[i], ti);
      const double shrink = 1.0 + pair.source[i] / scale;
      s.add(ti * th2 / (shrink * shrink));
    } else {
      s.add(ti * th2);
    }
  }
  return s.value() / cfg.c;
}

double bias_upper(const SpectrumPair& pair, const Eigen::VectorXd& theta_source,
                  const BoundConfig& cfg, bool* benign_violated) {
  check_config(pair, cfg);
  if (static_cast<std::size_t>(theta_source.size()) != pair.source.size()) {
    throw std::invalid_argument("bias_upper theta length must equal p");
  }
  const double rho = rho_or_throw(pair, cfg);
  if (benign_violated != nullptr) *benign_violated = rho < cfg.b;
  const double scale = pair.source[cfg.k] * rho;
  CompensatedSum s;
  for (std::size_t i = 0; i < pair.source.size(); ++i) {
    ratio_or_throw(pair.source[i], pair.target[i]);
    s.add(pair.target[i] / (1.0 + pair.source[i] / scale));
  }
  return cfg.c * theta_source.squaredNorm() * s.value();
}

BoundsReport bounds_report(const SpectrumPair& pair, const BoundConfig& cfg,
                           const Eigen::VectorXd* theta_source) {
  BoundsReport out;
  out.rho_k = rho_k(pair.source, cfg.k, cfg.n);
  out.R_k = big_R_k(pair.source, cfg.k);
  out.benign_ok = out.rho_k >= cfg.b;
  out.v_lower = variance_lower(pair, cfg);
  out.v_upper = variance_upper(pair, cfg);
  if (theta_source != nullptr) {
    out.b_lower = bias_lower(pair, *theta_source, cfg);
    out.b_upper = bias_upper(pair, *theta_source, cfg);
  }
  return out;
}

TightnessReport tightness_ratios(const SpectrumPair& pair, const BoundConfig& cfg,
                                 const Eigen::VectorXd* theta_source) {
  TightnessReport out;
  const double vl = variance_lower(pair, cfg);
  const double vu = variance_upper(pair, cfg);
  out.v_ratio = vu > 0.0 ? vl / vu : std::numeric_limits<double>::quiet_NaN();
  out.v_bracket_lo = 1.0 / (cfg.b * cfg.b * (1.0 + cfg.b) * (1.0 + cfg.b) * cfg.c * cfg.c);
  out.v_bracket_hi = 1.0;
  out.v_in_bracket = vu > 0.0 && out.v_ratio >= out.v_bracket_lo && out.v_ratio <= out.v_bracket_hi;
  if (theta_source != nullptr && theta_source->squaredNorm() > 0.0) {
    const double bu = bias_upper(pair, *theta_source, cfg);
    if (bu > 0.0) {
      out.has_bias = true;
      out.b_ratio = bias_lower(pair, *theta_source, cfg) / bu;
      double min_sq = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < theta_source->size(); ++i) {
        const double v = (*theta_source)[i];
        if (v != 0.0) min_sq = std::min(min_sq, v * v);
      }
      const double spread = 1.0 + pair.source[0] / (cfg.b * pair.source[cfg.k]);
      out.b_bracket_lo = min_sq / (theta_source->squaredNorm() * spread);
      out.b_bracket_hi = 1.0;
      out.b_in_bracket = out.b_ratio >= out.b_bracket_lo && out.b_ratio <= out.b_bracket_hi;
    }
  }
  return out;
}

}  // namespace shiftlab
