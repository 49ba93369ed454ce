#include "shiftlab/taxonomy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "shiftlab/stats.hpp"

namespace shiftlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Beneficial: return "Beneficial";
    case Verdict::Malignant: return "Malignant";
    case Verdict::Neutral: return "Neutral";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Mild: return "Mild";
    case Regime::Severe: return "Severe";
    case Regime::Boundary: return "Boundary";
  }
  return "?";
}

namespace {

// Shared verdict logic once head/tail shift statistics (a, t) are scalar.
TaxonomyReport classify_core(const Spectrum& source, std::size_t k, std::size_t n, double a,
                             double t, const TaxonomyOptions& options) {
  if (n == 0) throw std::invalid_argument("classification needs n >= 1");
  if (k >= source.size()) throw std::invalid_argument("classification needs k < p");
  if (!(a >= 0.0) || !(t >= 0.0)) throw std::invalid_argument("shift factors must be >= 0");

  TaxonomyReport out;
  out.k_over_n = static_cast<double>(k) / static_cast<double>(n);
  const double Rk = big_R_k(source, k);
  out.n_over_Rk = static_cast<double>(n) / Rk;
  out.benign_ok = source[k] > 0.0 && rho_k(source, k, n) >= options.b;

  const TraceComparison tc = trace_condition(
      source, k, a, t);  // statistics stand in for (alpha, beta) in the general case
  out.trace_source = tc.trace_source;
  out.trace_target = tc.trace_target;

  out.c_alpha_beta = t == 1.0 ? (a == 1.0 ? 0.0 : std::numeric_limits<double>::infinity())
                              : std::abs((a - 1.0) / (1.0 - t));
  out.predicted_delta_v = (a - 1.0) * out.k_over_n + (t - 1.0) * out.n_over_Rk;

  // Regime: mild iff n/R_k clears C * k/n with a relative margin; the band
  // between marks Boundary.  C = +inf lands in Severe by convention.
  const double threshold = std::isinf(out.c_alpha_beta)
                               ? std::numeric_limits<double>::infinity()
                               : out.c_alpha_beta * out.k_over_n;
  if (std::isinf(threshold)) {
    out.regime = Regime::Severe;
  } else {
    const double band = options.boundary_band * std::max(out.n_over_Rk, threshold);
    if (std::abs(out.n_over_Rk - threshold) <= band) {
      out.regime = Regime::Boundary;
    } else {
      out.regime = out.n_over_Rk > threshold ? Regime::Mild : Regime::Severe;
    }
  }

  if (out.predicted_delta_v == 0.0) {
    out.verdict = Verdict::Neutral;
    return out;
  }
  const double v_id = out.k_over_n + out.n_over_Rk;
  if (std::abs(out.predicted_delta_v) < options.tol_rel * v_id) {
    out.verdict = Verdict::Indeterminate;
    return out;
  }
  if ((a < 1.0 && t <= 1.0) || (a <= 1.0 && t < 1.0)) {
    out.verdict = Verdict::Beneficial;
  } else if ((a > 1.0 && t >= 1.0) || (a >= 1.0 && t > 1.0)) {
    out.verdict = Verdict::Malignant;
  } else if (out.regime == Regime::Boundary) {
    out.verdict = Verdict::Indeterminate;
  } else if (out.regime == Regime::Mild) {
    out.verdict = a > 1.0 ? Verdict::Beneficial : Verdict::Malignant;
  } else {
    out.verdict = a > 1.0 ? Verdict::Malignant : Verdict::Beneficial;
  }
  return out;
}

}  // namespace

TaxonomyReport classify_multiplicative(const Spectrum& source, std::size_t k, std::size_t n,
                                       double alpha, double beta,
                                       const TaxonomyOptions& options) {
  return classify_core(source, k, n, alpha, beta, options);
}

TaxonomyReport classify_general(const Spectrum& source, std::size_t k, std::size_t n,
                                const std::vector<double>& alpha_vec,
                                const std::vector<double>& beta_vec,
                                const TaxonomyOptions& options) {
  if (k >= source.size()) throw std::invalid_argument("classification needs k < p");
  if (alpha_vec.size() != k || beta_vec.size() != source.size() - k) {
    throw std::invalid_argument("factor vector lengths must be (k, p - k)");
  }
  for (double a : alpha_vec) {
    if (!(a >= 0.0)) throw std::invalid_argument("shift factors must be >= 0");
  }
  for (double b : beta_vec) {
    if (!(b >= 0.0)) throw std::invalid_argument("shift factors must be >= 0");
  }

  // Constant vectors reduce to the scalar path without floating-point drift.
  const bool alpha_const =
      alpha_vec.empty() ||
      std::all_of(alpha_vec.begin(), alpha_vec.end(), [&](double v) { return v == alpha_vec[0]; });
  const bool beta_const =
      beta_vec.empty() ||
      std::all_of(beta_vec.begin(), beta_vec.end(), [&](double v) { return v == beta_vec[0]; });
  if (alpha_const && beta_const) {
    const double a = alpha_vec.empty() ? 1.0 : alpha_vec[0];
    const double b = beta_vec.empty() ? 1.0 : beta_vec[0];
    return classify_core(source, k, n, a, b, options);
  }

  double a = 1.0;
  if (k > 0) {
    CompensatedSum s;
    for (double v : alpha_vec) s.add(v);
    a = s.value() / static_cast<double>(k);
  }
  CompensatedSum num, den;
  for (std::size_t i = k; i < source.size(); ++i) {
    const double sq = source[i] * source[i];
    num.add(beta_vec[i - k] * sq);
    den.add(sq);
  }
  if (!(den.value() > 0.0)) throw std::domain_error("classification needs a non-degenerate tail");
  return classify_core(source, k, n, a, num.value() / den.value(), options);
}

TraceComparison trace_condition(const Spectrum& source, std::size_t k, double alpha, double beta) {
  if (k > source.size()) throw std::invalid_argument("trace_condition needs k <= p");
  CompensatedSum head;
  for (std::size_t i = 0; i < k; ++i) head.add(source[i]);
  const double tail = source.tail_sum(k);
  TraceComparison out;
  out.trace_source = head.value() + tail;
  out.trace_target = alpha * head.value() + beta * tail;
  if (out.trace_target > out.trace_source) {
    out.ordering = TraceOrdering::TargetLarger;
  } else if (out.trace_target < out.trace_source) {
    out.ordering = TraceOrdering::SourceLarger;
  }
  return out;
}

double robustness_value(const Spectrum& source, std::size_t k, std::size_t n, double alpha,
                        double beta) {
  if (n == 0) throw std::invalid_argument("robustness_value needs n >= 1");
  if (k > source.size()) throw std::invalid_argument("robustness_value needs k <= p");
  const double head = alpha * static_cast<double>(k) / static_cast<double>(n);
  if (k >= source.size() || !(source.tail_sum_sq(k) > 0.0)) return head;
  return head + beta * static_cast<double>(n) / big_R_k(source, k);
}

}  // namespace shiftlab
