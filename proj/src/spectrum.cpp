#include "shiftlab/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "shiftlab/stats.hpp"

namespace shiftlab {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("spectrum must be non-empty");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("spectrum entries must be finite");
    if (v < 0.0) throw std::invalid_argument("spectrum entries must be >= 0");
  }
}

double Spectrum::sum() const { return tail_sum(0); }

double Spectrum::tail_sum(std::size_t k) const {
  if (k > values_.size()) throw std::out_of_range("tail index exceeds spectrum size");
  CompensatedSum s;
  for (std::size_t i = k; i < values_.size(); ++i) s.add(values_[i]);
  return s.value();
}

double Spectrum::tail_sum_sq(std::size_t k) const {
  if (k > values_.size()) throw std::out_of_range("tail index exceeds spectrum size");
  CompensatedSum s;
  for (std::size_t i = k; i < values_.size(); ++i) s.add(values_[i] * values_[i]);
  return s.value();
}

bool Spectrum::non_increasing() const {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] > values_[i - 1]) return false;
  }
  return true;
}

Spectrum make_spiked(const SpikedParams& params) {
  if (params.p == 0) throw std::invalid_argument("spiked spectrum needs p >= 1");
  if (params.k > params.p) throw std::invalid_argument("spiked spectrum needs k <= p");
  if (!(params.delta > 0.0)) throw std::invalid_argument("spiked spectrum needs delta > 0");
  if (params.eps < 0.0 || params.eps > params.delta) {
    throw std::invalid_argument("spiked spectrum needs 0 <= eps <= delta");
  }
  std::vector<double> v(params.p, params.eps);
  for (std::size_t i = 0; i < params.k; ++i) v[i] = params.delta;
  return Spectrum(std::move(v));
}

Spectrum make_decay(const DecayLaw& law, std::size_t p) {
  if (p == 0) throw std::invalid_argument("decay spectrum needs p >= 1");
  std::vector<double> v(p);
  for (std::size_t idx = 0; idx < p; ++idx) {
    const double i = static_cast<double>(idx + 1);
    double value = 0.0;
    switch (law.kind) {
      case DecayLaw::Kind::PowerLog:
        value = std::pow(i, -law.a) * std::pow(std::log(i + 1.0), -law.b);
        break;
      case DecayLaw::Kind::Power:
        value = std::pow(i, -law.a);
        break;
      case DecayLaw::Kind::LogSelf:
        value = std::pow(i, -std::log(i));
        break;
    }
    if (!std::isfinite(value) || value <= 0.0) {
      throw std::invalid_argument("decay law produced a non-positive or non-finite eigenvalue");
    }
    v[idx] = value;
  }
  for (std::size_t i = 1; i < p; ++i) {
    if (v[i] > v[i - 1]) throw std::invalid_argument("decay law is not non-increasing");
  }
  return Spectrum(std::move(v));
}

double rho_k(const Spectrum& spectrum, std::size_t k, std::size_t n) {
  if (k >= spectrum.size()) throw std::domain_error("rho_k needs k < p");
  if (n == 0) throw std::domain_error("rho_k needs n >= 1");
  const double pivot = spectrum[k];
  if (!(pivot > 0.0)) throw std::domain_error("rho_k needs lambda_{k+1} > 0");
  return spectrum.tail_sum(k) / (static_cast<double>(n) * pivot);
}

double big_R_k(const Spectrum& spectrum, std::size_t k) {
  if (k >= spectrum.size()) throw std::domain_error("R_k needs k < p");
  const double t = spectrum.tail_sum(k);
  const double t2 = spectrum.tail_sum_sq(k);
  if (!(t2 > 0.0)) throw std::domain_error("R_k needs a non-degenerate tail");
  return t * t / t2;
}

std::optional<std::size_t> k_star(const Spectrum& spectrum, std::size_t n, double b) {
  if (n == 0) throw std::domain_error("k_star needs n >= 1");
  if (!(b > 0.0)) throw std::domain_error("k_star needs b > 0");
  const std::size_t p = spectrum.size();
  // Suffix sums computed back to front so each rho_k costs O(1).
  std::vector<double> suffix(p + 1, 0.0);
  for (std::size_t i = p; i-- > 0;) suffix[i] = suffix[i + 1] + spectrum[i];
  for (std::size_t k = 0; k < p; ++k) {
    const double pivot = spectrum[k];
    if (!(pivot > 0.0)) break;  // rho undefined from here on
    if (suffix[k] / (static_cast<double>(n) * pivot) >= b) return k;
  }
  return std::nullopt;
}

BenignReport benign_report(const Spectrum& spectrum, std::size_t n, double b) {
  BenignReport out;
  out.degenerate_tail = spectrum.size() == 1;
  out.rho_0 = spectrum[0] > 0.0 ? rho_k(spectrum, 0, n) : 0.0;
  out.k_star = k_star(spectrum, n, b);
  if (out.k_star) {
    const std::size_t ks = *out.k_star;
    out.kstar_over_n = static_cast<double>(ks) / static_cast<double>(n);
    if (spectrum.tail_sum_sq(ks) > 0.0) {
      out.n_over_R_kstar = static_cast<double>(n) / big_R_k(spectrum, ks);
    }
  }
  return out;
}

ShiftSpec ShiftSpec::multiplicative(std::size_t k, double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    throw std::invalid_argument("shift factors must be >= 0");
  }
  ShiftSpec s;
  s.spec_ = MultiplicativeShift{k, alpha, beta};
  return s;
}

ShiftSpec ShiftSpec::per_index(std::vector<double> factors) {
  for (double f : factors) {
    if (!std::isfinite(f) || f < 0.0) {
      throw std::invalid_argument("per-index shift factors must be finite and >= 0");
    }
  }
  ShiftSpec s;
  s.spec_ = PerIndexShift{std::move(factors)};
  return s;
}

const MultiplicativeShift& ShiftSpec::as_multiplicative() const {
  return std::get<MultiplicativeShift>(spec_);
}

const PerIndexShift& ShiftSpec::as_per_index() const { return std::get<PerIndexShift>(spec_); }

SpectrumPair::SpectrumPair(Spectrum source_in, Spectrum target_in)
    : source(std::move(source_in)), target(std::move(target_in)) {
  if (source.size() != target.size()) {
    throw std::invalid_argument("source and target spectra must have equal length");
  }
  if (!source.non_increasing()) {
    throw std::invalid_argument("source spectrum must be non-increasing");
  }
}

SpectrumPair apply_shift(const Spectrum& source, const ShiftSpec& shift) {
  std::vector<double> shifted(source.values());
  if (shift.is_multiplicative()) {
    const auto& m = shift.as_multiplicative();
    if (m.k > source.size()) throw std::invalid_argument("shift head k exceeds spectrum size");
    for (std::size_t i = 0; i < shifted.size(); ++i) {
      shifted[i] *= (i < m.k) ? m.alpha : m.beta;
    }
  } else {
    const auto& pi = shift.as_per_index();
    if (pi.factors.size() != source.size()) {
      throw std::invalid_argument("per-index shift length must match spectrum");
    }
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] *= pi.factors[i];
  }
  return SpectrumPair(source, Spectrum(std::move(shifted)));
}

}  // namespace shiftlab
