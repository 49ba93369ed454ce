#pragma once
// Covariance spectra and the effective-rank quantities driving the benign
// overfitting analysis.  All spectra are eigenvalue lists of diagonal
// covariances; indices are 0-based in code while rho_k / R_k follow the
// usual 1-based convention (rho_k sums eigenvalues strictly after position
// k, normalised by n times the (k+1)-th eigenvalue).

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace shiftlab {

class Spectrum {
 public:
  // Validates: non-empty, all entries finite and >= 0.
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  double sum() const;
  // Sum over indices k..p-1, i.e. eigenvalues strictly after the k-th
  // 1-based one.  k may equal size() (empty tail, sum 0).
  double tail_sum(std::size_t k) const;
  double tail_sum_sq(std::size_t k) const;
  bool non_increasing() const;

 private:
  std::vector<double> values_;
};

struct SpikedParams {
  std::size_t k = 0;      // number of head eigenvalues
  double delta = 1.0;     // head value
  double eps = 0.0;       // tail value
  std::size_t p = 0;      // total dimension
};

// k head eigenvalues delta followed by p-k tail eigenvalues eps.
// Requires k <= p, p >= 1, delta >= eps >= 0, delta > 0.
Spectrum make_spiked(const SpikedParams& params);

struct DecayLaw {
  enum class Kind { PowerLog, Power, LogSelf };
  Kind kind = Kind::PowerLog;
  double a = 1.0;
  double b = 1.0;
};

// PowerLog: lambda_i = i^{-a} * log(i+1)^{-b};  Power: lambda_i = i^{-a};
// LogSelf: lambda_i = i^{-log i} (a, b unused).  Indices are 1-based.
// Validates that every value is finite and positive and the sequence is
// non-increasing; otherwise throws std::invalid_argument.
Spectrum make_decay(const DecayLaw& law, std::size_t p);

// rho_k = (sum_{i>k} lambda_i) / (n * lambda_{k+1}), 1-based convention.
// Requires k < p, n >= 1, lambda_{k+1} > 0.
double rho_k(const Spectrum& spectrum, std::size_t k, std::size_t n);

// R_k = (sum_{i>k} lambda_i)^2 / (sum_{i>k} lambda_i^2).  Requires a
// non-degenerate tail (some lambda_i > 0 for i > k).
double big_R_k(const Spectrum& spectrum, std::size_t k);

// Smallest k with rho_k >= b, scanning k = 0..p-1 and stopping once
// lambda_{k+1} vanishes.  Returns nullopt when no index qualifies.
std::optional<std::size_t> k_star(const Spectrum& spectrum, std::size_t n, double b = 1.0);

struct BenignReport {
  std::optional<std::size_t> k_star;
  double rho_0 = 0.0;
  std::optional<double> kstar_over_n;    // absent when k_star is absent
  std::optional<double> n_over_R_kstar;  // absent when k_star absent or tail degenerate
  bool degenerate_tail = false;
};

BenignReport benign_report(const Spectrum& spectrum, std::size_t n, double b = 1.0);

struct MultiplicativeShift {
  std::size_t k = 0;
  double alpha = 1.0;  // head factor (indices 1..k)
  double beta = 1.0;   // tail factor (indices k+1..p)
};

struct PerIndexShift {
  std::vector<double> factors;
};

class ShiftSpec {
 public:
  static ShiftSpec multiplicative(std::size_t k, double alpha, double beta);
  static ShiftSpec per_index(std::vector<double> factors);

  bool is_multiplicative() const { return std::holds_alternative<MultiplicativeShift>(spec_); }
  const MultiplicativeShift& as_multiplicative() const;
  const PerIndexShift& as_per_index() const;

 private:
  ShiftSpec() = default;
  std::variant<MultiplicativeShift, PerIndexShift> spec_;
};

struct SpectrumPair {
  Spectrum source;
  Spectrum target;

  // Validates equal lengths and a non-increasing source.
  SpectrumPair(Spectrum source_in, Spectrum target_in);
};

// Applies factors to the source spectrum.  Multiplicative shifts require
// k <= p and alpha, beta >= 0; per-index shifts require a factor list of the
// source length with finite, >= 0 entries.
SpectrumPair apply_shift(const Spectrum& source, const ShiftSpec& shift);

}  // namespace shiftlab
