#pragma once
// Small numeric helpers shared across modules: compensated summation so that
// aggregation order (and therefore worker count) cannot perturb results, and
// mean / standard-error reduction for Monte-Carlo outputs.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace shiftlab {

// Neumaier variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(const std::vector<double>& xs) {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

// `stderr` is a C macro, so the field is spelled std_error.
struct MeanStderr {
  double mean = 0.0;
  double std_error = std::numeric_limits<double>::quiet_NaN();
  std::size_t count = 0;
};

// Two-pass mean and standard error of the mean.  A single observation has an
// undefined standard error (NaN), not zero.
inline MeanStderr mean_stderr(const std::vector<double>& xs) {
  MeanStderr out;
  out.count = xs.size();
  if (xs.empty()) {
    out.mean = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.mean = compensated_sum(xs) / static_cast<double>(xs.size());
  if (xs.size() < 2) return out;
  CompensatedSum sq;
  for (double x : xs) {
    const double d = x - out.mean;
    sq.add(d * d);
  }
  const auto n = static_cast<double>(xs.size());
  out.std_error = std::sqrt(sq.value() / (n - 1.0) / n);
  return out;
}

}  // namespace shiftlab
