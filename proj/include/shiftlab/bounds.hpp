#pragma once
// Variance and bias bounds for the minimum-norm interpolator under covariate
// shift, plus the tightness brackets relating them.  Constants are handled in
// two modes: shape mode (c = 1, the default) reports the structural value of
// each bound; fitted mode rescales by a single empirically fitted constant.

#include <Eigen/Dense>

#include <cstddef>

#include "shiftlab/spectrum.hpp"

namespace shiftlab {

struct BoundConfig {
  std::size_t k = 0;
  std::size_t n = 0;
  double c = 1.0;  // constant multiplier, > 0
  double b = 1.0;  // benign threshold on rho_k
};

// V >= (1/(c n)) sum_i (t_i/s_i) min(1, s_i^2 / (s_{k+1}^2 (rho_k+1)^2)).
// Holds for any interpolating linear model; no benign condition required.
double variance_lower(const SpectrumPair& pair, const BoundConfig& cfg);

// V/c <= (1/n) sum_{i<=k} t_i/s_i + n sum_{i>k} t_i s_i / (sum_{i>k} s_i)^2.
// When rho_k < b the value is still returned and *benign_violated (if given)
// is set instead of refusing.
double variance_upper(const SpectrumPair& pair, const BoundConfig& cfg,
                      bool* benign_violated = nullptr);

// E[B] >= (1/c) (sum_{i<=k} t_i theta_i^2 / (1 + s_i/(s_{k+1} rho_k))^2
//               + sum_{i>k} t_i theta_i^2).
double bias_lower(const SpectrumPair& pair, const Eigen::VectorXd& theta_source,
                  const BoundConfig& cfg);

// B/c <= ||theta||^2 sum_i t_i / (1 + s_i/(s_{k+1} rho_k)).
double bias_upper(const SpectrumPair& pair, const Eigen::VectorXd& theta_source,
                  const BoundConfig& cfg, bool* benign_violated = nullptr);

struct BoundsReport {
  double v_lower = 0.0;
  double v_upper = 0.0;
  double b_lower = 0.0;
  double b_upper = 0.0;
  double rho_k = 0.0;
  double R_k = 0.0;
  bool benign_ok = false;  // rho_k >= b
};

// theta_source may be null when only variance bounds are wanted (bias fields
// are then zero).
BoundsReport bounds_report(const SpectrumPair& pair, const BoundConfig& cfg,
                           const Eigen::VectorXd* theta_source = nullptr);

struct TightnessReport {
  double v_ratio = 0.0;
  double v_bracket_lo = 0.0;
  double v_bracket_hi = 1.0;
  bool v_in_bracket = false;
  bool has_bias = false;  // false when theta is absent/zero or the bias upper bound vanishes
  double b_ratio = 0.0;
  double b_bracket_lo = 0.0;
  double b_bracket_hi = 1.0;
  bool b_in_bracket = true;  // vacuously true when has_bias is false
};

// Ratios lower/upper against the theorem brackets:
//   v_ratio in [b^-2 (1+b)^-2 / c^2, 1]
//   b_ratio in [min_{theta_i != 0} theta_i^2 / (||theta||^2 (1 + b^-1 s_1/s_{k+1})), 1]
// Out-of-bracket ratios are reported through the flags, not thrown.
TightnessReport tightness_ratios(const SpectrumPair& pair, const BoundConfig& cfg,
                                 const Eigen::VectorXd* theta_source = nullptr);

}  // namespace shiftlab
