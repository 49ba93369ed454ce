#pragma once
// Exact out-of-distribution excess-risk decomposition for the minimum-norm
// interpolator under a diagonal target covariance: model-shift, bias, and
// variance terms plus the cross term, together with the per-draw upper bound
// R <= 4M + 4B + 2 V_eps and the Monte-Carlo counterpart.

#include <Eigen/Dense>

#include <cstddef>
#include <functional>

#include "shiftlab/interpolator.hpp"
#include "shiftlab/rng.hpp"
#include "shiftlab/spectrum.hpp"
#include "shiftlab/stats.hpp"

namespace shiftlab {

// || theta - theta_ref ||^2_{diag(target)}.
double excess_risk_exact(const Eigen::VectorXd& theta, const Eigen::VectorXd& theta_ref,
                         const Spectrum& target);

struct RiskReport {
  double model_shift_M = 0.0;        // ||theta_s - theta_t||^2_target
  double bias_B = 0.0;               // ||theta_s - theta_hat(X theta_s)||^2_target
  double raw_variance_Veps = 0.0;    // ||theta_hat(noise)||^2_target
  double cross_term = 0.0;           // 2 (theta_t - theta_s)^T Sigma_t (theta_s - theta_hat(X theta_s))
  double total_excess_risk = 0.0;    // ||theta_hat(y) - theta_t||^2_target
  double upper_bound_value = 0.0;    // 4M + 4B + 2 V_eps
};

// Decomposes the excess risk of theta_hat(y), y = X theta_source + noise,
// against theta_target under diag(target).  Linearity of the interpolation
// map gives total = M + B + V_eps + cross + (mixed noise terms); the report
// is exact for the particular noise realization passed in.
RiskReport decompose(const Eigen::MatrixXd& X, const Eigen::VectorXd& theta_source,
                     const Eigen::VectorXd& theta_target, const Spectrum& target,
                     const Eigen::VectorXd& noise, FitOptions options = {});

struct NormalizedVariance {
  double value = 0.0;
  bool pseudo_inverse = false;  // true when the Gram matrix was rank-deficient
};

struct VarianceOptions {
  bool allow_pseudo_inverse = true;
  FitOptions fit;
};

// V = tr(A^+ X diag(target) X^T A^+), the variance term normalized by the
// noise variance.  With allow_pseudo_inverse = false a rank-deficient Gram
// matrix raises an error instead of silently projecting.
NormalizedVariance variance_normalized(const Eigen::MatrixXd& X, const Spectrum& target,
                                       const VarianceOptions& options = {});

// ||theta_source - theta_hat(X theta_source)||^2_target for a fixed design.
double bias_exact(const Eigen::MatrixXd& X, const Eigen::VectorXd& theta_source,
                  const Spectrum& target, FitOptions options = {});

struct McResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

// Averages per_trial(trial_index, seed-for-trial) over trials, running
// work items in parallel and aggregating in canonical order.
McResult monte_carlo(const std::function<double(std::size_t, SeedSpec)>& per_trial,
                     std::size_t trials, SeedSpec seed, unsigned n_threads = 1);

struct McRiskConfig {
  std::size_t n = 0;
  const Spectrum* source = nullptr;        // design covariance
  const Spectrum* target = nullptr;        // evaluation covariance
  const Eigen::VectorXd* theta_source = nullptr;
  const Eigen::VectorXd* theta_target = nullptr;
  double noise_variance = 0.0;
  std::size_t trials = 1;
  SeedSpec seed;
  unsigned n_threads = 1;
  FitOptions fit;
};

// Fresh (X, noise) per trial; streams: trial t uses seed.stream_id + 4t for
// the design and + 4t + 2 for the noise.
McResult mc_excess_risk(const McRiskConfig& config);

}  // namespace shiftlab
