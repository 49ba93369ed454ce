#pragma once
// Seedable generation of Gaussian designs, sphere-uniform models, noisy
// labels, and label flips.  Every operation consumes exactly one RNG stream
// derived from its SeedSpec, so trial-level code can assign disjoint stream
// ids per random object and remain schedule-independent.

#include <Eigen/Dense>

#include "shiftlab/rng.hpp"
#include "shiftlab/spectrum.hpp"

namespace shiftlab {

struct RegressionInstance {
  Eigen::MatrixXd X;             // n x p, rows are observations
  Eigen::VectorXd y;             // length n
  Eigen::VectorXd theta_source;  // length p
  Eigen::VectorXd theta_target;  // length p
  Eigen::VectorXd noise;         // length n
  double noise_variance = 0.0;
};

// Rows are independent N(0, diag(spectrum)).  Entry (i, j) consumes one
// Gaussian draw even when lambda_j = 0, so the stream layout does not depend
// on the spectrum's zero pattern.
Eigen::MatrixXd sample_design(std::size_t n, const Spectrum& spectrum, SeedSpec seed);

// Uniform on the unit sphere: normalized Gaussian vector.
Eigen::VectorXd sample_sphere_model(std::size_t p, SeedSpec seed);

struct Labels {
  Eigen::VectorXd y;
  Eigen::VectorXd noise;
};

// y = X theta + noise with noise ~ N(0, noise_variance) iid.
Labels gen_labels(const Eigen::MatrixXd& X, const Eigen::VectorXd& theta, double noise_variance,
                  SeedSpec seed);

// Entries must be exactly 0.0 or 1.0; each is flipped independently with
// probability prob.
Eigen::VectorXd flip_labels(const Eigen::VectorXd& y, double prob, SeedSpec seed);

}  // namespace shiftlab
