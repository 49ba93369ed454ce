#pragma once
// Spectrum estimation and the binary-classification harness for matrix
// datasets: estimate covariance eigenvalues from data, and measure the
// excess classification error of the minimum-norm interpolator trained on
// label-flipped data relative to the clean-trained baseline.

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/interpolator.hpp"
#include "shiftlab/rng.hpp"
#include "shiftlab/spectrum.hpp"

namespace shiftlab {

struct MatrixDataset {
  Eigen::MatrixXd X;  // rows are observations
  std::optional<Eigen::VectorXd> labels;  // binary when present
  std::string name;
};

// Eigenvalues of X^T X / n sorted descending (computed through the smaller
// Gram side; tiny negative round-off is clamped to zero).  center = true
// subtracts the column means of X first.
Spectrum covariance_spectrum(const Eigen::MatrixXd& X, bool center = false);

struct BinaryExperimentRow {
  std::string test_name;
  double flip_prob = 0.0;
  double mean_excess_error = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

// Per trial: flip the training labels with flip_prob, fit the MNI, threshold
// predictions at 0.5 on every test set, and report the classification-error
// excess over the clean-trained fit.  Deterministic given the seed and
// invariant to the order of test sets.
std::vector<BinaryExperimentRow> binary_experiment(const MatrixDataset& train,
                                                   const std::vector<MatrixDataset>& tests,
                                                   double flip_prob, std::size_t trials,
                                                   SeedSpec seed, FitOptions fit = {},
                                                   unsigned n_threads = 1);

}  // namespace shiftlab
