#include "shiftlab/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace shiftlab {

Eigen::MatrixXd sample_design(std::size_t n, const Spectrum& spectrum, SeedSpec seed) {
  if (n == 0) throw std::invalid_argument("sample_design needs n >= 1");
  const std::size_t p = spectrum.size();
  std::vector<double> sd(p);
  for (std::size_t j = 0; j < p; ++j) sd[j] = std::sqrt(spectrum[j]);
  Rng rng(seed);
  Eigen::MatrixXd X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const double g = rng.next_gaussian();
      X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          sd[j] == 0.0 ? 0.0 : sd[j] * g;
    }
  }
  return X;
}

Eigen::VectorXd sample_sphere_model(std::size_t p, SeedSpec seed) {
  if (p == 0) throw std::invalid_argument("sample_sphere_model needs p >= 1");
  Rng rng(seed);
  Eigen::VectorXd v(static_cast<Eigen::Index>(p));
  double norm = 0.0;
  do {
    for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = rng.next_gaussian();
    norm = v.norm();
  } while (norm < 1e-300);  // astronomically unlikely; keeps the division safe
  return v / norm;
}

Labels gen_labels(const Eigen::MatrixXd& X, const Eigen::VectorXd& theta, double noise_variance,
                  SeedSpec seed) {
  if (X.cols() != theta.size()) throw std::invalid_argument("gen_labels dimension mismatch");
  if (noise_variance < 0.0) throw std::invalid_argument("gen_labels needs noise_variance >= 0");
  Rng rng(seed);
  Labels out;
  out.noise.resize(X.rows());
  const double sd = std::sqrt(noise_variance);
  for (Eigen::Index i = 0; i < X.rows(); ++i) out.noise[i] = sd * rng.next_gaussian();
  out.y = X * theta + out.noise;
  return out;
}

Eigen::VectorXd flip_labels(const Eigen::VectorXd& y, double prob, SeedSpec seed) {
  if (prob < 0.0 || prob > 1.0) throw std::invalid_argument("flip probability must be in [0, 1]");
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] != 0.0 && y[i] != 1.0) throw std::invalid_argument("flip_labels needs binary labels");
  }
  Rng rng(seed);
  Eigen::VectorXd out = y;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (rng.next_double() < prob) out[i] = 1.0 - out[i];
  }
  return out;
}

}  // namespace shiftlab
