#include "shiftlab/empirical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "shiftlab/parallel.hpp"
#include "shiftlab/sampling.hpp"
#include "shiftlab/stats.hpp"

namespace shiftlab {

Spectrum covariance_spectrum(const Eigen::MatrixXd& X, bool center) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();
  if (n < 2) throw std::invalid_argument("covariance_spectrum needs n >= 2");
  if (!X.allFinite()) throw std::invalid_argument("covariance_spectrum needs finite entries");
  Eigen::MatrixXd Xc = X;
  if (center) Xc.rowwise() -= X.colwise().mean();

  std::vector<double> values(static_cast<std::size_t>(p), 0.0);
  const double inv_n = 1.0 / static_cast<double>(n);
  if (p <= n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Xc.transpose() * Xc * inv_n);
    for (Eigen::Index i = 0; i < p; ++i) values[static_cast<std::size_t>(i)] = eig.eigenvalues()[i];
  } else {
    // The nonzero spectrum of X^T X / n equals that of X X^T / n.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Xc * Xc.transpose() * inv_n);
    for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = eig.eigenvalues()[i];
  }
  for (auto& v : values) v = std::max(v, 0.0);
  std::sort(values.begin(), values.end(), std::greater<double>());
  return Spectrum(std::move(values));
}

namespace {

double classification_error(const Eigen::MatrixXd& X, const Eigen::VectorXd& labels,
                            const Eigen::VectorXd& theta) {
  const Eigen::VectorXd scores = X * theta;
  Eigen::Index wrong = 0;
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    const double predicted = scores[i] >= 0.5 ? 1.0 : 0.0;
    if (predicted != labels[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(scores.size());
}

}  // namespace

std::vector<BinaryExperimentRow> binary_experiment(const MatrixDataset& train,
                                                   const std::vector<MatrixDataset>& tests,
                                                   double flip_prob, std::size_t trials,
                                                   SeedSpec seed, FitOptions fit,
                                                   unsigned n_threads) {
  if (!train.labels) throw std::invalid_argument("training dataset needs labels");
  if (trials == 0) throw std::invalid_argument("binary_experiment needs trials >= 1");
  for (const auto& t : tests) {
    if (!t.labels) throw std::invalid_argument("test dataset '" + t.name + "' needs labels");
    if (t.X.cols() != train.X.cols()) {
      throw std::invalid_argument("test dataset '" + t.name + "' has mismatched dimension");
    }
  }

  const MniSolver solver(train.X, fit);
  const Eigen::VectorXd theta_clean = solver.fit(*train.labels).theta_hat;
  std::vector<double> clean_error(tests.size());
  for (std::size_t j = 0; j < tests.size(); ++j) {
    clean_error[j] = classification_error(tests[j].X, *tests[j].labels, theta_clean);
  }

  // slots[j][t] = excess error of test j in trial t.
  std::vector<std::vector<double>> slots(tests.size(), std::vector<double>(trials, 0.0));
  parallel_for(trials, n_threads, [&](std::size_t t) {
    const Eigen::VectorXd flipped = flip_labels(*train.labels, flip_prob, seed.stream(t));
    const Eigen::VectorXd theta_noisy = solver.fit(flipped).theta_hat;
    for (std::size_t j = 0; j < tests.size(); ++j) {
      slots[j][t] =
          classification_error(tests[j].X, *tests[j].labels, theta_noisy) - clean_error[j];
    }
  });

  std::vector<BinaryExperimentRow> out(tests.size());
  for (std::size_t j = 0; j < tests.size(); ++j) {
    const MeanStderr ms = mean_stderr(slots[j]);
    out[j].test_name = tests[j].name;
    out[j].flip_prob = flip_prob;
    out[j].mean_excess_error = ms.mean;
    out[j].std_error = ms.std_error;
    out[j].trials = trials;
  }
  return out;
}

}  // namespace shiftlab
