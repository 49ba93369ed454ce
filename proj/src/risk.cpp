#include "shiftlab/risk.hpp"

#include <stdexcept>
#include <vector>

#include "shiftlab/parallel.hpp"
#include "shiftlab/sampling.hpp"

namespace shiftlab {

double excess_risk_exact(const Eigen::VectorXd& theta, const Eigen::VectorXd& theta_ref,
                         const Spectrum& target) {
  if (theta.size() != theta_ref.size() ||
      static_cast<std::size_t>(theta.size()) != target.size()) {
    throw std::invalid_argument("excess_risk_exact dimension mismatch");
  }
  CompensatedSum s;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    const double d = theta[i] - theta_ref[i];
    s.add(target[static_cast<std::size_t>(i)] * d * d);
  }
  return s.value();
}

RiskReport decompose(const Eigen::MatrixXd& X, const Eigen::VectorXd& theta_source,
                     const Eigen::VectorXd& theta_target, const Spectrum& target,
                     const Eigen::VectorXd& noise, FitOptions options) {
  if (X.cols() != theta_source.size() || X.cols() != theta_target.size() ||
      static_cast<std::size_t>(X.cols()) != target.size() || X.rows() != noise.size()) {
    throw std::invalid_argument("decompose dimension mismatch");
  }
  const MniSolver solver(X, options);
  const Eigen::VectorXd theta_sig = solver.fit(X * theta_source).theta_hat;
  const Eigen::VectorXd theta_noi = solver.fit(noise).theta_hat;
  const Eigen::VectorXd theta_tot = solver.fit(X * theta_source + noise).theta_hat;

  RiskReport out;
  out.model_shift_M = excess_risk_exact(theta_source, theta_target, target);
  out.bias_B = excess_risk_exact(theta_source, theta_sig, target);
  out.raw_variance_Veps = excess_risk_exact(theta_noi, Eigen::VectorXd::Zero(X.cols()), target);
  CompensatedSum cross;
  for (Eigen::Index i = 0; i < X.cols(); ++i) {
    cross.add(target[static_cast<std::size_t>(i)] * (theta_target[i] - theta_source[i]) *
              (theta_source[i] - theta_sig[i]));
  }
  out.cross_term = 2.0 * cross.value();
  out.total_excess_risk = excess_risk_exact(theta_tot, theta_target, target);
  out.upper_bound_value = 4.0 * out.model_shift_M + 4.0 * out.bias_B + 2.0 * out.raw_variance_Veps;
  return out;
}

NormalizedVariance variance_normalized(const Eigen::MatrixXd& X, const Spectrum& target,
                                       const VarianceOptions& options) {
  if (static_cast<std::size_t>(X.cols()) != target.size()) {
    throw std::invalid_argument("variance_normalized dimension mismatch");
  }
  const MniSolver solver(X, options.fit);
  NormalizedVariance out;
  out.pseudo_inverse = solver.numerical_rank() < static_cast<std::size_t>(X.rows());
  if (out.pseudo_inverse && !options.allow_pseudo_inverse) {
    throw std::domain_error("Gram matrix is rank-deficient and pseudo-inverse fallback is off");
  }
  const Eigen::VectorXd t =
      Eigen::Map<const Eigen::VectorXd>(target.values().data(),
                                        static_cast<Eigen::Index>(target.size()));
  out.value = solver.normalized_variance(t);
  return out;
}

double bias_exact(const Eigen::MatrixXd& X, const Eigen::VectorXd& theta_source,
                  const Spectrum& target, FitOptions options) {
  if (X.cols() != theta_source.size() ||
      static_cast<std::size_t>(X.cols()) != target.size()) {
    throw std::invalid_argument("bias_exact dimension mismatch");
  }
  const Eigen::VectorXd theta_sig = mni_fit(X, X * theta_source, options).theta_hat;
  return excess_risk_exact(theta_source, theta_sig, target);
}

McResult monte_carlo(const std::function<double(std::size_t, SeedSpec)>& per_trial,
                     std::size_t trials, SeedSpec seed, unsigned n_threads) {
  if (trials == 0) throw std::invalid_argument("monte_carlo needs trials >= 1");
  std::vector<double> slots(trials, 0.0);
  parallel_for(trials, n_threads, [&](std::size_t t) {
    slots[t] = per_trial(t, seed.stream(4 * t));
  });
  const MeanStderr ms = mean_stderr(slots);
  McResult out;
  out.mean = ms.mean;
  out.std_error = ms.std_error;
  out.trials = trials;
  return out;
}

McResult mc_excess_risk(const McRiskConfig& config) {
  if (config.source == nullptr || config.target == nullptr || config.theta_source == nullptr ||
      config.theta_target == nullptr) {
    throw std::invalid_argument("mc_excess_risk needs source/target spectra and models");
  }
  const auto& source = *config.source;
  const auto& target = *config.target;
  const Eigen::VectorXd theta_s = *config.theta_source;
  const Eigen::VectorXd theta_t = *config.theta_target;
  const std::size_t n = config.n;
  const double noise_variance = config.noise_variance;
  const FitOptions fit = config.fit;
  return monte_carlo(
      [&, theta_s, theta_t, n, noise_variance, fit](std::size_t, SeedSpec trial_seed) {
        const Eigen::MatrixXd X = sample_design(n, source, trial_seed);
        const Labels labels = gen_labels(X, theta_s, noise_variance, trial_seed.stream(2));
        const Eigen::VectorXd theta_hat = mni_fit(X, labels.y, fit).theta_hat;
        return excess_risk_exact(theta_hat, theta_t, target);
      },
      config.trials, config.seed, config.n_threads);
}

}  // namespace shiftlab
