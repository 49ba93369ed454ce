#pragma once
// Minimum-norm interpolation theta_hat(xi) = X^T (X X^T)^+ xi.  The SVD path
// is the default (handles rank deficiency via a relative singular-value
// cutoff); the Gram path factorizes A = X X^T once with a Cholesky solve and
// silently falls back to the SVD when the factorization fails.  A solver
// object caches the factorization so many right-hand sides reuse it.

#include <Eigen/Dense>

#include <cstddef>

namespace shiftlab {

struct FitOptions {
  enum class Path { Svd, Gram };
  double tol = 1e-10;  // relative singular-value cutoff
  Path path = Path::Svd;
};

struct FitResult {
  Eigen::VectorXd theta_hat;
  std::size_t numerical_rank = 0;
  double gram_condition = 0.0;  // ratio of extreme retained singular values of X X^T
  double residual_norm = 0.0;   // || X theta_hat - xi ||_2
  bool used_gram_path = false;
};

class MniSolver {
 public:
  MniSolver(Eigen::MatrixXd X, FitOptions options = {});

  FitResult fit(const Eigen::VectorXd& xi) const;

  // Solves A w = rhs on the retained subspace (pseudo-inverse on the SVD
  // path).  rhs has length n.
  Eigen::VectorXd solve_gram(const Eigen::VectorXd& rhs) const;

  // tr(A^+ X diag(target) X^T A^+) = sum_j target_j ||A^+ x_j||^2 computed
  // without Monte Carlo.  target has length p.
  double normalized_variance(const Eigen::VectorXd& target) const;

  std::size_t numerical_rank() const { return rank_; }
  double gram_condition() const { return gram_condition_; }
  bool used_gram_path() const { return used_gram_; }
  const Eigen::MatrixXd& design() const { return X_; }

 private:
  Eigen::MatrixXd X_;
  FitOptions options_;
  bool used_gram_ = false;
  std::size_t rank_ = 0;
  double gram_condition_ = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt_;       // Gram path
  Eigen::MatrixXd svd_u_;                 // SVD path: thin factors of X
  Eigen::MatrixXd svd_v_;
  Eigen::VectorXd svd_sigma_;
};

// One-shot convenience wrappers.
FitResult mni_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& xi, FitOptions options = {});
Eigen::VectorXd predict(const Eigen::MatrixXd& X_new, const Eigen::VectorXd& theta);

}  // namespace shiftlab
