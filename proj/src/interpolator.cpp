#include "shiftlab/interpolator.hpp"

#include <cmath>
#include <stdexcept>

#include "shiftlab/stats.hpp"

namespace shiftlab {

MniSolver::MniSolver(Eigen::MatrixXd X, FitOptions options)
    : X_(std::move(X)), options_(options) {
  if (X_.rows() == 0 || X_.cols() == 0) throw std::invalid_argument("design must be non-empty");
  if (!X_.allFinite()) throw std::invalid_argument("design must be finite");
  if (!(options_.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  if (options_.path == FitOptions::Path::Gram) {
    Eigen::MatrixXd A = X_ * X_.transpose();
    llt_.compute(A);
    if (llt_.info() == Eigen::Success && llt_.rcond() > 0.0) {
      used_gram_ = true;
      rank_ = static_cast<std::size_t>(X_.rows());
      gram_condition_ = 1.0 / llt_.rcond();
      return;
    }
    // Fall through to the SVD when A is numerically singular.
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(X_, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd_u_ = svd.matrixU();
  svd_v_ = svd.matrixV();
  svd_sigma_ = svd.singularValues();
  const double sigma_max = svd_sigma_.size() > 0 ? svd_sigma_[0] : 0.0;
  rank_ = 0;
  if (sigma_max > 0.0) {
    const double cutoff = options_.tol * sigma_max;
    for (Eigen::Index i = 0; i < svd_sigma_.size(); ++i) {
      if (svd_sigma_[i] > cutoff) ++rank_;
    }
  }
  if (rank_ > 0) {
    const double smin = svd_sigma_[static_cast<Eigen::Index>(rank_) - 1];
    gram_condition_ = (sigma_max / smin) * (sigma_max / smin);  // A = X X^T has squared spectrum
  }
}

FitResult MniSolver::fit(const Eigen::VectorXd& xi) const {
  if (xi.size() != X_.rows()) throw std::invalid_argument("fit target length must equal n");
  FitResult out;
  out.numerical_rank = rank_;
  out.gram_condition = gram_condition_;
  out.used_gram_path = used_gram_;
  if (used_gram_) {
    out.theta_hat = X_.transpose() * llt_.solve(xi);
  } else if (rank_ == 0) {
    out.theta_hat = Eigen::VectorXd::Zero(X_.cols());
  } else {
    const auto r = static_cast<Eigen::Index>(rank_);
    Eigen::VectorXd coeffs = svd_u_.leftCols(r).transpose() * xi;
    coeffs.array() /= svd_sigma_.head(r).array();
    out.theta_hat = svd_v_.leftCols(r) * coeffs;
  }
  out.residual_norm = (X_ * out.theta_hat - xi).norm();
  return out;
}

Eigen::VectorXd MniSolver::solve_gram(const Eigen::VectorXd& rhs) const {
  if (rhs.size() != X_.rows()) throw std::invalid_argument("solve_gram rhs length must equal n");
  if (used_gram_) return llt_.solve(rhs);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(X_.rows());
  if (rank_ == 0) return out;
  const auto r = static_cast<Eigen::Index>(rank_);
  Eigen::VectorXd coeffs = svd_u_.leftCols(r).transpose() * rhs;
  coeffs.array() /= svd_sigma_.head(r).array().square();
  return svd_u_.leftCols(r) * coeffs;
}

double MniSolver::normalized_variance(const Eigen::VectorXd& target) const {
  if (target.size() != X_.cols()) throw std::invalid_argument("target length must equal p");
  CompensatedSum acc;
  if (used_gram_) {
    // Columns of W = A^{-1} X give ||A^{-1} x_j||^2 directly.
    const Eigen::MatrixXd W = llt_.solve(X_);
    for (Eigen::Index j = 0; j < X_.cols(); ++j) {
      acc.add(target[j] * W.col(j).squaredNorm());
    }
    return acc.value();
  }
  if (rank_ == 0) return 0.0;
  // A^+ x_j = U diag(1/sigma^2) U^T X e_j and X = U diag(sigma) V^T give
  // ||A^+ x_j||^2 = sum_m V(j,m)^2 / sigma_m^2.
  const auto r = static_cast<Eigen::Index>(rank_);
  for (Eigen::Index m = 0; m < r; ++m) {
    CompensatedSum col;
    for (Eigen::Index j = 0; j < X_.cols(); ++j) {
      col.add(target[j] * svd_v_(j, m) * svd_v_(j, m));
    }
    acc.add(col.value() / (svd_sigma_[m] * svd_sigma_[m]));
  }
  return acc.value();
}

FitResult mni_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& xi, FitOptions options) {
  return MniSolver(X, options).fit(xi);
}

Eigen::VectorXd predict(const Eigen::MatrixXd& X_new, const Eigen::VectorXd& theta) {
  if (X_new.cols() != theta.size()) throw std::invalid_argument("predict dimension mismatch");
  return X_new * theta;
}

}  // namespace shiftlab
