#pragma once
// Beneficial/malignant classification of multiplicative covariate shifts and
// the mild/severe overparameterization regimes, at the variance-bound level:
// predicted gap dV = (alpha-1) k/n + (beta-1) n/R_k, regime from comparing
// n/R_k against C_ab k/n with C_ab = |(alpha-1)/(1-beta)|.

#include <cstddef>
#include <vector>

#include "shiftlab/spectrum.hpp"

namespace shiftlab {

enum class Verdict { Beneficial, Malignant, Neutral, Indeterminate };
enum class Regime { Mild, Severe, Boundary };

const char* to_string(Verdict v);
const char* to_string(Regime r);

struct TaxonomyOptions {
  double tol_rel = 0.05;       // |dV| below tol_rel * V_id marks Indeterminate
  double boundary_band = 0.10; // relative width of the regime Boundary band
  double b = 1.0;              // benign threshold used for the rho_k flag
};

struct TaxonomyReport {
  double c_alpha_beta = 0.0;  // may be +infinity
  double k_over_n = 0.0;
  double n_over_Rk = 0.0;
  Regime regime = Regime::Boundary;
  Verdict verdict = Verdict::Indeterminate;
  double predicted_delta_v = 0.0;
  double trace_source = 0.0;
  double trace_target = 0.0;
  bool benign_ok = false;  // rho_k >= b
};

TaxonomyReport classify_multiplicative(const Spectrum& source, std::size_t k, std::size_t n,
                                       double alpha, double beta,
                                       const TaxonomyOptions& options = {});

// Per-index factors: alpha_vec applies to indices 1..k, beta_vec to the
// tail.  Head statistic sum(alpha)/k and tail statistic
// sum(beta_i lambda_i^2)/sum(lambda_i^2) reduce the general case to the
// multiplicative one; constant factor vectors reproduce
// classify_multiplicative exactly.
TaxonomyReport classify_general(const Spectrum& source, std::size_t k, std::size_t n,
                                const std::vector<double>& alpha_vec,
                                const std::vector<double>& beta_vec,
                                const TaxonomyOptions& options = {});

enum class TraceOrdering { SourceLarger, TargetLarger, Equal };

struct TraceComparison {
  double trace_source = 0.0;
  double trace_target = 0.0;
  TraceOrdering ordering = TraceOrdering::Equal;
};

// Both traces accumulate head and tail identically, so the identity shift
// compares exactly Equal.
TraceComparison trace_condition(const Spectrum& source, std::size_t k, double alpha, double beta);

// alpha k/n + beta n/R_k; the tail term is dropped when the tail is empty or
// all-zero.
double robustness_value(const Spectrum& source, std::size_t k, std::size_t n, double alpha,
                        double beta);

}  // namespace shiftlab
