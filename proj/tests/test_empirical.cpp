#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "shiftlab/empirical.hpp"
#include "shiftlab/sampling.hpp"

using namespace shiftlab;

namespace {
const SeedSpec kSeed{31337, 0};

MatrixDataset labelled(Eigen::MatrixXd X, const Eigen::VectorXd& w, std::string name) {
  MatrixDataset d;
  d.labels = (X * w).unaryExpr([](double s) { return s > 0.0 ? 1.0 : 0.0; });
  d.X = std::move(X);
  d.name = std::move(name);
  return d;
}
}  // namespace

TEST_CASE("covariance_spectrum exact small cases") {
  Eigen::MatrixXd rep(3, 3);
  rep.row(0) << 1.0, 2.0, 2.0;
  rep.row(1) = rep.row(0);
  rep.row(2) = rep.row(0);
  const Spectrum s = covariance_spectrum(rep);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == doctest::Approx(9.0).epsilon(1e-12));  // ||r||^2
  CHECK(s[1] <= 1e-12);
  CHECK(s[2] <= 1e-12);

  Eigen::MatrixXd ortho(2, 2);
  ortho << 2.0, 0.0, 0.0, 1.0;
  const Spectrum o = covariance_spectrum(ortho);
  CHECK(o[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(o[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("covariance_spectrum is consistent at large n") {
  const Spectrum truth = make_decay(DecayLaw{DecayLaw::Kind::Power, 1.0, 1.0}, 20);
  const Eigen::MatrixXd X = sample_design(10000, truth, kSeed.stream(0));
  const Spectrum est = covariance_spectrum(X);
  for (std::size_t j = 0; j < truth.size(); ++j) {
    CHECK(est[j] == doctest::Approx(truth[j]).epsilon(0.10));
  }
}

TEST_CASE("covariance_spectrum invariants on both gram sides") {
  for (const auto& [n, p] : std::vector<std::pair<std::size_t, std::size_t>>{{12, 5}, {3, 10}}) {
    const Eigen::MatrixXd X =
        sample_design(n, Spectrum(std::vector<double>(p, 1.0)), kSeed.stream(1));
    const Spectrum s = covariance_spectrum(X);
    REQUIRE(s.size() == p);
    CHECK(s.non_increasing());
    CHECK(s[s.size() - 1] >= 0.0);
    CHECK(s.sum() ==
          doctest::Approx(X.squaredNorm() / static_cast<double>(n)).epsilon(1e-8));
    // At most min(n, p) eigenvalues can be nonzero.
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] > 1e-10 * s[0]) ++nonzero;
    }
    CHECK(nonzero <= std::min(n, p));
  }
}

TEST_CASE("covariance_spectrum centering removes a constant column") {
  Eigen::MatrixXd X(3, 2);
  X << 5.0, 1.0, 5.0, -1.0, 5.0, 0.0;
  const Spectrum raw = covariance_spectrum(X);
  CHECK(raw[0] >= 24.9);
  const Spectrum centered = covariance_spectrum(X, true);
  CHECK(centered[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(centered[1] <= 1e-12);

  CHECK_THROWS_AS(covariance_spectrum(Eigen::MatrixXd::Zero(1, 4)), std::invalid_argument);
}

TEST_CASE("binary_experiment zero flip probability gives identically zero excess") {
  const std::size_t n = 15, p = 30;
  const Spectrum spec = make_spiked({3, 1.0, 0.01, p});
  Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
  w[0] = 1.0;
  const MatrixDataset train = labelled(sample_design(n, spec, kSeed.stream(10)), w, "train");
  const std::vector<MatrixDataset> tests = {
      labelled(sample_design(20, spec, kSeed.stream(11)), w, "fresh"),
      MatrixDataset{train.X, train.labels, "self"},
  };
  const auto rows = binary_experiment(train, tests, 0.0, 8, kSeed.stream(12));
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.mean_excess_error == 0.0);
    CHECK(row.std_error == 0.0);
    CHECK(row.trials == 8);
  }
}

TEST_CASE("separable instance interpolates its own sample perfectly") {
  const std::size_t n = 15, p = 40;
  const Spectrum spec = make_spiked({2, 1.0, 0.05, p});
  Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
  w[0] = 1.0;
  const MatrixDataset train = labelled(sample_design(n, spec, kSeed.stream(20)), w, "train");
  // Interpolation reproduces the training labels exactly, so the self-test
  // error of the clean fit is 0 and excess stays 0 under flip_prob = 0.
  const Eigen::VectorXd theta = mni_fit(train.X, *train.labels).theta_hat;
  const Eigen::VectorXd scores = train.X * theta;
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    const double predicted = scores[i] >= 0.5 ? 1.0 : 0.0;
    CHECK(predicted == (*train.labels)[i]);
  }
  const auto rows =
      binary_experiment(train, {MatrixDataset{train.X, train.labels, "self"}}, 0.0, 3,
                        kSeed.stream(21));
  CHECK(rows[0].mean_excess_error == 0.0);
}

namespace {
// Rows of `raw` shifted by `mu` along coordinate 1 (an intercept-carrying mean
// direction, as in uncentered image data), labelled by the sign of coordinate
// 0, and filtered to margin `gamma` so label-ambiguous boundary points do not
// dilute the comparison.
MatrixDataset sign_planted(Eigen::MatrixXd raw, double mu, double gamma, std::size_t want,
                           std::string name) {
  raw.col(1).array() += mu;
  MatrixDataset d;
  d.name = std::move(name);
  d.X.resize(want, raw.cols());
  Eigen::VectorXd y(want);
  std::size_t got = 0;
  for (Eigen::Index i = 0; i < raw.rows() && got < want; ++i) {
    const double s = raw(i, 0);
    if (std::abs(s) < gamma) continue;
    d.X.row(got) = raw.row(i);
    y[got] = s > 0.0 ? 1.0 : 0.0;
    ++got;
  }
  REQUIRE(got == want);
  d.labels = y;
  return d;
}
}  // namespace

TEST_CASE("tail blur hurts less than tail noise under label flips") {
  // Flipped labels are memorized through the low-variance tail, so scaling the
  // tail up (noise) amplifies the memorized junk in test scores while scaling
  // it down (blur) suppresses it. The two test sets share one underlying draw
  // (same points, different tail scale, like corrupting the same images), and
  // near-boundary points are filtered so the noisy model's errors come from
  // tail amplification rather than label ambiguity.
  const std::size_t n = 120, test_rows = 2000, pool = 16000;
  const double mu = 3.0, gamma = 1.25;
  const SeedSpec seed{14, 0};
  const Spectrum source = make_spiked({10, 1.0, 1e-6, 1000});
  const Spectrum blur_spec = apply_shift(source, ShiftSpec::multiplicative(10, 1.0, 0.5)).target;
  const Spectrum noise_spec = apply_shift(source, ShiftSpec::multiplicative(10, 1.0, 2.0)).target;
  const MatrixDataset train = sign_planted(sample_design(n, source, seed), mu, 0.0, n, "train");
  const std::vector<MatrixDataset> tests = {
      sign_planted(sample_design(pool, blur_spec, seed.stream(1)), mu, gamma, test_rows, "blur"),
      sign_planted(sample_design(pool, noise_spec, seed.stream(1)), mu, gamma, test_rows, "noise"),
  };
  const auto rows = binary_experiment(train, tests, 0.3, 50, seed.stream(3));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].test_name == "blur");
  CHECK(rows[0].mean_excess_error < rows[1].mean_excess_error);
  // The ordering is a real effect, not a seed artifact: require a 2-sigma gap.
  const double gap = rows[1].mean_excess_error - rows[0].mean_excess_error;
  const double se = std::sqrt(rows[0].std_error * rows[0].std_error +
                              rows[1].std_error * rows[1].std_error);
  CHECK(gap > 2.0 * se);

  // Determinism and order invariance.
  const auto again = binary_experiment(train, tests, 0.3, 50, seed.stream(3));
  CHECK(again[0].mean_excess_error == rows[0].mean_excess_error);
  CHECK(again[1].std_error == rows[1].std_error);
  const std::vector<MatrixDataset> swapped = {tests[1], tests[0]};
  const auto rev = binary_experiment(train, swapped, 0.3, 50, seed.stream(3));
  CHECK(rev[1].mean_excess_error == rows[0].mean_excess_error);
  CHECK(rev[0].mean_excess_error == rows[1].mean_excess_error);
}

TEST_CASE("binary_experiment input validation") {
  MatrixDataset unlabeled;
  unlabeled.X = Eigen::MatrixXd::Identity(3, 3);
  unlabeled.name = "u";
  CHECK_THROWS_AS(binary_experiment(unlabeled, {}, 0.1, 2, kSeed), std::invalid_argument);

  MatrixDataset train = unlabeled;
  train.labels = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(binary_experiment(train, {unlabeled}, 0.1, 2, kSeed), std::invalid_argument);
  MatrixDataset wrong_dim = train;
  wrong_dim.X = Eigen::MatrixXd::Identity(2, 2);
  wrong_dim.labels = Eigen::VectorXd::Zero(2);
  CHECK_THROWS_AS(binary_experiment(train, {wrong_dim}, 0.1, 2, kSeed), std::invalid_argument);
  CHECK_THROWS_AS(binary_experiment(train, {}, 0.1, 0, kSeed), std::invalid_argument);
  CHECK_THROWS_AS(binary_experiment(train, {}, 1.5, 2, kSeed), std::invalid_argument);
}
