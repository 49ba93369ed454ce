// End-to-end tests of the shiftlab binary.  The test runner exports
// SHIFTLAB_BIN; every case shells out to it and inspects exit codes plus the
// emitted JSON/CSV.  Exit-code contract: 0 ok, 2 bad config/input, 3 property
// failure.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "shiftlab/bounds.hpp"

#include "shiftlab/harness.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/sampling.hpp"
#include "shiftlab/spectrum.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace shiftlab;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SHIFTLAB_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SHIFTLAB_BIN must point at the shiftlab binary");
  const std::string cmd = "\"" + std::string(bin) + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path("cli_tmp") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(start, end - start);
    if (!line.empty()) {
      std::vector<std::string> cells;
      std::size_t c = 0;
      while (true) {
        const std::size_t comma = line.find(',', c);
        if (comma == std::string::npos) {
          cells.push_back(line.substr(c));
          break;
        }
        cells.push_back(line.substr(c, comma - c));
        c = comma + 1;
      }
      rows.push_back(std::move(cells));
    }
    start = end + 1;
  }
  return rows;
}

const char* kFig1Spiked = "--spiked 10 1.0 1e-6 1000";

}  // namespace

TEST_CASE("spectrum subcommand reports effective ranks as JSON") {
  const CliResult r = run_cli(std::string("spectrum ") + kFig1Spiked +
                              " --n 60 --table-max 12");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);

  CHECK(j.at("p").get<std::size_t>() == 1000);
  CHECK(j.at("n").get<std::size_t>() == 60);
  CHECK(j.at("b").get<double>() == 1.0);
  CHECK(j.at("trace").get<double>() == doctest::Approx(10.0 + 990.0 * 1e-6));
  CHECK(j.at("values").size() == 1000);
  CHECK(j.at("values")[0].get<double>() == 1.0);
  CHECK(j.at("values")[999].get<double>() == 1e-6);
  REQUIRE(!j.at("k_star").is_null());
  CHECK(j.at("k_star").get<std::size_t>() == 10);
  CHECK(j.at("kstar_over_n").get<double>() == doctest::Approx(10.0 / 60.0));
  CHECK(j.at("n_over_R_kstar").get<double>() == doctest::Approx(60.0 / 990.0));
  CHECK(j.at("degenerate_tail").get<bool>() == false);

  REQUIRE(j.at("rho_table").size() == 12);
  REQUIRE(j.at("R_table").size() == 12);
  const json& rho10 = j.at("rho_table")[10];
  CHECK(rho10.at("k").get<std::size_t>() == 10);
  CHECK(rho10.at("rho").get<double>() == doctest::Approx(16.5));
  const json& r10 = j.at("R_table")[10];
  CHECK(r10.at("R").get<double>() == doctest::Approx(990.0));
}

TEST_CASE("spectrum subcommand validates its inputs") {
  CHECK(run_cli(std::string("spectrum ") + kFig1Spiked).exit_code == 2);  // missing --n
  CHECK(run_cli("spectrum --n 60").exit_code == 2);                       // no source
  CHECK(run_cli(std::string("spectrum ") + kFig1Spiked +
                " --decay power 1 1 100 --n 60")
            .exit_code == 2);  // two sources
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);            // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code == 2);  // unknown subcommand
}

TEST_CASE("generate writes a reproducible instance directory") {
  const fs::path dir = fresh_dir("gen_a");
  const std::string common =
      "generate --spiked 4 1.0 0.01 30 --n 12 --noise-variance 0.5 --seed 77 --out ";
  const CliResult r = run_cli(common + q(dir));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("wrote instance to") != std::string::npos);
  for (const char* name : {"X.csv", "y.csv", "theta.csv", "noise.csv", "meta.json"}) {
    CHECK(fs::exists(dir / name));
  }

  const Eigen::MatrixXd X = read_matrix_csv((dir / "X.csv").string());
  const Eigen::VectorXd y = read_vector_csv((dir / "y.csv").string());
  const Eigen::VectorXd theta = read_vector_csv((dir / "theta.csv").string());
  const Eigen::VectorXd noise = read_vector_csv((dir / "noise.csv").string());
  CHECK(X.rows() == 12);
  CHECK(X.cols() == 30);
  CHECK(y.size() == 12);
  CHECK(theta.size() == 30);
  CHECK(noise.size() == 12);
  CHECK((y - X * theta - noise).cwiseAbs().maxCoeff() < 1e-12);

  const json meta = json::parse(read_text_file((dir / "meta.json").string()));
  CHECK(meta.at("n").get<std::size_t>() == 12);
  CHECK(meta.at("p").get<std::size_t>() == 30);
  CHECK(meta.at("noise_variance").get<double>() == 0.5);
  CHECK(meta.at("master_seed").get<std::uint64_t>() == 77);
  CHECK(meta.at("streams").at("design").get<int>() == 0);
  CHECK(meta.at("streams").at("theta").get<int>() == 1);
  CHECK(meta.at("streams").at("noise").get<int>() == 2);
  CHECK(meta.at("rng").contains("algorithm"));
  CHECK(meta.at("source_spectrum").size() == 30);
  CHECK(meta.at("source_spectrum")[0].get<double>() == 1.0);
  CHECK(meta.at("source_spectrum")[4].get<double>() == 0.01);

  // Same seed reproduces the design byte for byte; another seed does not.
  const fs::path dir_b = fresh_dir("gen_b");
  REQUIRE(run_cli(common + q(dir_b)).exit_code == 0);
  CHECK(read_text_file((dir / "X.csv").string()) ==
        read_text_file((dir_b / "X.csv").string()));
  const fs::path dir_c = fresh_dir("gen_c");
  REQUIRE(run_cli("generate --spiked 4 1.0 0.01 30 --n 12 --noise-variance 0.5 "
                  "--seed 78 --out " +
                  q(dir_c))
              .exit_code == 0);
  CHECK(read_text_file((dir / "X.csv").string()) !=
        read_text_file((dir_c / "X.csv").string()));

  CHECK(run_cli("generate --spiked 4 1.0 0.01 30 --n 12").exit_code == 2);  // no --out
}

TEST_CASE("fit emits theta_hat plus metadata on both solver paths") {
  const fs::path dir = fresh_dir("fit_inst");
  REQUIRE(run_cli("generate --spiked 4 1.0 0.01 30 --n 12 --seed 5 --out " + q(dir))
              .exit_code == 0);

  REQUIRE(run_cli("fit --instance " + q(dir) + " --path svd").exit_code == 0);
  const json svd_meta = json::parse(read_text_file((dir / "fit_meta.json").string()));
  CHECK(svd_meta.at("path").get<std::string>() == "svd");
  CHECK(svd_meta.at("used_gram_path").get<bool>() == false);
  CHECK(svd_meta.at("numerical_rank").get<std::size_t>() == 12);
  CHECK(svd_meta.at("gram_condition").get<double>() >= 1.0);
  CHECK(svd_meta.at("residual_norm").get<double>() < 1e-8);
  CHECK(svd_meta.at("tol").get<double>() == 1e-10);
  const Eigen::VectorXd theta_svd = read_vector_csv((dir / "theta_hat.csv").string());
  REQUIRE(theta_svd.size() == 30);

  const fs::path gram_out = fresh_dir("fit_gram");
  REQUIRE(run_cli("fit --instance " + q(dir) + " --path gram --out " + q(gram_out))
              .exit_code == 0);
  const json gram_meta =
      json::parse(read_text_file((gram_out / "fit_meta.json").string()));
  CHECK(gram_meta.at("path").get<std::string>() == "gram");
  CHECK(gram_meta.at("used_gram_path").get<bool>() == true);
  CHECK(gram_meta.at("numerical_rank").get<std::size_t>() == 12);
  const Eigen::VectorXd theta_gram =
      read_vector_csv((gram_out / "theta_hat.csv").string());
  REQUIRE(theta_gram.size() == 30);
  CHECK((theta_svd - theta_gram).norm() <= 1e-8 * (1.0 + theta_svd.norm()));

  // Loose files instead of an instance directory.
  const fs::path loose_out = fresh_dir("fit_loose");
  REQUIRE(run_cli("fit --x " + q(dir / "X.csv") + " --y " + q(dir / "y.csv") +
                  " --out " + q(loose_out))
              .exit_code == 0);
  CHECK(fs::exists(loose_out / "theta_hat.csv"));

  CHECK(run_cli("fit").exit_code == 2);                                // no inputs
  CHECK(run_cli("fit --instance " + q(dir) + " --path lu").exit_code == 2);
}

TEST_CASE("risk decompose reports the exact split and its deterministic bound") {
  const fs::path dir = fresh_dir("risk_inst");
  REQUIRE(run_cli("generate --spiked 4 1.0 0.01 30 --n 12 --noise-variance 0.5 "
                  "--seed 21 --out " +
                  q(dir))
              .exit_code == 0);
  const Spectrum source = make_spiked({4, 1.0, 0.01, 30});
  const Spectrum target = apply_shift(source, ShiftSpec::multiplicative(4, 1.5, 0.5)).target;
  const fs::path target_csv = dir / "target.csv";
  write_spectrum_csv(target, target_csv.string());

  const CliResult r =
      run_cli("risk --instance " + q(dir) + " --target " + q(target_csv));
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const double M = j.at("model_shift_M").get<double>();
  const double B = j.at("bias_B").get<double>();
  const double V = j.at("raw_variance_Veps").get<double>();
  const double cross = j.at("cross_term").get<double>();
  const double total = j.at("total_excess_risk").get<double>();
  const double upper = j.at("upper_bound_value").get<double>();
  CHECK(M == 0.0);  // theta_target defaults to the instance model
  CHECK(cross == 0.0);
  CHECK(B >= 0.0);
  CHECK(V >= 0.0);
  CHECK(upper == doctest::Approx(4.0 * M + 4.0 * B + 2.0 * V).epsilon(1e-12));
  CHECK(total <= upper * (1.0 + 1e-12) + 1e-15);
  // The per-draw total differs from M + B + V + cross only by the mixed
  // noise terms, which Cauchy-Schwarz caps at 2 sqrt((M+B+cross) V).
  CHECK(std::abs(total - (M + B + V + cross)) <=
        2.0 * std::sqrt(std::max(0.0, M + B + cross) * V) + 1e-12);

  // A genuinely shifted model makes the mismatch term strictly positive.
  const Eigen::VectorXd theta = read_vector_csv((dir / "theta.csv").string());
  const fs::path theta2_csv = dir / "theta_target.csv";
  write_vector_csv(Eigen::VectorXd(2.0 * theta), theta2_csv.string());
  const CliResult r2 = run_cli("risk --instance " + q(dir) + " --target " +
                               q(target_csv) + " --theta-target " + q(theta2_csv));
  REQUIRE(r2.exit_code == 0);
  const json j2 = json::parse(r2.out);
  CHECK(j2.at("model_shift_M").get<double>() > 0.0);
  CHECK(j2.at("total_excess_risk").get<double>() <=
        j2.at("upper_bound_value").get<double>() * (1.0 + 1e-12) + 1e-15);

  CHECK(run_cli("risk --instance " + q(dir)).exit_code == 2);  // --target required
}

TEST_CASE("risk Monte-Carlo mode is seeded and thread-count invariant") {
  const fs::path dir = fresh_dir("risk_mc");
  // Underparameterized and noiseless: the interpolator recovers the model
  // exactly, so every fresh-design trial has zero excess risk.
  REQUIRE(run_cli("generate --spiked 2 1.0 0.5 5 --n 25 --noise-variance 0.0 "
                  "--seed 9 --out " +
                  q(dir))
              .exit_code == 0);
  const fs::path target_csv = dir / "target.csv";
  write_spectrum_csv(make_spiked({2, 1.0, 0.5, 5}), target_csv.string());

  const std::string cmd = "risk --instance " + q(dir) + " --target " + q(target_csv) +
                          " --mc-trials 6 --seed 11";
  const CliResult a = run_cli(cmd);
  REQUIRE(a.exit_code == 0);
  const auto rows = parse_csv(a.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"mean", "stderr", "trials"});
  REQUIRE(rows[1].size() == 3);
  CHECK(std::strtod(rows[1][0].c_str(), nullptr) <= 1e-18);
  CHECK(std::strtod(rows[1][1].c_str(), nullptr) <= 1e-18);
  CHECK(rows[1][2] == "6");

  const CliResult b = run_cli(cmd);
  CHECK(a.out == b.out);
  const CliResult c = run_cli(cmd + " --threads 3");
  CHECK(a.out == c.out);
}

TEST_CASE("bounds defaults k to k_star and enforces the tightness bracket") {
  const fs::path dir = fresh_dir("bounds");
  const Spectrum source = make_spiked({10, 1.0, 1e-6, 1000});
  const Spectrum target =
      apply_shift(source, ShiftSpec::multiplicative(10, 2.0, 0.1)).target;
  const fs::path src_csv = dir / "source.csv";
  const fs::path tgt_csv = dir / "target.csv";
  write_spectrum_csv(source, src_csv.string());
  write_spectrum_csv(target, tgt_csv.string());

  const CliResult r =
      run_cli("bounds --source " + q(src_csv) + " --target " + q(tgt_csv) + " --n 60");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("k").get<std::size_t>() == 10);  // k_star picked automatically
  CHECK(j.at("n").get<std::size_t>() == 60);
  CHECK(j.at("rho_k").get<double>() == doctest::Approx(16.5));
  CHECK(j.at("R_k").get<double>() == doctest::Approx(990.0));
  CHECK(j.at("benign_ok").get<bool>() == true);
  CHECK(j.at("v_upper").get<double>() ==
        doctest::Approx(2.0 * 10.0 / 60.0 + 60.0 * 0.1 / 990.0));
  CHECK(j.at("v_lower").get<double>() > 0.0);
  CHECK(j.at("v_lower").get<double>() <= j.at("v_upper").get<double>());
  const json& tight = j.at("tightness");
  BoundConfig bc;
  bc.k = 10;
  bc.n = 60;
  const SpectrumPair pair(source, target);
  const double expected_ratio = variance_lower(pair, bc) / variance_upper(pair, bc);
  CHECK(tight.at("v_ratio").get<double>() ==
        doctest::Approx(expected_ratio).epsilon(1e-12));
  CHECK(tight.at("v_bracket")[0].get<double>() == doctest::Approx(0.25));
  CHECK(tight.at("v_bracket")[1].get<double>() == 1.0);
  CHECK(tight.at("v_in_bracket").get<bool>() == true);
  CHECK(tight.at("has_bias").get<bool>() == false);
  CHECK(tight.at("b_in_bracket").get<bool>() == true);  // vacuous without a model

  // Model on the first spike: the bias bracket is populated and satisfied.
  const fs::path theta_csv = dir / "theta_e1.csv";
  write_vector_csv(Eigen::VectorXd::Unit(1000, 0), theta_csv.string());
  const CliResult with_bias = run_cli("bounds --source " + q(src_csv) + " --target " +
                                      q(tgt_csv) + " --n 60 --theta " + q(theta_csv));
  CHECK(with_bias.exit_code == 0);
  const json jb = json::parse(with_bias.out);
  CHECK(jb.at("tightness").at("has_bias").get<bool>() == true);
  CHECK(jb.at("tightness").at("b_in_bracket").get<bool>() == true);
  CHECK(jb.at("b_lower").get<double>() > 0.0);

  // An engineered benign pair whose bias ratio overshoots the bracket: the
  // report is still emitted, but the exit code flags the property failure.
  const fs::path bad_src = dir / "bad_source.csv";
  const fs::path bad_tgt = dir / "bad_target.csv";
  const fs::path bad_theta = dir / "bad_theta.csv";
  write_spectrum_csv(Spectrum{{1.0, 0.5, 0.5}}, bad_src.string());
  write_spectrum_csv(Spectrum{{1e-9, 0.5, 0.0}}, bad_tgt.string());
  write_vector_csv(Eigen::VectorXd::Unit(3, 1), bad_theta.string());
  const CliResult viol = run_cli("bounds --source " + q(bad_src) + " --target " +
                                 q(bad_tgt) + " --n 2 --k 1 --theta " + q(bad_theta));
  CHECK(viol.exit_code == 3);
  const json jv = json::parse(viol.out);  // the report is still emitted
  CHECK(jv.at("benign_ok").get<bool>() == true);
  CHECK(jv.at("tightness").at("has_bias").get<bool>() == true);
  CHECK(jv.at("tightness").at("b_in_bracket").get<bool>() == false);
  CHECK(jv.at("tightness").at("v_in_bracket").get<bool>() == true);

  // No k_star at an unreachable benign threshold: explicit --k is demanded.
  const fs::path decay_csv = dir / "decay.csv";
  write_spectrum_csv(make_decay(DecayLaw{DecayLaw::Kind::Power, 1.0, 1.0}, 50),
                     decay_csv.string());
  CHECK(run_cli("bounds --source " + q(decay_csv) + " --target " + q(decay_csv) +
                " --n 5 --b 1e9")
            .exit_code == 2);
  const CliResult forced = run_cli("bounds --source " + q(decay_csv) + " --target " +
                                   q(decay_csv) + " --n 5 --b 1e9 --k 2");
  REQUIRE(forced.exit_code == 0);  // non-benign spectra skip the bracket gate
  CHECK(json::parse(forced.out).at("benign_ok").get<bool>() == false);
}

TEST_CASE("classify-shift matches the taxonomy on both spectra sizes") {
  const CliResult severe = run_cli(std::string("classify-shift ") + kFig1Spiked +
                                   " --k 10 --n 60 --alpha 2.0 --beta 0.1");
  REQUIRE(severe.exit_code == 0);
  const json js = json::parse(severe.out);
  CHECK(js.at("regime").get<std::string>() == "Severe");
  CHECK(js.at("verdict").get<std::string>() == "Malignant");
  CHECK(js.at("k_over_n").get<double>() == doctest::Approx(10.0 / 60.0));
  CHECK(js.at("n_over_Rk").get<double>() == doctest::Approx(60.0 / 990.0));
  CHECK(js.at("predicted_delta_v").get<double>() > 0.0);
  CHECK(js.at("benign_ok").get<bool>() == true);
  REQUIRE(js.contains("robustness_value"));
  CHECK(js.at("robustness_value").get<double>() ==
        doctest::Approx(2.0 * 10.0 / 60.0 + 0.1 * 60.0 / 990.0));

  const CliResult mild = run_cli(
      "classify-shift --spiked 10 1.0 1e-6 200 --k 10 --n 60 --alpha 2.0 --beta 0.1");
  REQUIRE(mild.exit_code == 0);
  const json jm = json::parse(mild.out);
  CHECK(jm.at("regime").get<std::string>() == "Mild");
  CHECK(jm.at("verdict").get<std::string>() == "Beneficial");
  CHECK(jm.at("predicted_delta_v").get<double>() < 0.0);

  // beta == 1 with alpha != 1 makes the robustness constant infinite.
  const CliResult inf = run_cli(std::string("classify-shift ") + kFig1Spiked +
                                " --k 10 --n 60 --alpha 2.0 --beta 1.0");
  REQUIRE(inf.exit_code == 0);
  const json ji = json::parse(inf.out);
  REQUIRE(ji.at("c_alpha_beta").is_string());
  CHECK(ji.at("c_alpha_beta").get<std::string>() == "inf");
  CHECK(ji.at("regime").get<std::string>() == "Severe");

  // Per-index factors route through the general classifier: no scalar
  // robustness value, and constant factors of one are a Neutral shift.
  const fs::path dir = fresh_dir("csfactors");
  const fs::path ones_csv = dir / "ones.csv";
  write_vector_csv(Eigen::VectorXd::Ones(1000), ones_csv.string());
  const CliResult gen = run_cli(std::string("classify-shift ") + kFig1Spiked +
                                " --k 10 --n 60 --factor-file " + q(ones_csv));
  REQUIRE(gen.exit_code == 0);
  const json jg = json::parse(gen.out);
  CHECK(jg.at("verdict").get<std::string>() == "Neutral");
  CHECK(jg.at("predicted_delta_v").get<double>() == 0.0);
  CHECK(!jg.contains("robustness_value"));

  const fs::path short_csv = dir / "short.csv";
  write_vector_csv(Eigen::VectorXd::Ones(10), short_csv.string());
  CHECK(run_cli(std::string("classify-shift ") + kFig1Spiked +
                " --k 10 --n 60 --factor-file " + q(short_csv))
            .exit_code == 2);
}

TEST_CASE("classify runs the binary excess-error harness over dataset directories") {
  const Spectrum source = make_spiked({5, 1.0, 0.01, 40});
  Eigen::VectorXd w = Eigen::VectorXd::Zero(40);
  w.head(5).setOnes();
  const auto write_dataset = [&](const fs::path& dir, const SeedSpec& seed) {
    const Eigen::MatrixXd X = sample_design(30, source, seed);
    Eigen::VectorXd labels(30);
    const Eigen::VectorXd score = X * w;
    for (Eigen::Index i = 0; i < labels.size(); ++i) {
      labels[i] = score[i] > 0.0 ? 1.0 : 0.0;
    }
    write_matrix_csv(X, (dir / "X.csv").string());
    write_vector_csv(labels, (dir / "labels.csv").string());
  };
  const fs::path tr = fresh_dir("cls_tr");
  const fs::path te = fresh_dir("cls_te");
  write_dataset(tr, SeedSpec{5, 0});
  write_dataset(te, SeedSpec{6, 0});

  const CliResult r = run_cli("classify --train " + q(tr) + " --test " + q(te) +
                              " --test " + q(tr) + " --flip-prob 0 --trials 3 --seed 4");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"test_name", "flip_prob",
                                            "mean_excess_error", "stderr", "trials"});
  CHECK(rows[1][0] == "cls_te");
  CHECK(rows[2][0] == "cls_tr");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 5);
    // No flips: the noisy refit equals the clean fit, excess error is exactly 0.
    CHECK(std::strtod(rows[i][1].c_str(), nullptr) == 0.0);
    CHECK(std::strtod(rows[i][2].c_str(), nullptr) == 0.0);
    CHECK(std::strtod(rows[i][3].c_str(), nullptr) == 0.0);
    CHECK(rows[i][4] == "3");
  }

  CHECK(run_cli("classify --train " + q(tr) + " --test " + q(te) +
                " --flip-prob 0.2 --trials 2 --seed 4 --center")
            .exit_code == 0);

  const fs::path nolab = fresh_dir("cls_nolab");
  write_matrix_csv(Eigen::MatrixXd::Identity(4, 4), (nolab / "X.csv").string());
  CHECK(run_cli("classify --train " + q(tr) + " --test " + q(nolab) +
                " --trials 1")
            .exit_code == 2);
}

TEST_CASE("sweep runs presets or configs with deterministic output") {
  const CliResult dump = run_cli("sweep --dump-preset fig1");
  REQUIRE(dump.exit_code == 0);
  const json jd = json::parse(dump.out);
  CHECK(jd.at("name").get<std::string>() == "fig1");
  CHECK(jd.at("n").get<std::size_t>() == 60);
  CHECK(jd.at("trials").get<std::size_t>() == 100);
  CHECK(jd.at("master_seed").get<std::uint64_t>() == 20240601);
  CHECK(run_cli("sweep --dump-preset fig9000").exit_code == 2);

  const fs::path dir = fresh_dir("sweep");
  SweepConfig cfg;
  cfg.name = "cli";
  cfg.n = 10;
  cfg.noise_variance = 1.0;
  cfg.source.law = SpikedParams{2, 1.0, 1e-3, 0};
  cfg.shifts = {{"ood", ShiftSpec::multiplicative(2, 2.0, 0.5)}};
  cfg.axis.var = SweepAxis::Var::P;
  cfg.axis.values = {6, 25};
  cfg.trials = 2;
  cfg.master_seed = 7;
  cfg.output = (dir / "rows.csv").string();
  const fs::path cfg_path = dir / "cfg.json";
  write_text_file(cfg_path.string(), config_to_json_text(cfg));

  const CliResult run1 = run_cli("sweep --config " + q(cfg_path));
  REQUIRE(run1.exit_code == 0);
  CHECK(run1.out.find("(2 rows)") != std::string::npos);
  REQUIRE(fs::exists(dir / "rows.csv"));
  const std::string csv1 = read_text_file((dir / "rows.csv").string());
  CHECK(csv1.rfind("p,id_mean,id_stderr,ood_mean,ood_stderr,", 0) == 0);

  // Worker count must not change a single byte of the table.
  const fs::path out2 = dir / "rows_threads.csv";
  REQUIRE(run_cli("sweep --config " + q(cfg_path) + " --threads 3 --out " + q(out2))
              .exit_code == 0);
  CHECK(read_text_file(out2.string()) == csv1);

  // A master-seed override must change it.
  const fs::path out3 = dir / "rows_seed.csv";
  REQUIRE(run_cli("sweep --config " + q(cfg_path) + " --seed 123 --out " + q(out3))
              .exit_code == 0);
  CHECK(read_text_file(out3.string()) != csv1);

  CHECK(run_cli("sweep --preset fig1 --config " + q(cfg_path)).exit_code == 2);
  CHECK(run_cli("sweep").exit_code == 2);
}
