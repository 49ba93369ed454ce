// shiftlab command-line interface.  Exit codes: 0 success, 2 invalid
// config/input, 3 property failure (tightness bracket violation).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/bounds.hpp"
#include "shiftlab/empirical.hpp"
#include "shiftlab/harness.hpp"
#include "shiftlab/interpolator.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/risk.hpp"
#include "shiftlab/sampling.hpp"
#include "shiftlab/spectrum.hpp"
#include "shiftlab/taxonomy.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace shiftlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitProperty = 3;

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    write_text_file(out_path, text.empty() || text.back() == '\n' ? text : text + "\n");
  }
}

void emit_json(const json& j, const std::string& out_path) {
  emit_text(j.dump(2), out_path);
}

// Shared spectrum-construction flags: --file CSV | --spiked K DELTA EPS P |
// --decay KIND A B P.
struct SpectrumCliOpts {
  std::string file;
  std::vector<double> spiked;
  std::vector<std::string> decay;

  void add_to(CLI::App* cmd, const std::string& role) {
    cmd->add_option("--file", file, "spectrum CSV (header 'lambda') for the " + role)
        ->check(CLI::ExistingFile);
    cmd->add_option("--spiked", spiked,
                    "spiked " + role + " spectrum: K DELTA EPS P")
        ->expected(4);
    cmd->add_option("--decay", decay,
                    "decay " + role + " spectrum: KIND(power_log|power|log_self) A B P")
        ->expected(4);
  }

  Spectrum build() const {
    const int given = (!file.empty() ? 1 : 0) + (!spiked.empty() ? 1 : 0) +
                      (!decay.empty() ? 1 : 0);
    if (given != 1) {
      throw ConfigError("give exactly one of --file, --spiked, --decay");
    }
    if (!file.empty()) return read_spectrum_csv(file);
    if (!spiked.empty()) {
      SpikedParams params;
      params.k = static_cast<std::size_t>(spiked[0]);
      params.delta = spiked[1];
      params.eps = spiked[2];
      params.p = static_cast<std::size_t>(spiked[3]);
      return make_spiked(params);
    }
    DecayLaw law;
    if (decay[0] == "power_log") {
      law.kind = DecayLaw::Kind::PowerLog;
    } else if (decay[0] == "power") {
      law.kind = DecayLaw::Kind::Power;
    } else if (decay[0] == "log_self") {
      law.kind = DecayLaw::Kind::LogSelf;
    } else {
      throw ConfigError("unknown decay kind: " + decay[0]);
    }
    law.a = std::stod(decay[1]);
    law.b = std::stod(decay[2]);
    return make_decay(law, static_cast<std::size_t>(std::stod(decay[3])));
  }
};

json spectrum_values_json(const Spectrum& s) {
  json arr = json::array();
  for (double v : s.values()) arr.push_back(v);
  return arr;
}

json rng_metadata() {
  return json{{"algorithm", Rng::kAlgorithm},
              {"seeding", Rng::kSeeding},
              {"gaussian", Rng::kGaussian}};
}

FitOptions parse_fit(const std::string& path, double tol) {
  FitOptions fit;
  fit.tol = tol;
  if (path == "svd") {
    fit.path = FitOptions::Path::Svd;
  } else if (path == "gram") {
    fit.path = FitOptions::Path::Gram;
  } else {
    throw ConfigError("unknown solver path: " + path);
  }
  return fit;
}

int run_spectrum(const SpectrumCliOpts& opts, std::size_t n, double b, std::size_t table_max,
                 const std::string& out_path) {
  const Spectrum s = opts.build();
  const BenignReport report = benign_report(s, n, b);
  json j;
  j["p"] = s.size();
  j["n"] = n;
  j["b"] = b;
  j["trace"] = s.sum();
  j["values"] = spectrum_values_json(s);
  j["k_star"] = report.k_star ? json(*report.k_star) : json(nullptr);
  j["rho_0"] = report.rho_0;
  j["kstar_over_n"] = report.kstar_over_n ? json(*report.kstar_over_n) : json(nullptr);
  j["n_over_R_kstar"] = report.n_over_R_kstar ? json(*report.n_over_R_kstar) : json(nullptr);
  j["degenerate_tail"] = report.degenerate_tail;
  json rho_table = json::array();
  json r_table = json::array();
  for (std::size_t k = 0; k < std::min(s.size(), table_max); ++k) {
    if (s[k] > 0.0) rho_table.push_back({{"k", k}, {"rho", rho_k(s, k, n)}});
    if (s.tail_sum_sq(k) > 0.0) r_table.push_back({{"k", k}, {"R", big_R_k(s, k)}});
  }
  j["rho_table"] = rho_table;
  j["R_table"] = r_table;
  emit_json(j, out_path);
  return kExitOk;
}

int run_generate(const SpectrumCliOpts& opts, std::size_t n, double noise_variance,
                 std::uint64_t seed, const std::string& out_dir) {
  if (out_dir.empty()) throw ConfigError("generate needs --out DIRECTORY");
  const Spectrum source = opts.build();
  fs::create_directories(out_dir);
  const SeedSpec base{seed, 0};
  const Eigen::MatrixXd X = sample_design(n, source, base);
  const Eigen::VectorXd theta = sample_sphere_model(source.size(), base.stream(1));
  const Labels labels = gen_labels(X, theta, noise_variance, base.stream(2));

  const fs::path dir(out_dir);
  write_matrix_csv(X, (dir / "X.csv").string());
  write_vector_csv(labels.y, (dir / "y.csv").string());
  write_vector_csv(theta, (dir / "theta.csv").string());
  write_vector_csv(labels.noise, (dir / "noise.csv").string());

  json meta;
  meta["n"] = n;
  meta["p"] = source.size();
  meta["noise_variance"] = noise_variance;
  meta["master_seed"] = seed;
  meta["streams"] = {{"design", 0}, {"theta", 1}, {"noise", 2}};
  meta["rng"] = rng_metadata();
  meta["source_spectrum"] = spectrum_values_json(source);
  write_text_file((dir / "meta.json").string(), meta.dump(2) + "\n");
  std::cout << "wrote instance to " << out_dir << "\n";
  return kExitOk;
}

int run_fit(const std::string& instance_dir, std::string x_path, std::string y_path,
            const FitOptions& fit_opts, std::string out_dir) {
  if (!instance_dir.empty()) {
    const fs::path dir(instance_dir);
    x_path = (dir / "X.csv").string();
    y_path = (dir / "y.csv").string();
    if (out_dir.empty()) out_dir = instance_dir;
  }
  if (x_path.empty() || y_path.empty()) {
    throw ConfigError("fit needs --instance DIR or both --x and --y");
  }
  if (out_dir.empty()) out_dir = ".";
  const Eigen::MatrixXd X = read_matrix_csv(x_path);
  const Eigen::VectorXd y = read_vector_csv(y_path);
  const FitResult result = mni_fit(X, y, fit_opts);
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  write_vector_csv(result.theta_hat, (dir / "theta_hat.csv").string());
  json meta;
  meta["numerical_rank"] = result.numerical_rank;
  meta["gram_condition"] = result.gram_condition;
  meta["residual_norm"] = result.residual_norm;
  meta["used_gram_path"] = result.used_gram_path;
  meta["tol"] = fit_opts.tol;
  meta["path"] = fit_opts.path == FitOptions::Path::Gram ? "gram" : "svd";
  write_text_file((dir / "fit_meta.json").string(), meta.dump(2) + "\n");
  std::cout << "wrote theta_hat.csv and fit_meta.json to " << out_dir << "\n";
  return kExitOk;
}

int run_risk(const std::string& instance_dir, const std::string& target_path,
             const std::string& theta_target_path, const FitOptions& fit_opts,
             std::size_t mc_trials, std::uint64_t seed, unsigned threads,
             const std::string& out_path) {
  const fs::path dir(instance_dir);
  const Spectrum target = read_spectrum_csv(target_path);
  const Eigen::VectorXd theta = read_vector_csv((dir / "theta.csv").string());
  const Eigen::VectorXd theta_target =
      theta_target_path.empty() ? theta : read_vector_csv(theta_target_path);

  if (mc_trials > 0) {
    const json meta = json::parse(read_text_file((dir / "meta.json").string()));
    std::vector<double> src = meta.at("source_spectrum").get<std::vector<double>>();
    const Spectrum source{std::move(src)};
    McRiskConfig cfg;
    cfg.n = meta.at("n").get<std::size_t>();
    cfg.source = &source;
    cfg.target = &target;
    cfg.theta_source = &theta;
    cfg.theta_target = &theta_target;
    cfg.noise_variance = meta.at("noise_variance").get<double>();
    cfg.trials = mc_trials;
    cfg.seed = SeedSpec{seed, 0};
    cfg.n_threads = threads;
    cfg.fit = fit_opts;
    const McResult result = mc_excess_risk(cfg);
    std::string csv = "mean,stderr,trials\n";
    csv += format_double(result.mean) + "," + format_double(result.std_error) + "," +
           std::to_string(result.trials) + "\n";
    emit_text(csv, out_path);
    return kExitOk;
  }

  const Eigen::MatrixXd X = read_matrix_csv((dir / "X.csv").string());
  const Eigen::VectorXd noise = read_vector_csv((dir / "noise.csv").string());
  const RiskReport report = decompose(X, theta, theta_target, target, noise, fit_opts);
  json j;
  j["model_shift_M"] = report.model_shift_M;
  j["bias_B"] = report.bias_B;
  j["raw_variance_Veps"] = report.raw_variance_Veps;
  j["cross_term"] = report.cross_term;
  j["total_excess_risk"] = report.total_excess_risk;
  j["upper_bound_value"] = report.upper_bound_value;
  emit_json(j, out_path);
  return kExitOk;
}

int run_bounds(const std::string& source_path, const std::string& target_path,
               std::size_t n, std::optional<std::size_t> k, double c, double b,
               const std::string& theta_path, const std::string& out_path) {
  const Spectrum source = read_spectrum_csv(source_path);
  const Spectrum target = read_spectrum_csv(target_path);
  const SpectrumPair pair(source, target);
  BoundConfig cfg;
  cfg.n = n;
  cfg.c = c;
  cfg.b = b;
  if (k) {
    cfg.k = *k;
  } else {
    const auto ks = k_star(source, n, b);
    if (!ks) throw ConfigError("k_star is absent for this spectrum; pass --k explicitly");
    cfg.k = *ks;
  }
  std::optional<Eigen::VectorXd> theta;
  if (!theta_path.empty()) theta = read_vector_csv(theta_path);

  const Eigen::VectorXd* theta_ptr = theta ? &*theta : nullptr;
  const BoundsReport report = bounds_report(pair, cfg, theta_ptr);
  const TightnessReport tight = tightness_ratios(pair, cfg, theta_ptr);

  json j;
  j["k"] = cfg.k;
  j["n"] = cfg.n;
  j["c"] = cfg.c;
  j["b"] = cfg.b;
  j["v_lower"] = report.v_lower;
  j["v_upper"] = report.v_upper;
  j["b_lower"] = report.b_lower;
  j["b_upper"] = report.b_upper;
  j["rho_k"] = report.rho_k;
  j["R_k"] = report.R_k;
  j["benign_ok"] = report.benign_ok;
  j["tightness"] = {{"v_ratio", tight.v_ratio},
                    {"v_bracket", {tight.v_bracket_lo, tight.v_bracket_hi}},
                    {"v_in_bracket", tight.v_in_bracket},
                    {"has_bias", tight.has_bias},
                    {"b_ratio", tight.b_ratio},
                    {"b_bracket", {tight.b_bracket_lo, tight.b_bracket_hi}},
                    {"b_in_bracket", tight.b_in_bracket}};
  emit_json(j, out_path);
  if (report.benign_ok && (!tight.v_in_bracket || !tight.b_in_bracket)) {
    std::cerr << "tightness bracket violated\n";
    return kExitProperty;
  }
  return kExitOk;
}

int run_classify_shift(const SpectrumCliOpts& opts, std::size_t k, std::size_t n, double alpha,
                       double beta, const std::string& factor_file, double tol_rel,
                       double boundary_band, double b, const std::string& out_path) {
  const Spectrum source = opts.build();
  TaxonomyOptions taxo;
  taxo.tol_rel = tol_rel;
  taxo.boundary_band = boundary_band;
  taxo.b = b;
  TaxonomyReport report;
  std::optional<double> robustness;
  if (!factor_file.empty()) {
    const Eigen::VectorXd factors = read_vector_csv(factor_file);
    if (static_cast<std::size_t>(factors.size()) != source.size()) {
      throw ConfigError("factor file length must equal the spectrum size");
    }
    std::vector<double> head(factors.data(), factors.data() + static_cast<std::ptrdiff_t>(k));
    std::vector<double> tail(factors.data() + static_cast<std::ptrdiff_t>(k),
                             factors.data() + factors.size());
    report = classify_general(source, k, n, head, tail, taxo);
  } else {
    report = classify_multiplicative(source, k, n, alpha, beta, taxo);
    robustness = robustness_value(source, k, n, alpha, beta);
  }
  json j;
  j["c_alpha_beta"] = std::isinf(report.c_alpha_beta) ? json("inf") : json(report.c_alpha_beta);
  j["k_over_n"] = report.k_over_n;
  j["n_over_Rk"] = report.n_over_Rk;
  j["regime"] = to_string(report.regime);
  j["verdict"] = to_string(report.verdict);
  j["predicted_delta_v"] = report.predicted_delta_v;
  j["trace_source"] = report.trace_source;
  j["trace_target"] = report.trace_target;
  j["benign_ok"] = report.benign_ok;
  if (robustness) j["robustness_value"] = *robustness;
  emit_json(j, out_path);
  return kExitOk;
}

MatrixDataset load_dataset(const std::string& dir_path, bool require_labels) {
  const fs::path dir(dir_path);
  MatrixDataset out;
  out.name = dir.filename().string().empty() ? dir_path : dir.filename().string();
  out.X = read_matrix_csv((dir / "X.csv").string());
  const fs::path labels = dir / "labels.csv";
  if (fs::exists(labels)) {
    out.labels = read_vector_csv(labels.string());
  } else if (require_labels) {
    throw ConfigError("dataset " + dir_path + " needs labels.csv");
  }
  return out;
}

int run_classify(const std::string& train_dir, const std::vector<std::string>& test_dirs,
                 double flip_prob, std::size_t trials, bool center,
                 const FitOptions& fit_opts, std::uint64_t seed, unsigned threads,
                 const std::string& out_path) {
  MatrixDataset train = load_dataset(train_dir, true);
  std::vector<MatrixDataset> tests;
  for (const auto& d : test_dirs) tests.push_back(load_dataset(d, true));
  if (center) {
    const Eigen::RowVectorXd mean = train.X.colwise().mean();
    train.X.rowwise() -= mean;
    for (auto& t : tests) t.X.rowwise() -= mean;
  }
  const auto rows =
      binary_experiment(train, tests, flip_prob, trials, SeedSpec{seed, 0}, fit_opts, threads);
  std::string csv = "test_name,flip_prob,mean_excess_error,stderr,trials\n";
  for (const auto& row : rows) {
    csv += row.test_name + "," + format_double(row.flip_prob) + "," +
           format_double(row.mean_excess_error) + "," + format_double(row.std_error) + "," +
           std::to_string(row.trials) + "\n";
  }
  emit_text(csv, out_path);
  return kExitOk;
}

int run_sweep_cmd(const std::string& preset, const std::string& config_path,
                  const std::string& dump_preset, bool seed_given, std::uint64_t seed,
                  unsigned threads, const std::string& out_path) {
  if (!dump_preset.empty()) {
    emit_text(config_to_json_text(preset_config(dump_preset)), out_path);
    return kExitOk;
  }
  const int sources = (!preset.empty() ? 1 : 0) + (!config_path.empty() ? 1 : 0);
  if (sources != 1) throw ConfigError("give exactly one of --preset or --config");
  SweepConfig config = preset.empty() ? config_from_json_text(read_text_file(config_path))
                                      : preset_config(preset);
  if (seed_given) config.master_seed = seed;
  if (!out_path.empty()) config.output = out_path;
  const SweepTable table = run_sweep(config, threads);
  emit_csv(table, config.output);
  std::cout << "wrote " << config.output << " (" << table.rows.size() << " rows)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftlab: covariate-shift experiments for minimum-norm interpolation"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out_path;
  app.add_option("--seed", seed, "master seed for seeded subcommands")->capture_default_str();
  app.add_option("--threads", threads, "worker threads for Monte-Carlo loops")
      ->capture_default_str();
  app.add_option("--out", out_path, "output file (or directory for generate/fit)");

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "effective-rank diagnostics of a spectrum");
  sp->fallthrough();
  SpectrumCliOpts sp_opts;
  sp_opts.add_to(sp, "source");
  std::size_t sp_n = 1;
  double sp_b = 1.0;
  std::size_t sp_table_max = 64;
  sp->add_option("--n", sp_n, "sample count for rho_k / k_star")->required();
  sp->add_option("--b", sp_b, "benign threshold")->capture_default_str();
  sp->add_option("--table-max", sp_table_max, "max k for the rho/R tables")
      ->capture_default_str();

  // generate
  auto* gen = app.add_subcommand("generate", "sample a regression instance to a directory");
  gen->fallthrough();
  SpectrumCliOpts gen_opts;
  gen_opts.add_to(gen, "source");
  std::size_t gen_n = 0;
  double gen_noise = 1.0;
  gen->add_option("--n", gen_n, "number of observations")->required();
  gen->add_option("--noise-variance", gen_noise, "label noise variance")
      ->capture_default_str();

  // fit
  auto* fit = app.add_subcommand("fit", "minimum-norm interpolation of an instance");
  fit->fallthrough();
  std::string fit_instance, fit_x, fit_y, fit_path = "svd";
  double fit_tol = 1e-10;
  fit->add_option("--instance", fit_instance, "instance directory (X.csv, y.csv)")
      ->check(CLI::ExistingDirectory);
  fit->add_option("--x", fit_x, "design CSV")->check(CLI::ExistingFile);
  fit->add_option("--y", fit_y, "target CSV")->check(CLI::ExistingFile);
  fit->add_option("--path", fit_path, "solver path: svd|gram")->capture_default_str();
  fit->add_option("--tol", fit_tol, "relative singular-value cutoff")->capture_default_str();

  // risk
  auto* risk = app.add_subcommand("risk", "exact risk decomposition / Monte-Carlo risk");
  risk->fallthrough();
  std::string risk_instance, risk_target, risk_theta_target, risk_path = "svd";
  double risk_tol = 1e-10;
  std::size_t risk_mc = 0;
  risk->add_option("--instance", risk_instance, "instance directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  risk->add_option("--target", risk_target, "target spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  risk->add_option("--theta-target", risk_theta_target, "target model CSV (default: theta.csv)")
      ->check(CLI::ExistingFile);
  risk->add_option("--path", risk_path, "solver path: svd|gram")->capture_default_str();
  risk->add_option("--tol", risk_tol, "relative singular-value cutoff")->capture_default_str();
  risk->add_option("--mc-trials", risk_mc, "Monte-Carlo mode: fresh (X, noise) trials");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "variance/bias bounds and tightness");
  bounds->fallthrough();
  std::string bounds_source, bounds_target, bounds_theta;
  std::size_t bounds_n = 0;
  double bounds_c = 1.0, bounds_b = 1.0;
  std::optional<std::size_t> bounds_k;
  bounds->add_option("--source", bounds_source, "source spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  bounds->add_option("--target", bounds_target, "target spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  bounds->add_option("--n", bounds_n, "sample count")->required();
  bounds->add_option("--k", bounds_k, "head size (default: k_star)");
  bounds->add_option("--c", bounds_c, "constant multiplier")->capture_default_str();
  bounds->add_option("--b", bounds_b, "benign threshold")->capture_default_str();
  bounds->add_option("--theta", bounds_theta, "model CSV enabling bias bounds")
      ->check(CLI::ExistingFile);

  // classify-shift
  auto* cs = app.add_subcommand("classify-shift", "beneficial/malignant shift taxonomy");
  cs->fallthrough();
  SpectrumCliOpts cs_opts;
  cs_opts.add_to(cs, "source");
  std::size_t cs_k = 0, cs_n = 0;
  double cs_alpha = 1.0, cs_beta = 1.0, cs_tol_rel = 0.05, cs_band = 0.10, cs_b = 1.0;
  std::string cs_factors;
  cs->add_option("--k", cs_k, "head size")->required();
  cs->add_option("--n", cs_n, "sample count")->required();
  cs->add_option("--alpha", cs_alpha, "head factor")->capture_default_str();
  cs->add_option("--beta", cs_beta, "tail factor")->capture_default_str();
  cs->add_option("--factor-file", cs_factors, "per-index factors CSV (overrides alpha/beta)")
      ->check(CLI::ExistingFile);
  cs->add_option("--tol-rel", cs_tol_rel, "Indeterminate threshold")->capture_default_str();
  cs->add_option("--boundary-band", cs_band, "regime boundary band")->capture_default_str();
  cs->add_option("--b", cs_b, "benign threshold")->capture_default_str();

  // classify
  auto* cl = app.add_subcommand("classify", "binary classification excess-error harness");
  cl->fallthrough();
  std::string cl_train, cl_path = "svd";
  std::vector<std::string> cl_tests;
  double cl_flip = 0.0, cl_tol = 1e-10;
  std::size_t cl_trials = 1;
  bool cl_center = false;
  cl->add_option("--train", cl_train, "training dataset directory (X.csv, labels.csv)")
      ->required()
      ->check(CLI::ExistingDirectory);
  cl->add_option("--test", cl_tests, "test dataset directory (repeatable)")
      ->required()
      ->check(CLI::ExistingDirectory);
  cl->add_option("--flip-prob", cl_flip, "training label flip probability")
      ->capture_default_str();
  cl->add_option("--trials", cl_trials, "number of flip trials")->capture_default_str();
  cl->add_flag("--center", cl_center, "subtract the training column means from all sets");
  cl->add_option("--path", cl_path, "solver path: svd|gram")->capture_default_str();
  cl->add_option("--tol", cl_tol, "relative singular-value cutoff")->capture_default_str();

  // sweep
  auto* sw = app.add_subcommand("sweep", "config-driven experiment sweep");
  sw->fallthrough();
  std::string sw_preset, sw_config, sw_dump;
  sw->add_option("--preset", sw_preset, "built-in preset: fig1|fig5|fig6|fig7");
  sw->add_option("--config", sw_config, "JSON sweep config")->check(CLI::ExistingFile);
  sw->add_option("--dump-preset", sw_dump, "print a preset's JSON config and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*sp) return run_spectrum(sp_opts, sp_n, sp_b, sp_table_max, out_path);
    if (*gen) return run_generate(gen_opts, gen_n, gen_noise, seed, out_path);
    if (*fit) {
      return run_fit(fit_instance, fit_x, fit_y, parse_fit(fit_path, fit_tol), out_path);
    }
    if (*risk) {
      return run_risk(risk_instance, risk_target, risk_theta_target,
                      parse_fit(risk_path, risk_tol), risk_mc, seed, threads, out_path);
    }
    if (*bounds) {
      return run_bounds(bounds_source, bounds_target, bounds_n, bounds_k, bounds_c, bounds_b,
                        bounds_theta, out_path);
    }
    if (*cs) {
      return run_classify_shift(cs_opts, cs_k, cs_n, cs_alpha, cs_beta, cs_factors, cs_tol_rel,
                                cs_band, cs_b, out_path);
    }
    if (*cl) {
      return run_classify(cl_train, cl_tests, cl_flip, cl_trials, cl_center,
                          parse_fit(cl_path, cl_tol), seed, threads, out_path);
    }
    if (*sw) {
      return run_sweep_cmd(sw_preset, sw_config, sw_dump, app.count("--seed") > 0, seed,
                           threads, out_path);
    }
    throw ConfigError("no subcommand selected");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
