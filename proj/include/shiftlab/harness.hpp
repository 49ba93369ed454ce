#pragma once
// Config-driven experiment sweeps: for each grid point run seeded trials
// (design, sphere model, noisy labels, MNI fit, exact ID/OOD excess risks),
// attach bound values and the shift verdict, and emit CSV.  Identical
// configs give byte-identical CSV regardless of worker count: seed streams
// are keyed by (grid point, trial) and aggregation runs in canonical order.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shiftlab/interpolator.hpp"
#include "shiftlab/spectrum.hpp"
#include "shiftlab/stats.hpp"
#include "shiftlab/taxonomy.hpp"

namespace shiftlab {

// Invalid user input (config files, CLI flags); mapped to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SourceSpec {
  std::variant<SpikedParams, DecayLaw> law = SpikedParams{};
  // SpikedParams carries its own p; for decay laws p comes from the grid.
  Spectrum build(std::size_t p) const;
};

struct NamedShift {
  std::string name;
  ShiftSpec shift = ShiftSpec::multiplicative(0, 1.0, 1.0);
};

struct SweepAxis {
  enum class Var { P, NoiseVariance, N, AlphaBeta };
  Var var = Var::P;
  std::vector<double> values;                       // P / NoiseVariance / N
  std::vector<std::pair<double, double>> ab_values; // AlphaBeta

  std::size_t size() const {
    return var == Var::AlphaBeta ? ab_values.size() : values.size();
  }
};

struct SweepConfig {
  std::string name = "sweep";
  std::size_t n = 0;
  std::size_t p = 0;  // base dimension; overridden by a P axis
  double noise_variance = 1.0;
  SourceSpec source;
  std::vector<NamedShift> shifts;
  SweepAxis axis;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::optional<std::size_t> bounds_k;  // default: k_star(source, n, b)
  double bounds_b = 1.0;
  FitOptions fit;
  bool record_bias = false;
  TaxonomyOptions taxonomy;
  double near_threshold_band = 0.25;  // flag rows with |p - n| <= band * n
  std::string output = "sweep.csv";
};

struct ShiftCell {
  std::string name;
  MeanStderr ood;
  MeanStderr diff;  // paired per-trial ood - id
  double v_lower = 0.0;
  double v_upper = 0.0;
  Verdict verdict = Verdict::Indeterminate;
  Regime regime = Regime::Boundary;
  std::optional<double> bias_mean;
  bool bounds_ok = false;
};

struct SweepRow {
  std::vector<std::pair<std::string, double>> axis_values;
  MeanStderr id;
  std::vector<ShiftCell> shifts;
  std::size_t trials = 0;
  std::vector<std::string> flags;
  std::optional<double> id_bias_mean;
  std::optional<double> bias_defect_max;  // max over trials of ||X th - X th*||^2 / n
};

struct SweepTable {
  SweepConfig config;
  std::vector<SweepRow> rows;
};

SweepTable run_sweep(const SweepConfig& config, unsigned n_threads = 1);

// Column order: axis, id_mean, id_stderr, per-shift (ood_mean, ood_stderr,
// v_lower, v_upper, verdict, regime), trials, flags, per-shift (diff_mean,
// diff_stderr), then bias columns when recorded.  Single-shift sweeps drop
// the _<name> suffixes so the fig1 schema reads {p, id_mean, id_stderr,
// ood_mean, ood_stderr, v_lower, v_upper, verdict, regime, ...}.
std::string table_to_csv(const SweepTable& table);
void emit_csv(const SweepTable& table, const std::string& path);

// JSON config round-trip (schema documented in the README).
SweepConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const SweepConfig& config);

bool is_preset_name(const std::string& name);
SweepConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace shiftlab
