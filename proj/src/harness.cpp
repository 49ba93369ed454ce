#include "shiftlab/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "shiftlab/bounds.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/parallel.hpp"
#include "shiftlab/risk.hpp"
#include "shiftlab/sampling.hpp"

namespace shiftlab {

using nlohmann::json;

Spectrum SourceSpec::build(std::size_t p) const {
  if (std::holds_alternative<SpikedParams>(law)) {
    SpikedParams params = std::get<SpikedParams>(law);
    params.p = p;
    return make_spiked(params);
  }
  return make_decay(std::get<DecayLaw>(law), p);
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct GridPoint {
  std::size_t n = 0;
  std::size_t p = 0;
  double noise_variance = 0.0;
  std::vector<NamedShift> shifts;
  std::vector<std::pair<std::string, double>> axis_values;
};

GridPoint resolve_grid_point(const SweepConfig& config, std::size_t g) {
  GridPoint pt;
  pt.n = config.n;
  pt.p = config.p;
  pt.noise_variance = config.noise_variance;
  pt.shifts = config.shifts;
  switch (config.axis.var) {
    case SweepAxis::Var::P: {
      const double v = config.axis.values[g];
      pt.p = static_cast<std::size_t>(v);
      pt.axis_values = {{"p", v}};
      break;
    }
    case SweepAxis::Var::NoiseVariance: {
      pt.noise_variance = config.axis.values[g];
      pt.axis_values = {{"noise_variance", pt.noise_variance}};
      break;
    }
    case SweepAxis::Var::N: {
      const double v = config.axis.values[g];
      pt.n = static_cast<std::size_t>(v);
      pt.axis_values = {{"n", v}};
      break;
    }
    case SweepAxis::Var::AlphaBeta: {
      const auto [alpha, beta] = config.axis.ab_values[g];
      const auto& base = pt.shifts.front().shift.as_multiplicative();
      pt.shifts.front().shift = ShiftSpec::multiplicative(base.k, alpha, beta);
      pt.axis_values = {{"alpha", alpha}, {"beta", beta}};
      break;
    }
  }
  return pt;
}

void validate_config(const SweepConfig& config) {
  if (config.n == 0) throw ConfigError("sweep config needs n >= 1");
  if (config.trials == 0) throw ConfigError("sweep config needs trials >= 1");
  if (config.axis.size() == 0) throw ConfigError("sweep config needs a non-empty axis");
  if (config.shifts.empty()) throw ConfigError("sweep config needs at least one shift");
  if (config.noise_variance < 0.0) throw ConfigError("noise_variance must be >= 0");
  if (config.axis.var == SweepAxis::Var::AlphaBeta) {
    if (config.shifts.size() != 1 || !config.shifts.front().shift.is_multiplicative()) {
      throw ConfigError("an alpha_beta axis needs exactly one multiplicative shift");
    }
  }
  if (config.axis.var != SweepAxis::Var::P && config.p == 0) {
    throw ConfigError("sweep config needs p >= 1 unless the axis varies p");
  }
  for (std::size_t g = 0; g < config.axis.size(); ++g) {
    if (config.axis.var == SweepAxis::Var::P || config.axis.var == SweepAxis::Var::N) {
      const double v = config.axis.values[g];
      if (!(v >= 1.0) || v != std::floor(v)) {
        throw ConfigError("p/n axis values must be positive integers");
      }
    }
    if (config.axis.var == SweepAxis::Var::NoiseVariance && config.axis.values[g] < 0.0) {
      throw ConfigError("noise_variance axis values must be >= 0");
    }
  }
  std::vector<std::string> names;
  for (const auto& s : config.shifts) {
    if (s.name.empty()) throw ConfigError("every shift needs a name");
    for (const auto& seen : names) {
      if (seen == s.name) throw ConfigError("duplicate shift name: " + s.name);
    }
    names.push_back(s.name);
  }
}

// Per-(grid point, shift) static results: target spectrum, bounds, verdict.
struct ShiftStatic {
  Spectrum target;
  double v_lower = kNan;
  double v_upper = kNan;
  Verdict verdict = Verdict::Indeterminate;
  Regime regime = Regime::Boundary;
  bool bounds_ok = false;
};

ShiftStatic shift_static(const SweepConfig& config, const GridPoint& pt, const Spectrum& source,
                         const NamedShift& shift, std::optional<std::size_t> k_bounds) {
  ShiftStatic out{apply_shift(source, shift.shift).target};
  if (!k_bounds || *k_bounds >= pt.n || *k_bounds >= pt.p) return out;
  const std::size_t k = *k_bounds;
  const SpectrumPair pair(source, out.target);
  BoundConfig cfg;
  cfg.k = k;
  cfg.n = pt.n;
  cfg.b = config.bounds_b;
  out.v_lower = variance_lower(pair, cfg);
  out.v_upper = variance_upper(pair, cfg);

  TaxonomyOptions taxo = config.taxonomy;
  taxo.b = config.bounds_b;
  TaxonomyReport report;
  if (shift.shift.is_multiplicative()) {
    const auto& m = shift.shift.as_multiplicative();
    report = classify_multiplicative(source, k, pt.n, m.alpha, m.beta, taxo);
  } else {
    const auto& factors = shift.shift.as_per_index().factors;
    std::vector<double> head(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<double> tail(factors.begin() + static_cast<std::ptrdiff_t>(k), factors.end());
    report = classify_general(source, k, pt.n, head, tail, taxo);
  }
  out.verdict = report.verdict;
  out.regime = report.regime;
  out.bounds_ok = true;
  return out;
}

}  // namespace

SweepTable run_sweep(const SweepConfig& config, unsigned n_threads) {
  validate_config(config);
  const std::size_t G = config.axis.size();
  const std::size_t T = config.trials;

  // Grid-point static setup; failures flag the row and skip its trials.
  struct PointPlan {
    GridPoint pt;
    std::optional<Spectrum> source;
    std::vector<ShiftStatic> shifts;
    std::optional<std::size_t> k_bounds;
    std::vector<std::string> flags;
    bool feasible = false;
  };
  std::vector<PointPlan> plans;
  plans.reserve(G);
  for (std::size_t g = 0; g < G; ++g) {
    PointPlan plan;
    plan.pt = resolve_grid_point(config, g);
    try {
      plan.source = config.source.build(plan.pt.p);
      plan.k_bounds = config.bounds_k ? config.bounds_k
                                      : k_star(*plan.source, plan.pt.n, config.bounds_b);
      bool any_bounds_infeasible = false;
      for (const auto& shift : plan.pt.shifts) {
        plan.shifts.push_back(
            shift_static(config, plan.pt, *plan.source, shift, plan.k_bounds));
        if (!plan.shifts.back().bounds_ok) any_bounds_infeasible = true;
      }
      plan.feasible = true;
      const double band = config.near_threshold_band * static_cast<double>(plan.pt.n);
      const double gap = std::abs(static_cast<double>(plan.pt.p) - static_cast<double>(plan.pt.n));
      if (gap <= band) plan.flags.push_back("near_threshold");
      if (any_bounds_infeasible) plan.flags.push_back("bounds_infeasible");
    } catch (const std::exception& e) {
      plan.flags.push_back(std::string("infeasible:") + e.what());
    }
    plans.push_back(std::move(plan));
  }

  const std::size_t S = config.shifts.size();
  // Flat slot arrays indexed by g*T + t; aggregation later walks them in
  // canonical order so worker scheduling cannot affect output.
  std::vector<double> slot_id(G * T, kNan);
  std::vector<std::vector<double>> slot_ood(S, std::vector<double>(G * T, kNan));
  std::vector<std::vector<double>> slot_diff(S, std::vector<double>(G * T, kNan));
  std::vector<std::vector<double>> slot_bias(S, std::vector<double>(G * T, kNan));
  std::vector<double> slot_bias_id(G * T, kNan);
  std::vector<double> slot_defect(G * T, kNan);

  std::vector<std::size_t> tasks;  // feasible (g, t) pairs, flattened
  tasks.reserve(G * T);
  for (std::size_t g = 0; g < G; ++g) {
    if (!plans[g].feasible) continue;
    for (std::size_t t = 0; t < T; ++t) tasks.push_back(g * T + t);
  }

  parallel_for(tasks.size(), n_threads, [&](std::size_t task_idx) {
    const std::size_t slot = tasks[task_idx];
    const std::size_t g = slot / T;
    const PointPlan& plan = plans[g];
    const std::uint64_t base = static_cast<std::uint64_t>(slot) * 4;
    const SeedSpec seed{config.master_seed, base};

    const Eigen::MatrixXd X = sample_design(plan.pt.n, *plan.source, seed);
    const Eigen::VectorXd theta = sample_sphere_model(plan.pt.p, seed.stream(1));
    const Labels labels = gen_labels(X, theta, plan.pt.noise_variance, seed.stream(2));

    const MniSolver solver(X, config.fit);
    const Eigen::VectorXd theta_hat = solver.fit(labels.y).theta_hat;

    slot_id[slot] = excess_risk_exact(theta_hat, theta, *plan.source);
    for (std::size_t s = 0; s < S; ++s) {
      slot_ood[s][slot] = excess_risk_exact(theta_hat, theta, plan.shifts[s].target);
      slot_diff[s][slot] = slot_ood[s][slot] - slot_id[slot];
    }
    if (config.record_bias) {
      const FitResult sig = solver.fit(X * theta);
      slot_bias_id[slot] = excess_risk_exact(sig.theta_hat, theta, *plan.source);
      for (std::size_t s = 0; s < S; ++s) {
        slot_bias[s][slot] = excess_risk_exact(sig.theta_hat, theta, plan.shifts[s].target);
      }
      slot_defect[slot] =
          sig.residual_norm * sig.residual_norm / static_cast<double>(plan.pt.n);
    }
  });

  SweepTable table;
  table.config = config;
  table.rows.reserve(G);
  for (std::size_t g = 0; g < G; ++g) {
    const PointPlan& plan = plans[g];
    SweepRow row;
    row.axis_values = plan.pt.axis_values;
    row.flags = plan.flags;
    if (plan.feasible) {
      row.trials = T;
      const auto slice = [&](const std::vector<double>& slots) {
        return std::vector<double>(slots.begin() + static_cast<std::ptrdiff_t>(g * T),
                                   slots.begin() + static_cast<std::ptrdiff_t>((g + 1) * T));
      };
      row.id = mean_stderr(slice(slot_id));
      for (std::size_t s = 0; s < S; ++s) {
        ShiftCell cell;
        cell.name = config.shifts[s].name;
        cell.ood = mean_stderr(slice(slot_ood[s]));
        cell.diff = mean_stderr(slice(slot_diff[s]));
        cell.v_lower = plan.shifts[s].v_lower;
        cell.v_upper = plan.shifts[s].v_upper;
        cell.verdict = plan.shifts[s].verdict;
        cell.regime = plan.shifts[s].regime;
        cell.bounds_ok = plan.shifts[s].bounds_ok;
        if (config.record_bias) cell.bias_mean = mean_stderr(slice(slot_bias[s])).mean;
        row.shifts.push_back(std::move(cell));
      }
      if (config.record_bias) {
        row.id_bias_mean = mean_stderr(slice(slot_bias_id)).mean;
        double mx = 0.0;
        for (double v : slice(slot_defect)) mx = std::max(mx, v);
        row.bias_defect_max = mx;
      }
    } else {
      row.id = MeanStderr{kNan, kNan, 0};
      for (std::size_t s = 0; s < S; ++s) {
        ShiftCell cell;
        cell.name = config.shifts[s].name;
        cell.ood = MeanStderr{kNan, kNan, 0};
        cell.diff = MeanStderr{kNan, kNan, 0};
        row.shifts.push_back(std::move(cell));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i > 0) out += ";";
    out += flags[i];
  }
  return out;
}

}  // namespace

std::string table_to_csv(const SweepTable& table) {
  if (table.rows.empty()) throw std::runtime_error("cannot emit an empty sweep table");
  const std::size_t S = table.config.shifts.size();
  const bool single = S == 1;
  const auto sfx = [&](std::size_t s) {
    return single ? std::string() : "_" + table.config.shifts[s].name;
  };

  std::ostringstream out;
  for (const auto& [name, value] : table.rows.front().axis_values) out << name << ",";
  out << "id_mean,id_stderr";
  for (std::size_t s = 0; s < S; ++s) {
    out << ",ood_mean" << sfx(s) << ",ood_stderr" << sfx(s) << ",v_lower" << sfx(s) << ",v_upper"
        << sfx(s) << ",verdict" << sfx(s) << ",regime" << sfx(s);
  }
  out << ",trials,flags";
  for (std::size_t s = 0; s < S; ++s) {
    out << ",diff_mean" << sfx(s) << ",diff_stderr" << sfx(s);
  }
  if (table.config.record_bias) {
    out << ",id_bias_mean";
    for (std::size_t s = 0; s < S; ++s) out << ",ood_bias_mean" << sfx(s);
    out << ",bias_defect_max";
  }
  out << "\n";

  for (const auto& row : table.rows) {
    for (const auto& [name, value] : row.axis_values) out << format_double(value) << ",";
    out << format_double(row.id.mean) << "," << format_double(row.id.std_error);
    for (const auto& cell : row.shifts) {
      out << "," << format_double(cell.ood.mean) << "," << format_double(cell.ood.std_error) << ","
          << format_double(cell.v_lower) << "," << format_double(cell.v_upper) << ","
          << to_string(cell.verdict) << "," << to_string(cell.regime);
    }
    out << "," << row.trials << "," << join_flags(row.flags);
    for (const auto& cell : row.shifts) {
      out << "," << format_double(cell.diff.mean) << "," << format_double(cell.diff.std_error);
    }
    if (table.config.record_bias) {
      out << "," << format_double(row.id_bias_mean.value_or(kNan));
      for (const auto& cell : row.shifts) {
        out << "," << format_double(cell.bias_mean.value_or(kNan));
      }
      out << "," << format_double(row.bias_defect_max.value_or(kNan));
    }
    out << "\n";
  }
  return out.str();
}

void emit_csv(const SweepTable& table, const std::string& path) {
  write_text_file(path, table_to_csv(table));
}

namespace {

const json* find_key(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double require_number(const json& j, const char* key) {
  const json* v = find_key(j, key);
  if (v == nullptr || !v->is_number()) {
    throw ConfigError(std::string("config needs numeric field '") + key + "'");
  }
  return v->get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  const json* v = find_key(j, key);
  if (v == nullptr) return fallback;
  if (!v->is_number()) throw ConfigError(std::string("field '") + key + "' must be numeric");
  return v->get<double>();
}

std::size_t require_index(const json& j, const char* key) {
  const double v = require_number(j, key);
  if (v < 0.0 || v != std::floor(v)) {
    throw ConfigError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

std::string require_string(const json& j, const char* key) {
  const json* v = find_key(j, key);
  if (v == nullptr || !v->is_string()) {
    throw ConfigError(std::string("config needs string field '") + key + "'");
  }
  return v->get<std::string>();
}

SourceSpec parse_source(const json& j) {
  SourceSpec out;
  const std::string type = require_string(j, "type");
  if (type == "spiked") {
    SpikedParams params;
    params.k = require_index(j, "k");
    params.delta = require_number(j, "delta");
    params.eps = require_number(j, "eps");
    out.law = params;
  } else if (type == "decay") {
    DecayLaw law;
    const std::string kind = require_string(j, "law");
    if (kind == "power_log") {
      law.kind = DecayLaw::Kind::PowerLog;
    } else if (kind == "power") {
      law.kind = DecayLaw::Kind::Power;
    } else if (kind == "log_self") {
      law.kind = DecayLaw::Kind::LogSelf;
    } else {
      throw ConfigError("unknown decay law: " + kind);
    }
    law.a = number_or(j, "a", 1.0);
    law.b = number_or(j, "b", 1.0);
    out.law = law;
  } else {
    throw ConfigError("unknown source type: " + type);
  }
  return out;
}

NamedShift parse_shift(const json& j) {
  NamedShift out;
  out.name = require_string(j, "name");
  const std::string type = require_string(j, "type");
  if (type == "multiplicative") {
    out.shift = ShiftSpec::multiplicative(require_index(j, "k"), require_number(j, "alpha"),
                                          require_number(j, "beta"));
  } else if (type == "per_index") {
    const json* factors = find_key(j, "factors");
    if (factors == nullptr || !factors->is_array()) {
      throw ConfigError("per_index shift needs a 'factors' array");
    }
    std::vector<double> f;
    for (const auto& v : *factors) {
      if (!v.is_number()) throw ConfigError("per_index factors must be numeric");
      f.push_back(v.get<double>());
    }
    out.shift = ShiftSpec::per_index(std::move(f));
  } else {
    throw ConfigError("unknown shift type: " + type);
  }
  return out;
}

SweepAxis parse_axis(const json& j) {
  SweepAxis out;
  const std::string var = require_string(j, "variable");
  if (var == "p") {
    out.var = SweepAxis::Var::P;
  } else if (var == "noise_variance") {
    out.var = SweepAxis::Var::NoiseVariance;
  } else if (var == "n") {
    out.var = SweepAxis::Var::N;
  } else if (var == "alpha_beta") {
    out.var = SweepAxis::Var::AlphaBeta;
  } else {
    throw ConfigError("unknown axis variable: " + var);
  }
  const json* values = find_key(j, "values");
  if (values == nullptr || !values->is_array() || values->empty()) {
    throw ConfigError("axis needs a non-empty 'values' array");
  }
  for (const auto& v : *values) {
    if (out.var == SweepAxis::Var::AlphaBeta) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ConfigError("alpha_beta axis values must be [alpha, beta] pairs");
      }
      out.ab_values.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      if (!v.is_number()) throw ConfigError("axis values must be numeric");
      out.values.push_back(v.get<double>());
    }
  }
  return out;
}

}  // namespace

SweepConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    SweepConfig out;
    if (find_key(j, "name") != nullptr) out.name = require_string(j, "name");
    out.n = require_index(j, "n");
    out.p = find_key(j, "p") != nullptr ? require_index(j, "p") : 0;
    out.noise_variance = number_or(j, "noise_variance", 1.0);
    const json* source = find_key(j, "source");
    if (source == nullptr) throw ConfigError("config needs a 'source' object");
    out.source = parse_source(*source);
    const json* shifts = find_key(j, "shifts");
    if (shifts == nullptr || !shifts->is_array() || shifts->empty()) {
      throw ConfigError("config needs a non-empty 'shifts' array");
    }
    for (const auto& s : *shifts) out.shifts.push_back(parse_shift(s));
    const json* axis = find_key(j, "axis");
    if (axis == nullptr) throw ConfigError("config needs an 'axis' object");
    out.axis = parse_axis(*axis);
    out.trials = require_index(j, "trials");
    if (const json* seed = find_key(j, "master_seed"); seed != nullptr) {
      if (!seed->is_number_unsigned()) throw ConfigError("master_seed must be a non-negative integer");
      out.master_seed = seed->get<std::uint64_t>();
    }
    if (const json* b = find_key(j, "bounds"); b != nullptr) {
      if (find_key(*b, "k") != nullptr) out.bounds_k = require_index(*b, "k");
      out.bounds_b = number_or(*b, "b", 1.0);
    }
    if (const json* s = find_key(j, "solver"); s != nullptr) {
      const std::string path = find_key(*s, "path") != nullptr ? require_string(*s, "path") : "svd";
      if (path == "svd") {
        out.fit.path = FitOptions::Path::Svd;
      } else if (path == "gram") {
        out.fit.path = FitOptions::Path::Gram;
      } else {
        throw ConfigError("unknown solver path: " + path);
      }
      out.fit.tol = number_or(*s, "tol", 1e-10);
    }
    if (const json* rb = find_key(j, "record_bias"); rb != nullptr) {
      if (!rb->is_boolean()) throw ConfigError("record_bias must be boolean");
      out.record_bias = rb->get<bool>();
    }
    if (const json* t = find_key(j, "taxonomy"); t != nullptr) {
      out.taxonomy.tol_rel = number_or(*t, "tol_rel", 0.05);
      out.taxonomy.boundary_band = number_or(*t, "boundary_band", 0.10);
    }
    out.near_threshold_band = number_or(j, "near_threshold_band", 0.25);
    out.output = find_key(j, "output") != nullptr ? require_string(j, "output")
                                                  : out.name + ".csv";
    validate_config(out);
    return out;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
}

std::string config_to_json_text(const SweepConfig& config) {
  json j;
  j["name"] = config.name;
  j["n"] = config.n;
  if (config.p > 0) j["p"] = config.p;
  j["noise_variance"] = config.noise_variance;
  if (std::holds_alternative<SpikedParams>(config.source.law)) {
    const auto& params = std::get<SpikedParams>(config.source.law);
    j["source"] = {{"type", "spiked"}, {"k", params.k}, {"delta", params.delta},
                   {"eps", params.eps}};
  } else {
    const auto& law = std::get<DecayLaw>(config.source.law);
    const char* kind = law.kind == DecayLaw::Kind::PowerLog
                           ? "power_log"
                           : (law.kind == DecayLaw::Kind::Power ? "power" : "log_self");
    j["source"] = {{"type", "decay"}, {"law", kind}, {"a", law.a}, {"b", law.b}};
  }
  j["shifts"] = json::array();
  for (const auto& s : config.shifts) {
    json sj;
    sj["name"] = s.name;
    if (s.shift.is_multiplicative()) {
      const auto& m = s.shift.as_multiplicative();
      sj["type"] = "multiplicative";
      sj["k"] = m.k;
      sj["alpha"] = m.alpha;
      sj["beta"] = m.beta;
    } else {
      sj["type"] = "per_index";
      sj["factors"] = s.shift.as_per_index().factors;
    }
    j["shifts"].push_back(sj);
  }
  json axis;
  switch (config.axis.var) {
    case SweepAxis::Var::P: axis["variable"] = "p"; break;
    case SweepAxis::Var::NoiseVariance: axis["variable"] = "noise_variance"; break;
    case SweepAxis::Var::N: axis["variable"] = "n"; break;
    case SweepAxis::Var::AlphaBeta: axis["variable"] = "alpha_beta"; break;
  }
  if (config.axis.var == SweepAxis::Var::AlphaBeta) {
    axis["values"] = json::array();
    for (const auto& [a, b] : config.axis.ab_values) axis["values"].push_back({a, b});
  } else {
    axis["values"] = config.axis.values;
  }
  j["axis"] = axis;
  j["trials"] = config.trials;
  j["master_seed"] = config.master_seed;
  json bounds;
  if (config.bounds_k) bounds["k"] = *config.bounds_k;
  bounds["b"] = config.bounds_b;
  j["bounds"] = bounds;
  j["solver"] = {{"path", config.fit.path == FitOptions::Path::Gram ? "gram" : "svd"},
                 {"tol", config.fit.tol}};
  j["record_bias"] = config.record_bias;
  j["taxonomy"] = {{"tol_rel", config.taxonomy.tol_rel},
                   {"boundary_band", config.taxonomy.boundary_band}};
  j["near_threshold_band"] = config.near_threshold_band;
  j["output"] = config.output;
  return j.dump(2) + "\n";
}

namespace {

SweepConfig preset_fig1() {
  SweepConfig c;
  c.name = "fig1";
  c.n = 60;
  c.noise_variance = 1.0;
  c.source.law = SpikedParams{10, 1.0, 1e-6, 0};
  c.shifts = {{"ood", ShiftSpec::multiplicative(10, 2.0, 0.1)}};
  c.axis.var = SweepAxis::Var::P;
  c.axis.values = {20,  25,  32,  41,  53,  67,  86,   109,  139,  177,
                   226, 288, 367, 467, 595, 759, 967,  1232, 1568, 2000};
  c.trials = 100;
  c.master_seed = 20240601;
  c.output = "fig1.csv";
  return c;
}

SweepConfig preset_fig5() {
  SweepConfig c;
  c.name = "fig5";
  c.n = 500;
  c.p = 4900;
  c.source.law = SpikedParams{70, 1.0, 0.005, 0};
  c.shifts = {{"beneficial", ShiftSpec::multiplicative(70, 1.125, 0.65)},
              {"malignant", ShiftSpec::multiplicative(70, 0.875, 1.35)}};
  c.axis.var = SweepAxis::Var::NoiseVariance;
  c.axis.values = {0.25, 0.5, 1.0, 2.0, 4.0};
  c.trials = 25;
  c.master_seed = 20240605;
  c.fit.path = FitOptions::Path::Gram;
  c.record_bias = true;
  c.output = "fig5.csv";
  return c;
}

SweepConfig preset_fig6() {
  SweepConfig c;
  c.name = "fig6";
  c.n = 50;
  c.noise_variance = 1.0;
  c.source.law = SpikedParams{10, 1.0, 1e-6, 0};
  c.shifts = {{"ood", ShiftSpec::multiplicative(10, 1.5, 0.5)}};
  c.axis.var = SweepAxis::Var::P;
  c.axis.values = {75, 92, 112, 136, 166, 203, 248, 303, 369, 451, 550, 671, 819, 1000};
  c.trials = 100;
  c.master_seed = 20240606;
  c.output = "fig6.csv";
  return c;
}

SweepConfig preset_fig7() {
  SweepConfig c;
  c.name = "fig7";
  c.n = 50;
  c.noise_variance = 2.0;
  c.source.law = DecayLaw{DecayLaw::Kind::PowerLog, 1.0, 2.0};
  c.shifts = {{"ood", ShiftSpec::multiplicative(10, 2.0, 0.1)}};
  c.axis.var = SweepAxis::Var::P;
  c.axis.values = {10, 15, 23, 35, 53, 81, 123, 187, 285, 433, 658, 1000};
  c.trials = 50;
  c.master_seed = 20240607;
  c.output = "fig7.csv";
  return c;
}

}  // namespace

std::vector<std::string> preset_names() { return {"fig1", "fig5", "fig6", "fig7"}; }

bool is_preset_name(const std::string& name) {
  for (const auto& p : preset_names()) {
    if (p == name) return true;
  }
  return false;
}

SweepConfig preset_config(const std::string& name) {
  if (name == "fig1") return preset_fig1();
  if (name == "fig5") return preset_fig5();
  if (name == "fig6") return preset_fig6();
  if (name == "fig7") return preset_fig7();
  throw ConfigError("unknown preset: " + name);
}

}  // namespace shiftlab
