#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "units.hpp"

namespace relaysec::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for key '" + key + "': " + value);
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  if (v != std::floor(v)) throw ConfigError("key '" + key + "' requires an integer, got " + value);
  return static_cast<std::int64_t>(v);
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid seed value for key '" + key + "': " + value);
  }
}

}  // namespace

std::vector<double> SweepSpec::values() const {
  if (!active()) throw ConfigError("sweep variable is not set");
  if (!(step > 0.0)) throw ConfigError("sweep step must be > 0");
  if (to < from) throw ConfigError("sweep range is empty (to < from)");
  std::vector<double> out;
  for (double v = from; v <= to + 0.5 * step; v += step) out.push_back(std::min(v, to));
  if (!out.empty() && out.back() < to - 1e-12 * std::max(1.0, std::abs(to)))
    out.push_back(to);
  return out;
}

ExperimentConfig scenario_defaults(const std::string& scenario) {
  ExperimentConfig cfg;
  cfg.scenario = scenario;
  if (scenario == "fig3" || scenario == "custom") {
    // Fig. 3 geometry: d = 50/50/30/60/40 m, alpha 2.7, -80 dBm noise, N = 300.
    cfg.params = SystemParams{};
    cfg.schemes = {Scheme::proposed(), Scheme::fixed_t(0.35), Scheme::eb(), Scheme::ib(),
                   Scheme::no_jammer()};
    if (scenario == "fig3") cfg.sweep = {"p_s_dbm", 20.0, 40.0, 5.0};
  } else if (scenario == "fig1") {
    cfg.params.p_s = dbm_to_watts(30.0);
    cfg.params.p_r = dbm_to_watts(30.0);
    cfg.params.noise_power = dbm_to_watts(-110.0);
    cfg.params.alpha = 3.0;
    cfg.params.d_sr = cfg.params.d_sj = cfg.params.d_rd = cfg.params.d_re = cfg.params.d_je =
        100.0;
    cfg.params.n_antennas = 200;
    cfg.sweep = {"t", 0.0, 1.0, 0.01};
    cfg.x_je = 1.0;
  } else if (scenario == "fig2") {
    cfg.params.p_s = dbm_to_watts(30.0);
    cfg.params.p_r = dbm_to_watts(30.0);
    cfg.params.noise_power = dbm_to_watts(-80.0);
    cfg.params.alpha = 3.0;
    cfg.params.d_sr = cfg.params.d_sj = cfg.params.d_rd = 20.0;
    cfg.params.d_re = 30.0;
    cfg.params.d_je = 10.0;
    cfg.params.n_antennas = 500;
    cfg.sweep = {"p_r_dbm", 0.0, 40.0, 2.0};
    cfg.x_rd = 1.0;
    cfg.x_re = 1.0;
    cfg.x_je = 0.82;
  } else {
    throw ConfigError("unknown scenario '" + scenario + "' (expected fig1|fig2|fig3|custom)");
  }
  return cfg;
}

void set_sweep_variable(SystemParams& params, const std::string& var, double value) {
  if (var == "p_s_dbm") params.p_s = dbm_to_watts(value);
  else if (var == "p_r_dbm") params.p_r = dbm_to_watts(value);
  else if (var == "noise_dbm") params.noise_power = dbm_to_watts(value);
  else if (var == "eta") params.eta = value;
  else if (var == "l_c") params.l_c = value;
  else if (var == "alpha") params.alpha = value;
  else if (var == "d_sr") params.d_sr = value;
  else if (var == "d_sj") params.d_sj = value;
  else if (var == "d_rd") params.d_rd = value;
  else if (var == "d_re") params.d_re = value;
  else if (var == "d_je") params.d_je = value;
  else if (var == "n_antennas") {
    if (value != std::floor(value)) throw ConfigError("n_antennas must be an integer");
    params.n_antennas = static_cast<int>(value);
  } else {
    throw ConfigError("unknown sweep/parameter variable '" + var + "'");
  }
}

std::vector<Scheme> parse_schemes(const std::string& list, double fixed_t) {
  std::vector<Scheme> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string name = trim(item);
    if (name.empty()) continue;
    if (name == "proposed") out.push_back(Scheme::proposed());
    else if (name == "fixed_t") out.push_back(Scheme::fixed_t(fixed_t));
    else if (name == "eb") out.push_back(Scheme::eb());
    else if (name == "ib") out.push_back(Scheme::ib());
    else if (name == "no_jammer") out.push_back(Scheme::no_jammer());
    else throw ConfigError("unknown scheme '" + name + "'");
  }
  if (out.empty()) throw ConfigError("scheme list is empty");
  return out;
}

void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "scenario") {
    throw ConfigError("'scenario' cannot be overridden inside a config file; use --scenario");
  } else if (key == "p_s_dbm" || key == "p_r_dbm" || key == "noise_dbm" || key == "eta" ||
             key == "l_c" || key == "alpha" || key == "d_sr" || key == "d_sj" ||
             key == "d_rd" || key == "d_re" || key == "d_je" || key == "n_antennas") {
    set_sweep_variable(cfg.params, key, parse_double(key, value));
  } else if (key == "fixed_t") {
    cfg.fixed_t = parse_double(key, value);
    for (auto& s : cfg.schemes)
      if (s.kind == Scheme::Kind::FixedT) s = Scheme::fixed_t(cfg.fixed_t);
  } else if (key == "schemes") {
    cfg.schemes = parse_schemes(value, cfg.fixed_t);
  } else if (key == "n_trials") {
    const std::int64_t v = parse_int(key, value);
    if (v < 1) throw ConfigError("n_trials must be >= 1");
    cfg.n_trials = v;
  } else if (key == "master_seed") {
    cfg.master_seed = parse_seed(key, value);
  } else if (key == "workers") {
    cfg.n_workers = static_cast<int>(parse_int(key, value));
  } else if (key == "sweep_var") {
    cfg.sweep.var = value;
  } else if (key == "sweep_from") {
    cfg.sweep.from = parse_double(key, value);
  } else if (key == "sweep_to") {
    cfg.sweep.to = parse_double(key, value);
  } else if (key == "sweep_step") {
    cfg.sweep.step = parse_double(key, value);
  } else if (key == "x_rd") {
    cfg.x_rd = parse_double(key, value);
  } else if (key == "x_re") {
    cfg.x_re = parse_double(key, value);
  } else if (key == "x_je") {
    cfg.x_je = parse_double(key, value);
  } else if (key == "output") {
    cfg.output_path = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(line_no) + ": empty key");
    apply_override(cfg, key, value);
  }
}

}  // namespace relaysec::cli
