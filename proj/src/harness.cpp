#include "gravimech/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gravimech/constants.hpp"
#include "json.hpp"

namespace gravimech::harness {

namespace con = gravimech::constants;
using nlohmann::json;

// --------------------------------------------------------------------------
// Configuration
// --------------------------------------------------------------------------

namespace {

std::string join_keys(const std::vector<std::string>& keys) {
  std::string out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) out += ", ";
    out += keys[i];
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(const std::string& message, std::vector<std::string> keys)
    : std::runtime_error(message + " [offending keys: " + join_keys(keys) + "]"),
      keys_(std::move(keys)) {}

namespace {

const json* pick_section(const json& root, const char* name,
                         std::vector<std::string>& bad) {
  if (!root.contains(name) || !root[name].is_object()) {
    bad.emplace_back(name);
    return nullptr;
  }
  return &root[name];
}

double pick_number(const json* section, const char* section_name, const char* key,
                   bool required, double fallback, std::vector<std::string>& bad) {
  if (section == nullptr) return fallback;
  if (!section->contains(key)) {
    if (required) bad.push_back(std::string(section_name) + "." + key);
    return fallback;
  }
  const json& v = (*section)[key];
  if (!v.is_number()) {
    bad.push_back(std::string(section_name) + "." + key);
    return fallback;
  }
  return v.get<double>();
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what(),
                      {"<document>"});
  }
  std::vector<std::string> bad;
  const json* material = pick_section(root, "material", bad);
  const json* geometry = pick_section(root, "geometry", bad);
  const json* pulse_sec = pick_section(root, "pulse", bad);
  const json* experiment = pick_section(root, "experiment", bad);

  ExperimentConfig cfg;
  if (material != nullptr && material->contains("name") &&
      (*material)["name"].is_string())
    cfg.material.name = (*material)["name"].get<std::string>();
  const double density =
      pick_number(material, "material", "density_kg_m3", true, 0.0, bad);
  const double ionic_amu =
      pick_number(material, "material", "ionic_mass_amu", true, 0.0, bad);
  const double debye_temp =
      pick_number(material, "material", "debye_temp_K", true, 0.0, bad);
  const double lattice =
      pick_number(material, "material", "lattice_spacing_m", true, 0.0, bad);
  const double radius = pick_number(geometry, "geometry", "radius_m", true, 0.0, bad);
  const double thickness =
      pick_number(geometry, "geometry", "thickness_m", true, 0.0, bad);
  const double n_value = pick_number(pulse_sec, "pulse", "n", true, -1.0, bad);
  cfg.t_p = pick_number(pulse_sec, "pulse", "t_p_s", true, 0.0, bad);
  cfg.t_wait = pick_number(pulse_sec, "pulse", "T_wait_s", true, 0.0, bad);
  cfg.omega_m =
      pick_number(experiment, "experiment", "omega_m_rad_s", true, 0.0, bad);
  cfg.q_factor = pick_number(experiment, "experiment", "Q", true, 0.0, bad);
  cfg.temperature = pick_number(experiment, "experiment", "temp_K", true, -1.0, bad);
  if (experiment != nullptr && experiment->contains("omega_sn_override_rad_s"))
    cfg.omega_sn_override = pick_number(experiment, "experiment",
                                        "omega_sn_override_rad_s", false, 0.0, bad);
  cfg.omega_cav =
      pick_number(experiment, "experiment", "omega_cav_rad_s", false, 0.0, bad);
  if (!bad.empty()) throw ConfigError("config schema violation", bad);

  cfg.material.density = density;
  cfg.material.ionic_mass = ionic_amu * con::amu;
  cfg.material.debye_energy = debye_temp * con::k_B;
  cfg.material.lattice_spacing = lattice;
  cfg.geometry.radius = radius;
  cfg.geometry.thickness = thickness;
  cfg.pulse_n = static_cast<int>(std::llround(n_value));

  // Semantic validation, again collecting every violation before throwing.
  if (!(density > 0.0)) bad.emplace_back("material.density_kg_m3");
  if (!(ionic_amu > 0.0)) bad.emplace_back("material.ionic_mass_amu");
  if (!(debye_temp > 0.0)) bad.emplace_back("material.debye_temp_K");
  if (!(lattice > 0.0)) bad.emplace_back("material.lattice_spacing_m");
  if (!(radius > 0.0)) bad.emplace_back("geometry.radius_m");
  if (!(thickness > 0.0)) bad.emplace_back("geometry.thickness_m");
  if (n_value < 0.0 || std::fabs(n_value - cfg.pulse_n) > 1e-9)
    bad.emplace_back("pulse.n");
  if (!(cfg.t_p > 0.0)) bad.emplace_back("pulse.t_p_s");
  if (!(cfg.t_wait >= 0.0)) bad.emplace_back("pulse.T_wait_s");
  if (!(cfg.omega_m > 0.0)) bad.emplace_back("experiment.omega_m_rad_s");
  if (!(cfg.q_factor > 0.0)) bad.emplace_back("experiment.Q");
  if (!(cfg.temperature >= 0.0)) bad.emplace_back("experiment.temp_K");
  if (cfg.omega_sn_override && !(*cfg.omega_sn_override >= 0.0))
    bad.emplace_back("experiment.omega_sn_override_rad_s");
  if (!(cfg.omega_cav >= 0.0)) bad.emplace_back("experiment.omega_cav_rad_s");
  if (!bad.empty()) throw ConfigError("config value out of range", bad);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError("cannot read config file: " + path, {"<file>"});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

double resolved_omega_sn(const ExperimentConfig& config) {
  if (config.omega_sn_override) return *config.omega_sn_override;
  const double xi = physcore::xi0(config.material, config.temperature);
  return physcore::spike_frequency(config.material, xi);
}

// --------------------------------------------------------------------------
// Comparison and sweeps
// --------------------------------------------------------------------------

ComparisonResult run_comparison(const ExperimentConfig& config) {
  config.material.validate();
  config.geometry.validate();
  const double omega_sn = resolved_omega_sn(config);
  const pulse::PulseProtocol protocol(config.pulse_n, config.t_p, config.t_wait);

  cwl::CwlParams cwl_params;
  cwl_params.omega_m = config.omega_m;
  cwl_params.omega_sn = omega_sn;
  const cwl::CwlPrediction cwl_pred = cwl::cwl_probabilities(cwl_params, protocol);

  sn::SnParams sn_params;
  sn_params.omega_m = config.omega_m;
  sn_params.omega_sn = omega_sn;
  sn_params.g0 = protocol.g0();
  const sn::SnPulseResult sn_pred =
      sn::sn_pulse_p0(sn_params, config.pulse_n, config.t_wait);

  const sn::ThermalResult thermal = sn::thermal_p0(
      config.omega_m, config.q_factor, config.temperature, config.t_p);

  ComparisonResult r;
  r.predictions = {{"QM", 0.0, 1.0},
                   {"SN", sn_pred.p0, sn_pred.p1},
                   {"CWL", cwl_pred.P0, cwl_pred.P1}};
  r.omega_sn = omega_sn;
  r.eps2 = cwl_pred.eps2;
  r.sn_p0_exact = sn_pred.p0_exact;
  r.p0_th = thermal.p0_th;
  r.extrapolation_residual = cwl_pred.extrapolation_residual;
  r.eps2_small_ok = cwl_pred.eps2 < 0.25;
  r.duration_ok = cwl_pred.regime_ok;
  r.thermal_ok = thermal.regime_ok;
  r.effective = config;
  return r;
}

const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> axes = {
      "omega_m", "omega_sn", "n", "tp", "Twait", "temperature", "Q"};
  return axes;
}

SweepResult sweep(const ExperimentConfig& config, const std::string& axis,
                  const std::vector<double>& grid) {
  const std::vector<std::string>& axes = sweep_axes();
  if (std::find(axes.begin(), axes.end(), axis) == axes.end())
    throw ConfigError("unknown sweep axis '" + axis + "'; valid axes: " +
                          join_keys(axes),
                      {axis});
  SweepResult out;
  out.axis = axis;
  out.grid = grid;
  out.rows.reserve(grid.size());
  for (double v : grid) {
    ExperimentConfig point = config;
    if (axis == "omega_m") {
      point.omega_m = v;
    } else if (axis == "omega_sn") {
      point.omega_sn_override = v;
    } else if (axis == "n") {
      const long long r = std::llround(v);
      if (r < 0 || std::fabs(v - static_cast<double>(r)) > 1e-9)
        throw ConfigError("sweep axis 'n' requires non-negative integers", {"n"});
      point.pulse_n = static_cast<int>(r);
    } else if (axis == "tp") {
      point.t_p = v;
    } else if (axis == "Twait") {
      point.t_wait = v;
    } else if (axis == "temperature") {
      point.temperature = v;
    } else {  // Q
      point.q_factor = v;
    }
    out.rows.push_back(run_comparison(point));
  }
  return out;
}

std::vector<double> linear_grid(double from, double to, int points) {
  if (points < 1) throw std::invalid_argument("linear_grid: need points >= 1");
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = from;
    return g;
  }
  for (int i = 0; i < points; ++i)
    g[i] = from + (to - from) * i / (points - 1);
  g.back() = to;
  return g;
}

std::vector<double> log_grid(double from, double to, int points) {
  if (points < 1) throw std::invalid_argument("log_grid: need points >= 1");
  if (!(from > 0.0) || !(to > 0.0))
    throw std::invalid_argument("log_grid: endpoints must be > 0");
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = from;
    return g;
  }
  const double lf = std::log(from), lt = std::log(to);
  for (int i = 0; i < points; ++i)
    g[i] = std::exp(lf + (lt - lf) * i / (points - 1));
  g.front() = from;
  g.back() = to;
  return g;
}

// --------------------------------------------------------------------------
// Emission
// --------------------------------------------------------------------------

std::string format_double(double v) {
  char buf[64];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace {

json config_to_json(const ExperimentConfig& cfg) {
  json material = {
      {"name", cfg.material.name},
      {"density_kg_m3", cfg.material.density},
      {"ionic_mass_amu", cfg.material.ionic_mass / con::amu},
      {"debye_temp_K", cfg.material.debye_energy / con::k_B},
      {"lattice_spacing_m", cfg.material.lattice_spacing},
  };
  json experiment = {
      {"omega_m_rad_s", cfg.omega_m},
      {"Q", cfg.q_factor},
      {"temp_K", cfg.temperature},
      {"omega_cav_rad_s", cfg.omega_cav},
  };
  if (cfg.omega_sn_override)
    experiment["omega_sn_override_rad_s"] = *cfg.omega_sn_override;
  return json{
      {"material", material},
      {"geometry",
       {{"radius_m", cfg.geometry.radius}, {"thickness_m", cfg.geometry.thickness}}},
      {"pulse",
       {{"n", cfg.pulse_n}, {"t_p_s", cfg.t_p}, {"T_wait_s", cfg.t_wait}}},
      {"experiment", experiment},
  };
}

/** Flat "# section.key=value" provenance lines echoing the effective config. */
void append_config_echo(std::ostringstream& out, const ExperimentConfig& cfg) {
  const json flat = config_to_json(cfg);
  for (const auto& [section, body] : flat.items())
    for (const auto& [key, value] : body.items()) {
      out << "# " << section << "." << key << "=";
      if (value.is_string())
        out << value.get<std::string>();
      else if (value.is_number_integer())
        out << value.get<long long>();
      else
        out << format_double(value.get<double>());
      out << "\n";
    }
}

json prediction_rows(const ComparisonResult& r) {
  json rows = json::array();
  for (const TheoryPrediction& p : r.predictions)
    rows.push_back({{"theory", p.theory}, {"P0", p.P0}, {"P1", p.P1}});
  return rows;
}

json comparison_body(const ComparisonResult& r) {
  return json{
      {"omega_sn_rad_s", r.omega_sn},
      {"eps2", r.eps2},
      {"predictions", prediction_rows(r)},
      {"sn_p0_exact", r.sn_p0_exact},
      {"p0_th", r.p0_th},
      {"extrapolation_residual", r.extrapolation_residual},
      {"flags",
       {{"eps2_small_ok", r.eps2_small_ok},
        {"duration_ok", r.duration_ok},
        {"thermal_ok", r.thermal_ok},
        {"regime_ok", r.regime_ok()}}},
  };
}

}  // namespace

std::string comparison_json(const ComparisonResult& result) {
  json body = comparison_body(result);
  body["config"] = config_to_json(result.effective);
  return body.dump(2) + "\n";
}

std::string comparison_csv(const ComparisonResult& result) {
  std::ostringstream out;
  out << "# gravimech comparison\n";
  append_config_echo(out, result.effective);
  out << "# omega_sn_rad_s=" << format_double(result.omega_sn) << "\n"
      << "# eps2=" << format_double(result.eps2) << "\n"
      << "# sn_p0_exact=" << format_double(result.sn_p0_exact) << "\n"
      << "# p0_th=" << format_double(result.p0_th) << "\n"
      << "# extrapolation_residual=" << format_double(result.extrapolation_residual)
      << "\n"
      << "# eps2_small_ok=" << (result.eps2_small_ok ? 1 : 0) << "\n"
      << "# duration_ok=" << (result.duration_ok ? 1 : 0) << "\n"
      << "# thermal_ok=" << (result.thermal_ok ? 1 : 0) << "\n";
  out << "theory,P0,P1\n";
  for (const TheoryPrediction& p : result.predictions)
    out << p.theory << "," << format_double(p.P0) << "," << format_double(p.P1)
        << "\n";
  return out.str();
}

std::string sweep_json(const SweepResult& result) {
  json rows = json::array();
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    json row = comparison_body(result.rows[i]);
    row["axis_value"] = result.grid[i];
    row["n"] = result.rows[i].effective.pulse_n;
    rows.push_back(std::move(row));
  }
  json body = {
      {"axis", result.axis},
      {"grid", result.grid},
      {"rows", rows},
  };
  if (!result.rows.empty())
    body["config"] = config_to_json(result.rows.front().effective);
  return body.dump(2) + "\n";
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "# gravimech sweep\n";
  out << "# axis=" << result.axis << "\n";
  if (!result.rows.empty()) append_config_echo(out, result.rows.front().effective);
  out << "axis_value,omega_m_rad_s,omega_sn_rad_s,eps2,n,t_p_s,T_wait_s,temp_K,Q,"
         "qm_P0,qm_P1,sn_P0,sn_P1,cwl_P0,cwl_P1,sn_p0_exact,p0_th,"
         "extrapolation_residual,eps2_small_ok,duration_ok,thermal_ok\n";
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const ComparisonResult& r = result.rows[i];
    out << format_double(result.grid[i]) << ","
        << format_double(r.effective.omega_m) << "," << format_double(r.omega_sn)
        << "," << format_double(r.eps2) << "," << r.effective.pulse_n << ","
        << format_double(r.effective.t_p) << "," << format_double(r.effective.t_wait)
        << "," << format_double(r.effective.temperature) << ","
        << format_double(r.effective.q_factor);
    for (const TheoryPrediction& p : r.predictions)
      out << "," << format_double(p.P0) << "," << format_double(p.P1);
    out << "," << format_double(r.sn_p0_exact) << "," << format_double(r.p0_th)
        << "," << format_double(r.extrapolation_residual) << ","
        << (r.eps2_small_ok ? 1 : 0) << "," << (r.duration_ok ? 1 : 0) << ","
        << (r.thermal_ok ? 1 : 0) << "\n";
  }
  return out.str();
}

void emit(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit: cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("emit: write failed: " + path);
}

}  // namespace gravimech::harness
