#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gravimech/constants.hpp"
#include "gravimech/cwl.hpp"
#include "gravimech/harness.hpp"
#include "gravimech/physcore.hpp"
#include "gravimech/pulse.hpp"
#include "gravimech/sn.hpp"

namespace gm = gravimech;
namespace con = gravimech::constants;
using nlohmann::json;

namespace {

void emit_json(const json& body, const std::string& out_path) {
  gm::harness::emit(body.dump(2) + "\n", out_path);
}

// ---------------------------------------------------------------------------
// material props
// ---------------------------------------------------------------------------

struct MaterialPropsOpts {
  std::string config_path;
  double temp_k = -1.0;  // < 0 means "use the config's temp_K"
  long mc_pairs = 10'000'000;
  std::uint64_t seed = 0x5eed;
  std::string out_path;
};

int run_material_props(const MaterialPropsOpts& opt) {
  const gm::harness::ExperimentConfig cfg =
      gm::harness::load_config(opt.config_path);
  const double temp = opt.temp_k >= 0.0 ? opt.temp_k : cfg.temperature;
  const gm::physcore::DerivedScales scales = gm::physcore::derive_scales(
      cfg.material, cfg.geometry, temp, cfg.q_factor, opt.mc_pairs, opt.seed);
  emit_json(json{{"xi0_m", scales.xi0},
                 {"omega_sn_rad_s", scales.omega_sn},
                 {"omega_b_rad_s", scales.omega_b},
                 {"gamma", scales.gamma},
                 {"gamma_std_error", scales.gamma_std_error},
                 {"v_spike_depth_K", scales.v_spike_depth / con::k_B},
                 {"v_slow_depth_eV", scales.v_slow_depth / con::eV},
                 {"tau_r_s", scales.tau_r}},
            opt.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// cwl pulse-prob
// ---------------------------------------------------------------------------

struct CwlPulseOpts {
  double omega_m = 1.0;
  double omega_sn = 0.0;
  int n = 0;
  double t_p = 1.0;
  double t_wait = 0.0;
  bool finite_n_check = false;
  bool strict = false;
  std::string out_path;
};

int run_cwl_pulse_prob(const CwlPulseOpts& opt) {
  gm::cwl::CwlParams params;
  params.omega_m = opt.omega_m;
  params.omega_sn = opt.omega_sn;
  const gm::pulse::PulseProtocol protocol(opt.n, opt.t_p, opt.t_wait);
  const gm::cwl::CwlPrediction pred = gm::cwl::cwl_probabilities(params, protocol);
  json body{{"P0", pred.P0},
            {"P1", pred.P1},
            {"eps2", pred.eps2},
            {"regime_ok", pred.regime_ok},
            {"extrapolation_residual", pred.extrapolation_residual}};
  if (opt.finite_n_check) {
    json samples = json::array();
    for (const auto& [n_rep, value] : pred.finite_n_samples)
      samples.push_back({{"N", n_rep}, {"two_over_N_log_K0", value}});
    body["finite_N_samples"] = samples;
    body["p0_pre"] = pred.p0_pre;
  }
  emit_json(body, opt.out_path);
  return (opt.strict && !pred.regime_ok) ? 3 : 0;
}

// ---------------------------------------------------------------------------
// sn subcommands
// ---------------------------------------------------------------------------

struct SnPulseOpts {
  double omega_m = 1.0;
  double omega_sn = 0.0;
  int n = 0;
  double t_wait = 0.0;
  std::string out_path;
};

int run_sn_pulse_prob(const SnPulseOpts& opt) {
  gm::sn::SnParams params;
  params.omega_m = opt.omega_m;
  params.omega_sn = opt.omega_sn;
  const gm::sn::SnPulseResult res = gm::sn::sn_pulse_p0(params, opt.n, opt.t_wait);
  emit_json(json{{"p0", res.p0},
                 {"p1", res.p1},
                 {"p0_leading", res.p0_leading},
                 {"p0_exact", res.p0_exact}},
            opt.out_path);
  return 0;
}

struct SnSteadyOpts {
  double lambda = 0.0;
  double omega_m = 1.0;
  double omega_sn = 0.0;
  bool legacy_vpp = false;
  std::string out_path;
};

int run_sn_steady(const SnSteadyOpts& opt) {
  const gm::sn::SnParams params =
      gm::sn::params_from_lambda(opt.lambda, opt.omega_m, opt.omega_sn);
  const gm::sn::ConditionalGaussianState st = gm::sn::steady_covariance(
      params, opt.legacy_vpp ? gm::sn::VppForm::legacy_printed
                             : gm::sn::VppForm::riccati_consistent);
  emit_json(json{{"Lambda", params.Lambda()},
                 {"Omega", params.Omega()},
                 {"V_xx", st.V_xx},
                 {"V_xp", st.V_xp},
                 {"V_pp", st.V_pp},
                 {"legacy_vpp", opt.legacy_vpp}},
            opt.out_path);
  return 0;
}

struct SnTrajectoryOpts {
  double lambda = 1.0;
  double omega_m = 1.0;
  double omega_sn = 0.0;
  long steps = 1000;
  double dt = 1e-3;
  std::uint64_t seed = 12345;
  double x0 = 0.0;
  double p0 = 0.0;
  std::string out_path;
};

int run_sn_trajectory(const SnTrajectoryOpts& opt) {
  const gm::sn::SnParams params =
      gm::sn::params_from_lambda(opt.lambda, opt.omega_m, opt.omega_sn);
  gm::sn::ConditionalGaussianState initial = gm::sn::steady_covariance(params);
  initial.mean_x = opt.x0;
  initial.mean_p = opt.p0;
  const gm::sn::Trajectory traj =
      gm::sn::simulate_trajectory(params, initial, opt.dt, opt.steps, opt.seed);
  std::ostringstream out;
  out << "# gravimech sn trajectory\n"
      << "# Lambda=" << gm::harness::format_double(params.Lambda()) << "\n"
      << "# omega_m_rad_s=" << gm::harness::format_double(params.omega_m) << "\n"
      << "# omega_sn_rad_s=" << gm::harness::format_double(params.omega_sn) << "\n"
      << "# alpha=" << gm::harness::format_double(params.alpha) << "\n"
      << "# dt_s=" << gm::harness::format_double(opt.dt) << "\n"
      << "# steps=" << opt.steps << "\n"
      << "# seed=" << opt.seed << "\n"
      << "# y in row k is the record over the step ending at that row's t;"
         " the t=0 row carries y=0\n"
      << "t,mean_x,mean_p,Vxx,Vxp,Vpp,y\n";
  for (std::size_t k = 0; k < traj.t.size(); ++k) {
    const gm::sn::ConditionalGaussianState& s = traj.states[k];
    const double y = k == 0 ? 0.0 : traj.record.y[k - 1];
    out << gm::harness::format_double(traj.t[k]) << ","
        << gm::harness::format_double(s.mean_x) << ","
        << gm::harness::format_double(s.mean_p) << ","
        << gm::harness::format_double(s.V_xx) << ","
        << gm::harness::format_double(s.V_xp) << ","
        << gm::harness::format_double(s.V_pp) << ","
        << gm::harness::format_double(y) << "\n";
  }
  gm::harness::emit(out.str(), opt.out_path);
  return 0;
}

struct SnThermalOpts {
  double omega_m = 1.0;
  double q_factor = 1.0;
  double temp_k = 0.0;
  double t_p = 1.0;
  bool strict = false;
  std::string out_path;
};

int run_sn_thermal(const SnThermalOpts& opt) {
  const gm::sn::ThermalResult res =
      gm::sn::thermal_p0(opt.omega_m, opt.q_factor, opt.temp_k, opt.t_p);
  emit_json(json{{"p0_th", res.p0_th},
                 {"regime_ok", res.regime_ok},
                 {"regime_ratio", res.regime_ratio}},
            opt.out_path);
  return (opt.strict && !res.regime_ok) ? 3 : 0;
}

struct SnFeasibilityOpts {
  std::string config_path;
  double target = 1.0;
  std::string out_path;
};

int run_sn_feasibility(const SnFeasibilityOpts& opt) {
  const gm::harness::ExperimentConfig cfg =
      gm::harness::load_config(opt.config_path);
  const double omega_sn = gm::harness::resolved_omega_sn(cfg);
  const gm::sn::FeasibilityResult res = gm::sn::feasibility(omega_sn, opt.target);
  emit_json(json{{"omega_sn", res.omega_sn},
                 {"T_over_Q_max_K", res.T_over_Q_max}},
            opt.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// compare / sweep
// ---------------------------------------------------------------------------

struct PulseOverrides {
  int n = -1;          // < 0 means "keep the config value"
  double t_p = -1.0;   // < 0 means "keep the config value"
  double t_wait = -1.0;
  void apply(gm::harness::ExperimentConfig& cfg) const {
    if (n >= 0) cfg.pulse_n = n;
    if (t_p >= 0.0) cfg.t_p = t_p;
    if (t_wait >= 0.0) cfg.t_wait = t_wait;
  }
};

void add_pulse_overrides(CLI::App* cmd, PulseOverrides& ov) {
  cmd->add_option("--n", ov.n, "Override the pulse rotation index");
  cmd->add_option("--tp", ov.t_p, "Override the pulse duration (s)");
  cmd->add_option("--Twait", ov.t_wait, "Override the inter-pulse wait (s)");
}

struct CompareOpts {
  std::string config_path;
  PulseOverrides pulse;
  bool as_json = false;
  bool as_csv = false;
  bool strict = false;
  std::string out_path;
};

int run_compare(const CompareOpts& opt) {
  gm::harness::ExperimentConfig cfg = gm::harness::load_config(opt.config_path);
  opt.pulse.apply(cfg);
  const gm::harness::ComparisonResult res = gm::harness::run_comparison(cfg);
  const std::string text = opt.as_csv ? gm::harness::comparison_csv(res)
                                      : gm::harness::comparison_json(res);
  gm::harness::emit(text, opt.out_path);
  return (opt.strict && !res.regime_ok()) ? 3 : 0;
}

struct SweepOpts {
  std::string config_path;
  PulseOverrides pulse;
  std::string axis;
  double from = 0.0;
  double to = 0.0;
  int points = 50;
  bool log_spacing = false;
  bool as_json = false;
  bool as_csv = false;
  bool strict = false;
  std::string out_path;
};

int run_sweep(const SweepOpts& opt) {
  gm::harness::ExperimentConfig cfg = gm::harness::load_config(opt.config_path);
  opt.pulse.apply(cfg);
  const std::vector<double> grid =
      opt.log_spacing ? gm::harness::log_grid(opt.from, opt.to, opt.points)
                      : gm::harness::linear_grid(opt.from, opt.to, opt.points);
  const gm::harness::SweepResult res = gm::harness::sweep(cfg, opt.axis, grid);
  const std::string text =
      opt.as_json ? gm::harness::sweep_json(res) : gm::harness::sweep_csv(res);
  gm::harness::emit(text, opt.out_path);
  if (opt.strict)
    for (const gm::harness::ComparisonResult& row : res.rows)
      if (!row.regime_ok()) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gravimech: three-theory predictions (standard QM, Schrodinger-Newton, "
      "correlated worldlines) for a pulsed cavity-optomechanics experiment"};
  app.require_subcommand(1);
  int rc = 0;

  // material props
  auto* material = app.add_subcommand("material", "Material-derived scales");
  material->require_subcommand(1);
  MaterialPropsOpts mp;
  auto* props = material->add_subcommand(
      "props", "Derived length/frequency scales and well depths");
  props->add_option("--config", mp.config_path, "JSON config file")->required();
  props->add_option("--temp-K", mp.temp_k, "Temperature override (K)");
  props->add_option("--mc-pairs", mp.mc_pairs,
                    "Monte Carlo pair count for the shape constant");
  props->add_option("--seed", mp.seed, "Monte Carlo master seed");
  props->add_option("--out", mp.out_path, "Output path (default stdout)");
  props->callback([&] { rc = run_material_props(mp); });

  // cwl pulse-prob
  auto* cwl_cmd = app.add_subcommand("cwl", "Correlated-worldline engine");
  cwl_cmd->require_subcommand(1);
  CwlPulseOpts cw;
  auto* cwl_pulse = cwl_cmd->add_subcommand(
      "pulse-prob", "Photon-count probabilities for the two-pulse protocol");
  cwl_pulse->add_option("--omega-m", cw.omega_m, "Mechanical frequency (rad/s)")
      ->required();
  cwl_pulse->add_option("--omega-sn", cw.omega_sn, "Self-frequency (rad/s)")
      ->required();
  cwl_pulse->add_option("--n", cw.n, "Rotation index (>= 0)")->required();
  cwl_pulse->add_option("--tp", cw.t_p, "Pulse duration (s)")->required();
  cwl_pulse->add_option("--Twait", cw.t_wait, "Inter-pulse wait (s)");
  cwl_pulse->add_flag("--finite-N-check", cw.finite_n_check,
                      "Include the finite-N extrapolation samples");
  cwl_pulse->add_flag("--strict", cw.strict, "Exit 3 on regime violation");
  cwl_pulse->add_option("--out", cw.out_path, "Output path (default stdout)");
  cwl_pulse->callback([&] { rc = run_cwl_pulse_prob(cw); });

  // sn subcommands
  auto* sn_cmd = app.add_subcommand("sn", "Schrodinger-Newton engine");
  sn_cmd->require_subcommand(1);

  SnPulseOpts sp;
  auto* sn_pulse = sn_cmd->add_subcommand(
      "pulse-prob", "Zero/one-photon probabilities for the two-pulse protocol");
  sn_pulse->add_option("--omega-m", sp.omega_m, "Mechanical frequency (rad/s)")
      ->required();
  sn_pulse->add_option("--omega-sn", sp.omega_sn, "Self-frequency (rad/s)")
      ->required();
  sn_pulse->add_option("--n", sp.n, "Rotation index (>= 0)")->required();
  sn_pulse->add_option("--Twait", sp.t_wait, "Inter-pulse wait (s)");
  sn_pulse->add_option("--out", sp.out_path, "Output path (default stdout)");
  sn_pulse->callback([&] { rc = run_sn_pulse_prob(sp); });

  SnSteadyOpts ss;
  auto* sn_steady = sn_cmd->add_subcommand(
      "steady", "Steady-state conditional covariances under measurement");
  sn_steady->add_option("--Lambda", ss.lambda, "Measurement strength")->required();
  sn_steady->add_option("--omega-m", ss.omega_m, "Mechanical frequency (rad/s)");
  sn_steady->add_option("--omega-sn", ss.omega_sn, "Self-frequency (rad/s)");
  sn_steady->add_flag("--legacy-vpp", ss.legacy_vpp,
                      "Use the legacy printed V_pp form (audit only)");
  sn_steady->add_option("--out", ss.out_path, "Output path (default stdout)");
  sn_steady->callback([&] { rc = run_sn_steady(ss); });

  SnTrajectoryOpts st;
  auto* sn_traj = sn_cmd->add_subcommand(
      "trajectory", "Conditional-moment stochastic trajectory (CSV)");
  sn_traj->add_option("--Lambda", st.lambda, "Measurement strength")->required();
  sn_traj->add_option("--steps", st.steps, "Step count");
  sn_traj->add_option("--dt", st.dt, "Step size (s)");
  sn_traj->add_option("--seed", st.seed, "RNG master seed");
  sn_traj->add_option("--omega-m", st.omega_m, "Mechanical frequency (rad/s)");
  sn_traj->add_option("--omega-sn", st.omega_sn, "Self-frequency (rad/s)");
  sn_traj->add_option("--x0", st.x0, "Initial mean position");
  sn_traj->add_option("--p0", st.p0, "Initial mean momentum");
  sn_traj->add_option("--out", st.out_path, "CSV output path (default stdout)");
  sn_traj->callback([&] { rc = run_sn_trajectory(st); });

  SnThermalOpts sth;
  auto* sn_thermal = sn_cmd->add_subcommand(
      "thermal", "Thermal-force contribution to the zero-photon probability");
  sn_thermal->add_option("--omega-m", sth.omega_m, "Mechanical frequency (rad/s)")
      ->required();
  sn_thermal->add_option("--Q", sth.q_factor, "Mechanical quality factor")
      ->required();
  sn_thermal->add_option("--temp-K", sth.temp_k, "Bath temperature (K)")
      ->required();
  sn_thermal->add_option("--tp", sth.t_p, "Pulse duration (s)")->required();
  sn_thermal->add_flag("--strict", sth.strict, "Exit 3 on regime violation");
  sn_thermal->add_option("--out", sth.out_path, "Output path (default stdout)");
  sn_thermal->callback([&] { rc = run_sn_thermal(sth); });

  SnFeasibilityOpts sf;
  auto* sn_feas = sn_cmd->add_subcommand(
      "feasibility", "Maximum T/Q for an order-unity thermal contribution");
  sn_feas->add_option("--material", sf.config_path, "JSON config file")
      ->required();
  sn_feas->add_option("--target", sf.target, "Target thermal probability");
  sn_feas->add_option("--out", sf.out_path, "Output path (default stdout)");
  sn_feas->callback([&] { rc = run_sn_feasibility(sf); });

  // compare / sweep
  CompareOpts cmp;
  auto* compare = app.add_subcommand(
      "compare", "Run all three theories on one configuration");
  compare->add_option("--config", cmp.config_path, "JSON config file")->required();
  add_pulse_overrides(compare, cmp.pulse);
  auto* cmp_json = compare->add_flag("--json", cmp.as_json, "JSON output (default)");
  compare->add_flag("--csv", cmp.as_csv, "CSV output")->excludes(cmp_json);
  compare->add_flag("--strict", cmp.strict, "Exit 3 on regime violation");
  compare->add_option("--out", cmp.out_path, "Output path (default stdout)");
  compare->callback([&] { rc = run_compare(cmp); });

  SweepOpts sw;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Sweep one parameter axis and tabulate all three theories");
  sweep_cmd->add_option("--config", sw.config_path, "JSON config file")->required();
  add_pulse_overrides(sweep_cmd, sw.pulse);
  sweep_cmd
      ->add_option("--axis", sw.axis,
                   "Axis: omega_m, omega_sn, n, tp, Twait, temperature, Q")
      ->required();
  sweep_cmd->add_option("--from", sw.from, "Grid start")->required();
  sweep_cmd->add_option("--to", sw.to, "Grid end")->required();
  sweep_cmd->add_option("--points", sw.points, "Grid size (default 50)");
  sweep_cmd->add_flag("--log", sw.log_spacing, "Logarithmic grid spacing");
  auto* sw_json = sweep_cmd->add_flag("--json", sw.as_json, "JSON output");
  sweep_cmd->add_flag("--csv", sw.as_csv, "CSV output (default)")->excludes(sw_json);
  sweep_cmd->add_flag("--strict", sw.strict, "Exit 3 on regime violation");
  sweep_cmd->add_option("--out", sw.out_path, "Output path (default stdout)");
  sweep_cmd->callback([&] { rc = run_sweep(sw); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const gm::harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
