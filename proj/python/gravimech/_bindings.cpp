/**
 * Python bindings for the gravimech core: the same operations the CLI
 * exposes, with plain-dict results so callers stay decoupled from the C++
 * structs. Frequencies in rad/s, times in s, temperatures in K.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gravimech/constants.hpp"
#include "gravimech/cwl.hpp"
#include "gravimech/harness.hpp"
#include "gravimech/physcore.hpp"
#include "gravimech/pulse.hpp"
#include "gravimech/sn.hpp"

namespace py = pybind11;
using namespace gravimech;
namespace con = gravimech::constants;

namespace {

physcore::MaterialSpec make_material(double density_kg_m3, double ionic_mass_amu,
                                     double debye_temp_K, double lattice_spacing_m,
                                     const std::string& name) {
  physcore::MaterialSpec material;
  material.density = density_kg_m3;
  material.ionic_mass = ionic_mass_amu * con::amu;
  material.debye_energy = debye_temp_K * con::k_B;
  material.lattice_spacing = lattice_spacing_m;
  material.name = name;
  return material;
}

py::dict cwl_pulse_prob(double omega_m, double omega_sn, int n, double t_p,
                        double t_wait) {
  cwl::CwlParams params;
  params.omega_m = omega_m;
  params.omega_sn = omega_sn;
  const pulse::PulseProtocol protocol(n, t_p, t_wait);
  const cwl::CwlPrediction pred = cwl::cwl_probabilities(params, protocol);
  py::dict out;
  out["P0"] = pred.P0;
  out["P1"] = pred.P1;
  out["eps2"] = pred.eps2;
  out["regime_ok"] = pred.regime_ok;
  out["extrapolation_residual"] = pred.extrapolation_residual;
  out["finite_n_samples"] = pred.finite_n_samples;
  return out;
}

py::dict sn_pulse_prob(double omega_m, double omega_sn, int n, double t_wait) {
  sn::SnParams params;
  params.omega_m = omega_m;
  params.omega_sn = omega_sn;
  const sn::SnPulseResult res = sn::sn_pulse_p0(params, n, t_wait);
  py::dict out;
  out["p0"] = res.p0;
  out["p1"] = res.p1;
  out["p0_leading"] = res.p0_leading;
  out["p0_exact"] = res.p0_exact;
  return out;
}

py::dict sn_steady(double lambda_, double omega_m, double omega_sn, double mass) {
  const sn::SnParams params =
      sn::params_from_lambda(lambda_, omega_m, omega_sn, mass);
  const sn::ConditionalGaussianState st = sn::steady_covariance(params);
  py::dict out;
  out["Lambda"] = lambda_;
  out["Omega"] = params.Omega();
  out["V_xx"] = st.V_xx;
  out["V_xp"] = st.V_xp;
  out["V_pp"] = st.V_pp;
  return out;
}

py::dict sn_trajectory(double lambda_, long steps, double dt, std::uint64_t seed,
                       double omega_m, double omega_sn, double mass, double x0,
                       double p0) {
  const sn::SnParams params =
      sn::params_from_lambda(lambda_, omega_m, omega_sn, mass);
  sn::ConditionalGaussianState initial = sn::steady_covariance(params);
  initial.mean_x = x0;
  initial.mean_p = p0;
  const sn::Trajectory traj =
      sn::simulate_trajectory(params, initial, dt, steps, seed);
  std::vector<double> mean_x, mean_p, v_xx, v_xp, v_pp;
  mean_x.reserve(traj.states.size());
  for (const sn::ConditionalGaussianState& s : traj.states) {
    mean_x.push_back(s.mean_x);
    mean_p.push_back(s.mean_p);
    v_xx.push_back(s.V_xx);
    v_xp.push_back(s.V_xp);
    v_pp.push_back(s.V_pp);
  }
  py::dict out;
  out["t"] = traj.t;
  out["mean_x"] = mean_x;
  out["mean_p"] = mean_p;
  out["V_xx"] = v_xx;
  out["V_xp"] = v_xp;
  out["V_pp"] = v_pp;
  out["y"] = traj.record.y;
  out["dt"] = traj.record.dt;
  out["seed"] = traj.record.seed;
  return out;
}

py::dict thermal_p0(double omega_m, double q_factor, double temp_K, double t_p) {
  const sn::ThermalResult res = sn::thermal_p0(omega_m, q_factor, temp_K, t_p);
  py::dict out;
  out["p0_th"] = res.p0_th;
  out["regime_ok"] = res.regime_ok;
  out["regime_ratio"] = res.regime_ratio;
  return out;
}

py::dict feasibility(double omega_sn, double target_p0_th) {
  const sn::FeasibilityResult res = sn::feasibility(omega_sn, target_p0_th);
  py::dict out;
  out["omega_sn"] = res.omega_sn;
  out["T_over_Q_max_K"] = res.T_over_Q_max;
  return out;
}

py::dict material_scales(double density_kg_m3, double ionic_mass_amu,
                         double debye_temp_K, double lattice_spacing_m,
                         double radius_m, double thickness_m, double temp_K,
                         double q_factor, long n_pairs, std::uint64_t seed,
                         const std::string& name) {
  const physcore::MaterialSpec material = make_material(
      density_kg_m3, ionic_mass_amu, debye_temp_K, lattice_spacing_m, name);
  physcore::MirrorGeometry geometry;
  geometry.radius = radius_m;
  geometry.thickness = thickness_m;
  const physcore::DerivedScales scales = physcore::derive_scales(
      material, geometry, temp_K, q_factor, n_pairs, seed);
  py::dict out;
  out["xi0_m"] = scales.xi0;
  out["omega_sn_rad_s"] = scales.omega_sn;
  out["omega_b_rad_s"] = scales.omega_b;
  out["gamma"] = scales.gamma;
  out["gamma_std_error"] = scales.gamma_std_error;
  out["v_spike_depth_J"] = scales.v_spike_depth;
  out["v_slow_depth_J"] = scales.v_slow_depth;
  out["tau_r_s"] = scales.tau_r;
  return out;
}

std::string compare_json(const std::string& config_text) {
  const harness::ExperimentConfig cfg = harness::parse_config(config_text);
  return harness::comparison_json(harness::run_comparison(cfg));
}

std::string sweep_json(const std::string& config_text, const std::string& axis,
                       double from, double to, int points, bool log_spacing) {
  const harness::ExperimentConfig cfg = harness::parse_config(config_text);
  const std::vector<double> grid = log_spacing
                                       ? harness::log_grid(from, to, points)
                                       : harness::linear_grid(from, to, points);
  return harness::sweep_json(harness::sweep(cfg, axis, grid));
}

}  // namespace

PYBIND11_MODULE(_gravimech, m) {
  m.doc() = "pulsed cavity-optomechanics predictions: QM vs semiclassical "
            "self-gravity (SN) vs correlated-worldline (CWL) dynamics";

  m.def("cwl_pulse_prob", &cwl_pulse_prob,
        "Worldline-theory photon probabilities after the two-pulse sequence",
        py::arg("omega_m"), py::arg("omega_sn"), py::arg("n") = 0,
        py::arg("t_p") = 1.0, py::arg("t_wait") = 0.0);
  m.def("sn_pulse_prob", &sn_pulse_prob,
        "Semiclassical self-gravity photon probabilities after the sequence",
        py::arg("omega_m"), py::arg("omega_sn"), py::arg("n") = 0,
        py::arg("t_wait") = 0.0);
  m.def("sn_steady", &sn_steady,
        "Steady conditional covariances under continuous position measurement",
        py::arg("Lambda"), py::arg("omega_m") = 1.0, py::arg("omega_sn") = 0.0,
        py::arg("mass") = 1.0);
  m.def("sn_trajectory", &sn_trajectory,
        "Conditional-Gaussian trajectory with its homodyne record",
        py::arg("Lambda"), py::arg("steps"), py::arg("dt"), py::arg("seed"),
        py::arg("omega_m") = 1.0, py::arg("omega_sn") = 0.0,
        py::arg("mass") = 1.0, py::arg("x0") = 0.0, py::arg("p0") = 0.0);
  m.def("thermal_p0", &thermal_p0,
        "Thermal-force contribution to the zero-photon probability (SI inputs)",
        py::arg("omega_m"), py::arg("Q"), py::arg("temp_K"), py::arg("t_p"));
  m.def("feasibility", &feasibility,
        "Maximum T/Q keeping the thermal contribution below the target",
        py::arg("omega_sn"), py::arg("target_p0_th") = 1.0);
  m.def("material_scales", &material_scales,
        "Material/geometry pipeline: xi0, frequencies, well depths, gamma",
        py::arg("density_kg_m3"), py::arg("ionic_mass_amu"),
        py::arg("debye_temp_K"), py::arg("lattice_spacing_m"),
        py::arg("radius_m"), py::arg("thickness_m"), py::arg("temp_K") = 0.0,
        py::arg("Q") = 1e8, py::arg("n_pairs") = 1'000'000,
        py::arg("seed") = 0x5eed, py::arg("name") = std::string("material"));
  m.def("compare_json", &compare_json,
        "Run all three theories on a JSON config text; returns JSON text",
        py::arg("config_text"));
  m.def("sweep_json", &sweep_json,
        "Sweep one axis of a JSON config text; returns JSON text",
        py::arg("config_text"), py::arg("axis"), py::arg("from_value"),
        py::arg("to_value"), py::arg("points"), py::arg("log_spacing") = false);
}
