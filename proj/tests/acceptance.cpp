/**
 * Acceptance gate: one self-contained check per release criterion, each
 * printed as a single [PASS]/[FAIL] line with the measured numbers. The
 * process exits non-zero if any criterion fails. Independent oracles
 * (generating-function differentiation, dense replica integration,
 * stochastic-integral Monte Carlo) live in oracles.hpp.
 */
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "gravimech/constants.hpp"
#include "gravimech/cwl.hpp"
#include "gravimech/harness.hpp"
#include "gravimech/numeric.hpp"
#include "gravimech/physcore.hpp"
#include "gravimech/pulse.hpp"
#include "gravimech/sn.hpp"
#include "oracles.hpp"

using namespace gravimech;
using cplx = std::complex<double>;
namespace con = gravimech::constants;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& label,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

/** omega_sn that makes eps^2 = eps*eps exactly (at omega_m). */
double omega_sn_for_eps(double eps, double omega_m = 1.0) {
  const double e2 = eps * eps;
  return omega_m * std::sqrt(2.0 * e2 / (1.0 - 2.0 * e2));
}

/** In-code baseline configuration for the harness-level criteria. */
harness::ExperimentConfig baseline_config() {
  harness::ExperimentConfig cfg;
  cfg.material.name = "silica";
  cfg.material.density = 2200.0;
  cfg.material.ionic_mass = 20.0 * con::amu;
  cfg.material.debye_energy = 470.0 * con::k_B;
  cfg.material.lattice_spacing = 2.5e-10;
  cfg.geometry.radius = 0.175;
  cfg.geometry.thickness = 0.16;
  cfg.pulse_n = 0;
  cfg.t_p = 1.0;
  cfg.t_wait = 0.0;
  cfg.omega_m = 1.0;
  cfg.q_factor = 1e8;
  cfg.temperature = 1e-4;
  cfg.omega_sn_override = 0.14285714285714285;
  return cfg;
}

/** RK4 step of the covariance Riccati flow. */
sn::ConditionalGaussianState riccati_step(const sn::SnParams& params,
                                          const sn::ConditionalGaussianState& state,
                                          double dt) {
  const auto rhs = [&](const sn::ConditionalGaussianState& s) {
    return sn::covariance_riccati_rhs(s, params);
  };
  const auto shifted = [&](const sn::ConditionalGaussianState& s,
                           const std::array<double, 3>& k, double factor) {
    sn::ConditionalGaussianState out = s;
    out.V_xx += factor * k[0];
    out.V_xp += factor * k[1];
    out.V_pp += factor * k[2];
    return out;
  };
  const std::array<double, 3> k1 = rhs(state);
  const std::array<double, 3> k2 = rhs(shifted(state, k1, 0.5 * dt));
  const std::array<double, 3> k3 = rhs(shifted(state, k2, 0.5 * dt));
  const std::array<double, 3> k4 = rhs(shifted(state, k3, dt));
  sn::ConditionalGaussianState out = state;
  out.V_xx += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
  out.V_xp += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
  out.V_pp += dt / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
  return out;
}

// ---------------------------------------------------------------------------

void criterion_1_worldline_probability() {
  const auto start = std::chrono::steady_clock::now();
  cwl::CwlParams params;
  params.omega_m = 1.0;
  params.omega_sn = omega_sn_for_eps(0.1);
  const pulse::PulseProtocol protocol(0, 1.0, 0.0);
  const cwl::CwlPrediction pred = cwl::cwl_probabilities(params, protocol);
  const double target = 1e-4 * (kPi / (4.0 * kE)) * (kPi / (4.0 * kE));
  const double abs_err = std::abs(pred.P0 - target);

  // finite-replica ladder: extrapolate the N <= 1024 samples and compare
  const numeric::ExtrapolationResult fit =
      numeric::extrapolate_limit(pred.finite_n_samples);
  const double extrap_rel = std::abs(std::exp(fit.limit) / pred.P0 - 1.0);
  const double elapsed = seconds_since(start);

  const bool ok = abs_err <= 1e-9 && extrap_rel <= 0.01 && elapsed < 5.0;
  report(1, ok, "worldline zero-photon probability and finite-N ladder",
         fmt("P0=%.15g, |P0-eps^4(pi/4e)^2|=%.2e, extrapolation off by %.2e, "
             "%.2f s",
             pred.P0, abs_err, extrap_rel, elapsed));
}

void criterion_2_theory_ratio() {
  double worst = 0.0;
  for (double eps : {0.05, 0.1, 0.2, 0.3}) {
    for (int n : {0, 1, 2}) {
      sn::SnParams sn_params;
      sn_params.omega_m = 1.0;
      sn_params.omega_sn = omega_sn_for_eps(eps);
      cwl::CwlParams cwl_params;
      cwl_params.omega_m = 1.0;
      cwl_params.omega_sn = sn_params.omega_sn;
      const pulse::PulseProtocol protocol(n, 1.0, 0.0);
      const double ratio = sn::sn_pulse_p0(sn_params, n).p0 /
                           cwl::cwl_probabilities(cwl_params, protocol).P0;
      worst = std::max(worst, std::abs(ratio / (kE * kE) - 1.0));
    }
  }
  report(2, worst <= 1e-6, "collapse-model ratio P0(SN)/P0(CWL) = e^2",
         fmt("worst relative deviation %.2e over eps<=0.3, n<=2", worst));
}

void criterion_3_conventional_null() {
  cwl::CwlParams cwl_params;
  cwl_params.omega_m = 1.0;
  cwl_params.omega_sn = 0.0;
  const pulse::PulseProtocol protocol(1, 1.0, 0.5);
  const cwl::CwlPrediction cwl_pred = cwl::cwl_probabilities(cwl_params, protocol);
  sn::SnParams sn_params;
  sn_params.omega_m = 1.0;
  sn_params.omega_sn = 0.0;
  const sn::SnPulseResult sn_pred = sn::sn_pulse_p0(sn_params, 1, 0.5);
  harness::ExperimentConfig cfg = baseline_config();
  cfg.omega_sn_override = 0.0;
  const harness::ComparisonResult cmp = harness::run_comparison(cfg);
  bool ok = cwl_pred.P0 == 0.0 && cwl_pred.P1 == 1.0 && sn_pred.p0 == 0.0 &&
            sn_pred.p1 == 1.0;
  for (const harness::TheoryPrediction& p : cmp.predictions)
    ok = ok && p.P0 == 0.0 && p.P1 == 1.0;
  report(3, ok, "zero self-coupling gives (P0, P1) = (0, 1) exactly",
         fmt("cwl=(%g,%g) sn=(%g,%g), all comparison rows exact", cwl_pred.P0,
             cwl_pred.P1, sn_pred.p0, sn_pred.p1));
}

void criterion_4_riccati_fixed_point() {
  double worst = 0.0;
  for (double lambda : {0.0, 0.1, 1.0, 3.0, 10.0}) {
    const sn::SnParams params = sn::params_from_lambda(lambda, 1.0, 0.5);
    const sn::ConditionalGaussianState st = sn::steady_covariance(params);
    const std::array<double, 3> rhs = sn::covariance_riccati_rhs(st, params);
    const double omega_cap = params.Omega();
    worst = std::max(worst, std::abs(rhs[0]) / (omega_cap * st.V_xx));
    worst = std::max(worst,
                     std::abs(rhs[1]) / (omega_cap * std::sqrt(st.V_xx * st.V_pp)));
    worst = std::max(worst, std::abs(rhs[2]) / (omega_cap * st.V_pp));
  }
  // Lambda = 0: ground state of the shifted oscillator and its squeeze factor
  const sn::SnParams free_params = sn::params_from_lambda(0.0, 1.0, 0.75);
  const sn::ConditionalGaussianState gs = sn::steady_covariance(free_params);
  const double m = free_params.mass, omega_cap = free_params.Omega();
  const double gs_err = std::max(
      {std::abs(gs.V_xx * 2.0 * m * omega_cap - 1.0), std::abs(gs.V_xp),
       std::abs(gs.V_pp / (0.5 * m * omega_cap) - 1.0)});
  const double squeeze = 2.0 * m * free_params.omega_m * gs.V_xx;
  const double squeeze_err =
      std::abs(squeeze - free_params.omega_m / omega_cap);
  const bool ok = worst <= 1e-10 && gs_err <= 1e-12 && squeeze_err <= 1e-12;
  report(4, ok, "steady covariance zeroes the Riccati flow",
         fmt("worst normalized drift %.2e over Lambda in {0,0.1,1,3,10}; "
             "Lambda=0 ground-state error %.2e, squeeze error %.2e",
             worst, gs_err, squeeze_err));
}

void criterion_5_trajectory_convergence() {
  const auto start = std::chrono::steady_clock::now();

  // deterministic relaxation from randomized covariances
  numeric::RngStream rng(2026, 7);
  double worst_rel = 0.0;
  for (double lambda : {0.5, 1.0, 3.0}) {
    const sn::SnParams params = sn::params_from_lambda(lambda, 1.0, 0.6);
    const sn::ConditionalGaussianState target = sn::steady_covariance(params);
    for (int trial = 0; trial < 3; ++trial) {
      sn::ConditionalGaussianState state = target;
      state.V_xx *= 1.0 + 2.0 * rng.uniform();
      state.V_pp *= 1.0 + 2.0 * rng.uniform();
      state.V_xp += 0.2 * (rng.uniform() - 0.5) *
                    std::sqrt(state.V_xx * state.V_pp);
      const double dt = 1e-3;
      const int steps = 80000;  // t = 80: several relaxation times even at
                                // the weakest measurement strength
      for (int k = 0; k < steps; ++k) state = riccati_step(params, state, dt);
      worst_rel = std::max(worst_rel,
                           std::abs(state.V_xx / target.V_xx - 1.0));
      worst_rel = std::max(worst_rel,
                           std::abs(state.V_pp / target.V_pp - 1.0));
      const double xp_scale = std::sqrt(target.V_xx * target.V_pp);
      worst_rel = std::max(worst_rel,
                           std::abs(state.V_xp - target.V_xp) / xp_scale);
    }
  }

  // stochastic ensemble: the spread of the conditional means across 10^4
  // seeds must match the exact discrete covariance recursion to 3 sigma
  const sn::SnParams params = sn::params_from_lambda(1.0, 1.0, 0.75);
  const sn::ConditionalGaussianState initial = sn::steady_covariance(params);
  const double dt = 1e-3;
  const int steps = 400;
  const int n_seeds = 10000;
  std::vector<double> xs(n_seeds), ps(n_seeds);
  for (int s = 0; s < n_seeds; ++s) {
    const sn::Trajectory traj =
        sn::simulate_trajectory(params, initial, dt, steps, 1000 + s);
    xs[s] = traj.states.back().mean_x;
    ps[s] = traj.states.back().mean_p;
  }
  // exact recursion: M <- R M R^T + 2 alpha^2 dt * (V row outer product)
  const double alpha = params.alpha, m = params.mass, w = params.omega_m;
  const double c = std::cos(w * dt), s_ = std::sin(w * dt);
  double mxx = 0.0, mxp = 0.0, mpp = 0.0;
  const double kxx = 2.0 * alpha * alpha * dt * initial.V_xx * initial.V_xx;
  const double kxp = 2.0 * alpha * alpha * dt * initial.V_xx * initial.V_xp;
  const double kpp = 2.0 * alpha * alpha * dt * initial.V_xp * initial.V_xp;
  for (int k = 0; k < steps; ++k) {
    const double r00 = c, r01 = s_ / (m * w), r10 = -m * w * s_, r11 = c;
    const double nxx = r00 * (r00 * mxx + r01 * mxp) + r01 * (r00 * mxp + r01 * mpp);
    const double nxp = r10 * (r00 * mxx + r01 * mxp) + r11 * (r00 * mxp + r01 * mpp);
    const double npp = r10 * (r10 * mxx + r11 * mxp) + r11 * (r10 * mxp + r11 * mpp);
    mxx = nxx + kxx;
    mxp = nxp + kxp;
    mpp = npp + kpp;
  }
  double sum_x = 0.0, sum_p = 0.0;
  for (int s = 0; s < n_seeds; ++s) {
    sum_x += xs[s];
    sum_p += ps[s];
  }
  const double mean_x = sum_x / n_seeds, mean_p = sum_p / n_seeds;
  double var_x = 0.0, var_p = 0.0, cov_xp = 0.0;
  for (int s = 0; s < n_seeds; ++s) {
    var_x += (xs[s] - mean_x) * (xs[s] - mean_x);
    var_p += (ps[s] - mean_p) * (ps[s] - mean_p);
    cov_xp += (xs[s] - mean_x) * (ps[s] - mean_p);
  }
  var_x /= n_seeds - 1;
  var_p /= n_seeds - 1;
  cov_xp /= n_seeds - 1;
  const double z_mean_x = std::abs(mean_x) / std::sqrt(mxx / n_seeds);
  const double z_mean_p = std::abs(mean_p) / std::sqrt(mpp / n_seeds);
  const double z_var_x =
      std::abs(var_x - mxx) / (mxx * std::sqrt(2.0 / (n_seeds - 1)));
  const double z_var_p =
      std::abs(var_p - mpp) / (mpp * std::sqrt(2.0 / (n_seeds - 1)));
  const double z_cov =
      std::abs(cov_xp - mxp) /
      std::sqrt((mxx * mpp + mxp * mxp) / (n_seeds - 1));
  const double z_worst =
      std::max({z_mean_x, z_mean_p, z_var_x, z_var_p, z_cov});

  const double elapsed = seconds_since(start);
  const bool ok = worst_rel <= 1e-6 && z_worst <= 3.0 && elapsed < 60.0;
  report(5, ok, "trajectory relaxation and 10^4-seed ensemble statistics",
         fmt("worst covariance relaxation error %.2e (tolerance 1e-6), worst "
             "ensemble z-score %.2f (limit 3), %.1f s",
             worst_rel, z_worst, elapsed));
}

void criterion_6_generating_function_oracle() {
  // representative strong-ish point so every term is O(1) for the stencil
  cwl::CwlParams params;
  params.omega_m = 1.0;
  params.omega_sn = omega_sn_for_eps(0.4);  // eps^2 = 0.16
  const int n = 1;
  const pulse::PulseProtocol protocol(n, 1.0, 0.5);
  const double eps2 = params.eps2();
  const double omega_cap = params.Omega();
  const double x = eps2 * omega_cap * (protocol.t_p() + protocol.t_wait());
  const double c2 = eps2 * (2.0 * n + 1.0) * kPi / 4.0;
  double worst = 0.0;
  for (int n_replicas : {1, 2, 3}) {
    const oracles::GeneratingFunction g{n_replicas, x, c2};
    const cplx k0_closed =
        cwl::fock_amplitude_zero_photon(n_replicas, eps2, n, omega_cap, 0.0)
            .value();
    const cplx k0_oracle = oracles::zero_photon_partial(g);
    worst = std::max(worst, std::abs(k0_closed - k0_oracle) / std::abs(k0_oracle));
    const cplx k1_closed = cwl::fock_amplitude_one_photon(n_replicas, x).value();
    const cplx k1_oracle = oracles::one_photon_partial(g);
    worst = std::max(worst, std::abs(k1_closed - k1_oracle) / std::abs(k1_oracle));
  }
  report(6, worst <= 1e-6,
         "closed-form photon amplitudes match generating-function derivatives",
         fmt("worst relative deviation %.2e over N in {1,2,3}", worst));
}

void criterion_7_replica_ode_oracle() {
  cwl::CwlParams params;
  params.omega_m = 1.0;
  params.omega_sn = std::sqrt(2.0 * 0.02 / (1.0 - 2.0 * 0.02));  // eps^2 = 0.02
  const double eps2 = params.eps2();
  const pulse::PulseProtocol protocol(1, 1.0, 0.5);
  const std::vector<cplx> a0 = {cplx(0.6, 0.2), cplx(-0.3, 0.4), cplx(0.1, -0.5)};
  const std::vector<cplx> b0 = {cplx(0.05, -0.1), cplx(-0.2, 0.15), cplx(0.3, 0.05)};
  double worst = 0.0;
  for (double t : {0.7, 1.3, 2.0, protocol.total_time()}) {
    const cwl::ReplicaEnsemble closed =
        cwl::replica_solution(protocol, params, a0, b0, t);
    const cwl::ReplicaEnsemble numeric_sol =
        oracles::integrate_replica_system(protocol, params, a0, b0, t);
    worst = std::max(worst, oracles::max_rel_diff(closed.a, numeric_sol.a));
    worst = std::max(worst, oracles::max_rel_diff(closed.b, numeric_sol.b));
  }
  const double bound = 5.0 * eps2 * eps2;
  report(7, worst <= bound, "replica closed form matches dense ODE integration",
         fmt("worst relative deviation %.2e, bound 5 eps^4 = %.2e", worst, bound));
}

void criterion_8_ground_state_eigenstructure() {
  cwl::CwlParams params;
  params.omega_m = 1.1;
  params.omega_sn = 0.6;
  params.mass = 1.5;
  const int n_replicas = 8;
  const cwl::GroundStateMatrix a(n_replicas, params);
  const std::vector<double> eig = numeric::symmetric_eigenvalues(a.dense());
  const double lam_uniform = 2.0 * params.mass * params.omega_m;
  const double lam_transverse = 2.0 * params.mass * params.Omega();
  double worst = std::abs(eig[0] / lam_uniform - 1.0);
  for (int i = 1; i < n_replicas; ++i)
    worst = std::max(worst, std::abs(eig[i] / lam_transverse - 1.0));
  // the uniform vector is the eigenvector of the bare eigenvalue
  const std::vector<double> ones(n_replicas, 1.0);
  const std::vector<double> a_ones = a.apply(ones);
  for (double v : a_ones)
    worst = std::max(worst, std::abs(v / lam_uniform - 1.0));
  report(8, worst <= 1e-10,
         "collective stiffness: 2 m omega_m (uniform) + 2 m Omega (x7)",
         fmt("worst relative eigen deviation %.2e at N=8", worst));
}

void criterion_9_material_pipeline() {
  // (a) Monte Carlo shape constant of the sphere against 1.9339
  const numeric::McEstimate sphere = physcore::shape_gamma_sphere(0.35, 2'000'000);
  const double sphere_dev = std::abs(sphere.value - 1.9339);
  const bool sphere_ok = sphere_dev <= 3.0 * sphere.std_error;

  // (b) spike well depth for a 40 kg source, 30 amu ions, xi0 = 4e-13 m
  const double depth_K =
      physcore::v_spike_depth(40.0, 30.0 * con::amu, 4e-13) / con::k_B;
  const bool depth_ok = std::abs(depth_K / 24.0 - 1.0) <= 0.05;

  // (c) tungsten feasibility threshold vs the published 2e-13 K
  const double t_over_q = sn::feasibility(2.0 * kPi * 4e-3).T_over_Q_max;
  const bool feas_ok = std::abs(t_over_q / 2e-13 - 1.0) <= 0.10;

  // (d) spike frequency vs the published 0.37 (factor-2 band)
  physcore::MaterialSpec silica;
  silica.name = "silica";
  silica.density = 2200.0;
  silica.ionic_mass = 20.0 * con::amu;
  silica.debye_energy = 470.0 * con::k_B;
  silica.lattice_spacing = 2.5e-10;
  const double omega_sp = physcore::spike_frequency(silica, 1.6e-12);
  const double sp_ratio = omega_sp / 0.37;
  const bool sp_ok = sp_ratio >= 0.5 && sp_ratio <= 2.0;

  // (e) bulk frequency vs the published 8.5e-4 (factor-2 band)
  const numeric::McEstimate cyl =
      physcore::shape_gamma({0.175, 0.16}, 1'000'000);
  const double omega_b = physcore::bulk_frequency(silica, cyl.value);
  const double b_ratio = omega_b / 8.5e-4;
  const bool b_ok = b_ratio >= 0.5 && b_ratio <= 2.0;

  const bool ok = sphere_ok && depth_ok && feas_ok && sp_ok && b_ok;
  report(9, ok, "material pipeline scales",
         fmt("sphere gamma %.5f+-%.5f vs 1.9339 (%.1f sigma); spike depth "
             "%.2f K vs 24 K; T/Q %.4g K vs 2e-13 (%.0f%%); omega_sp %.4g = "
             "%.2fx published 0.37; omega_b %.4g = %.2fx published 8.5e-4 "
             "(both inside factor-2 band, residual mismatch logged)",
             sphere.value, sphere.std_error, sphere_dev / sphere.std_error,
             depth_K, t_over_q, 100.0 * std::abs(t_over_q / 2e-13 - 1.0),
             omega_sp, sp_ratio, omega_b, b_ratio));
}

void criterion_10_thermal_oracle() {
  const double omega_m = 2.0, q_factor = 50.0, t_p = 0.8;
  const double temperature = 5e-10;
  const sn::ThermalResult formula =
      sn::thermal_p0(omega_m, q_factor, temperature, t_p);
  const oracles::ThermalMcResult mc =
      oracles::thermal_mc(omega_m, q_factor, temperature, t_p, 10000);
  const double z = std::abs(mc.mean_p0 - formula.p0_th) / mc.std_error;
  const double t_edge = con::hbar * omega_m * q_factor / con::k_B;
  const bool flag_ok =
      sn::thermal_p0(omega_m, q_factor, 0.999 * t_edge, t_p).regime_ok &&
      !sn::thermal_p0(omega_m, q_factor, 1.001 * t_edge, t_p).regime_ok;
  const bool ok = z <= 3.0 && flag_ok;
  report(10, ok, "thermal excitation formula vs stochastic-integral MC",
         fmt("p0_th=%.6g, MC %.6g+-%.2g (%.2f sigma); regime flag flips at "
             "k_B T = hbar omega_m Q: %s",
             formula.p0_th, mc.mean_p0, mc.std_error, z,
             flag_ok ? "yes" : "no"));
}

void criterion_11_scaling_laws() {
  // log-log slope of P0(CWL) against omega_sn in the small-coupling regime
  harness::ExperimentConfig cfg = baseline_config();
  const std::vector<double> grid = harness::log_grid(1e-3, 1e-2, 9);
  const harness::SweepResult sw = harness::sweep(cfg, "omega_sn", grid);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const int n_pts = static_cast<int>(grid.size());
  for (int i = 0; i < n_pts; ++i) {
    const double lx = std::log(grid[i]);
    const double ly = std::log(sw.rows[i].predictions[2].P0);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope =
      (n_pts * sxy - sx * sy) / (n_pts * sxx - sx * sx);
  const bool slope_ok = std::abs(slope - 4.0) <= 0.01;

  // exact (2n+1)^2 dependence of P0 on the rotation index
  cfg.omega_sn_override = 0.01;
  const harness::SweepResult sw_n =
      harness::sweep(cfg, "n", {0.0, 1.0, 2.0, 3.0});
  const double base = sw_n.rows[0].predictions[2].P0;
  double worst_n = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double expected = base * (2.0 * i + 1.0) * (2.0 * i + 1.0);
    worst_n = std::max(
        worst_n, std::abs(sw_n.rows[i].predictions[2].P0 / expected - 1.0));
  }
  const bool n_ok = worst_n <= 1e-12;
  report(11, slope_ok && n_ok, "quartic frequency scaling and (2n+1)^2 law",
         fmt("log-log slope %.6f (target 4 +- 0.01); worst (2n+1)^2 relative "
             "deviation %.2e",
             slope, worst_n));
}

}  // namespace

int main() {
  std::printf("gravimech acceptance gate\n");
  criterion_1_worldline_probability();
  criterion_2_theory_ratio();
  criterion_3_conventional_null();
  criterion_4_riccati_fixed_point();
  criterion_5_trajectory_convergence();
  criterion_6_generating_function_oracle();
  criterion_7_replica_ode_oracle();
  criterion_8_ground_state_eigenstructure();
  criterion_9_material_pipeline();
  criterion_10_thermal_oracle();
  criterion_11_scaling_laws();
  if (g_failures == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
