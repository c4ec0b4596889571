#include "gravimech/sn.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gravimech/constants.hpp"

namespace gravimech::sn {

namespace con = gravimech::constants;

namespace {
const cplx kI{0.0, 1.0};
}

// --------------------------------------------------------------------------
// Parameters
// --------------------------------------------------------------------------

double SnParams::Omega() const { return std::hypot(omega_m, omega_sn); }

double SnParams::eps2() const {
  const double r = omega_sn / omega_m;
  const double r2 = r * r;
  return 0.5 * r2 / (1.0 + r2);
}

double SnParams::Lambda() const { return alpha / (std::sqrt(mass) * Omega()); }

void SnParams::validate() const {
  if (!(mass > 0.0) || !(omega_m > 0.0) || !(omega_sn >= 0.0) ||
      !(alpha >= 0.0) || !(g0 >= 0.0))
    throw std::invalid_argument(
        "SnParams: need mass > 0, omega_m > 0, omega_sn >= 0, alpha >= 0, g0 >= 0");
}

SnParams params_from_lambda(double lambda, double omega_m, double omega_sn,
                            double mass) {
  if (!(lambda >= 0.0))
    throw std::invalid_argument("params_from_lambda: need Lambda >= 0");
  SnParams p;
  p.mass = mass;
  p.omega_m = omega_m;
  p.omega_sn = omega_sn;
  p.alpha = lambda * std::sqrt(mass) * p.Omega();
  p.validate();
  return p;
}

// --------------------------------------------------------------------------
// Covariance dynamics
// --------------------------------------------------------------------------

ConditionalGaussianState steady_covariance(const SnParams& params, VppForm form) {
  params.validate();
  const double lam = params.Lambda();
  const double lam4 = lam * lam * lam * lam;
  const double s = std::sqrt(1.0 + lam4);
  const double m_omega = params.mass * params.Omega();
  const double root_half = 1.0 / std::sqrt(2.0);
  ConditionalGaussianState st;
  st.V_xx = root_half / (m_omega * std::sqrt(1.0 + s));
  st.V_xp = 0.5 * lam * lam / (1.0 + s);
  st.V_pp = form == VppForm::riccati_consistent
                ? root_half * m_omega * s / std::sqrt(1.0 + s)
                : root_half * m_omega * s / (1.0 + s);
  return st;
}

std::array<double, 3> covariance_riccati_rhs(const ConditionalGaussianState& state,
                                             const SnParams& params) {
  params.validate();
  const double m = params.mass;
  const double w2 = params.Omega() * params.Omega();
  const double a2 = params.alpha * params.alpha;
  return {
      2.0 * state.V_xp / m - 2.0 * a2 * state.V_xx * state.V_xx,
      state.V_pp / m - m * w2 * state.V_xx - 2.0 * a2 * state.V_xx * state.V_xp,
      -2.0 * m * w2 * state.V_xp - 2.0 * a2 * state.V_xp * state.V_xp + 0.5 * a2,
  };
}

namespace {

/** One classical RK4 step of the covariance triple over dt. */
void riccati_rk4_step(ConditionalGaussianState& st, const SnParams& params,
                      double dt) {
  const auto rhs = [&params](const ConditionalGaussianState& s) {
    return covariance_riccati_rhs(s, params);
  };
  const auto shifted = [&st](const std::array<double, 3>& k, double h) {
    ConditionalGaussianState s = st;
    s.V_xx += h * k[0];
    s.V_xp += h * k[1];
    s.V_pp += h * k[2];
    return s;
  };
  const std::array<double, 3> k1 = rhs(st);
  const std::array<double, 3> k2 = rhs(shifted(k1, 0.5 * dt));
  const std::array<double, 3> k3 = rhs(shifted(k2, 0.5 * dt));
  const std::array<double, 3> k4 = rhs(shifted(k3, dt));
  st.V_xx += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
  st.V_xp += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
  st.V_pp += dt / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
}

}  // namespace

Trajectory simulate_trajectory(const SnParams& params,
                               const ConditionalGaussianState& initial,
                               double dt, long steps, std::uint64_t seed) {
  params.validate();
  if (!(dt > 0.0) || steps < 1)
    throw std::invalid_argument("simulate_trajectory: need dt > 0, steps >= 1");
  if (dt * params.Omega() > 0.5)
    throw std::invalid_argument(
        "simulate_trajectory: dt * Omega must be <= 0.5 for stability");

  numeric::RngStream rng(seed, 0);
  const double m = params.mass;
  const double alpha = params.alpha;
  const double theta = params.omega_m * dt;
  const double ct = std::cos(theta), st_rot = std::sin(theta);
  const double sqrt_dt = std::sqrt(dt);
  const double root2 = std::sqrt(2.0);

  Trajectory traj;
  traj.t.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.record.y.reserve(steps);
  traj.record.dt = dt;
  traj.record.seed = seed;

  ConditionalGaussianState state = initial;
  traj.t.push_back(0.0);
  traj.states.push_back(state);
  for (long k = 0; k < steps; ++k) {
    const double dw = sqrt_dt * rng.gaussian();
    traj.record.y.push_back(alpha * state.mean_x + dw / (root2 * dt));

    // Means: exact rotation at the bare omega_m, then the additive
    // measurement kick with the covariance frozen at the step start.
    const double x0 = state.mean_x, p0 = state.mean_p;
    state.mean_x = x0 * ct + p0 / (m * params.omega_m) * st_rot;
    state.mean_p = p0 * ct - m * params.omega_m * x0 * st_rot;
    state.mean_x += root2 * alpha * state.V_xx * dw;
    state.mean_p += root2 * alpha * state.V_xp * dw;

    riccati_rk4_step(state, params, dt);
    if (!(state.V_xx > 0.0) || !(state.V_pp > 0.0) ||
        !(state.V_xx * state.V_pp - state.V_xp * state.V_xp > 0.0)) {
      std::ostringstream msg;
      msg << "simulate_trajectory: covariance lost positivity at step " << k + 1
          << " (V_xx=" << state.V_xx << ", V_xp=" << state.V_xp
          << ", V_pp=" << state.V_pp << "); reduce dt";
      throw std::runtime_error(msg.str());
    }
    traj.t.push_back((k + 1) * dt);
    traj.states.push_back(state);
  }
  return traj;
}

// --------------------------------------------------------------------------
// Pulse dynamics and probabilities
// --------------------------------------------------------------------------

double effective_coupling(const SnParams& params) {
  params.validate();
  return params.g0 * std::sqrt(params.omega_m / params.Omega());
}

Mat2 pulse_transfer(const SnParams& params, double g, double t) {
  params.validate();
  if (t < 0.0) throw std::invalid_argument("pulse_transfer: need t >= 0");
  const double delta = params.omega_m - params.Omega();
  const double w = std::hypot(2.0 * g, delta);
  const double phi = 0.5 * w * t;
  const double c = std::cos(phi);
  // sin(Phi)/W, smooth through W -> 0 where it tends to t/2.
  const double s_over_w =
      phi < 1e-8 ? 0.5 * t * (1.0 - phi * phi / 6.0) : std::sin(phi) / w;
  const cplx pre = std::polar(1.0, -0.5 * delta * t);
  Mat2 u;
  u[0][0] = pre * (c - kI * delta * s_over_w);
  u[0][1] = pre * (-kI * 2.0 * g * s_over_w);
  u[1][0] = u[0][1];
  u[1][1] = pre * (c + kI * delta * s_over_w);
  return u;
}

namespace {

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

}  // namespace

SnPulseResult sn_pulse_p0(const SnParams& params, int n, double t_wait) {
  params.validate();
  if (n < 0 || t_wait < 0.0)
    throw std::invalid_argument("sn_pulse_p0: need n >= 0, t_wait >= 0");
  const double eps2 = params.eps2();
  SnPulseResult out;
  const double quarter_turns = (2.0 * n + 1.0) * con::pi / 4.0;
  out.p0_leading = quarter_turns * quarter_turns * eps2 * eps2;

  SnParams eff = params;
  if (!(eff.g0 > 0.0)) eff.g0 = 100.0 * eff.Omega();
  const double t_p = (n + 0.5) * con::pi / eff.g0;
  const double g = effective_coupling(eff);
  const Mat2 pulse_mat = pulse_transfer(eff, g, t_p);
  const Mat2 wait_mat = pulse_transfer(eff, 0.0, t_wait);
  const Mat2 u = mat2_mul(pulse_mat, mat2_mul(wait_mat, pulse_mat));
  out.p0_exact = std::norm(u[1][0]);

  out.p0 = out.p0_leading;
  out.p1 = 1.0 - out.p0;
  return out;
}

ThermalResult thermal_p0(double omega_m, double q_factor, double temperature,
                         double t_p) {
  if (!(omega_m > 0.0) || !(q_factor > 0.0) || !(temperature >= 0.0) ||
      !(t_p > 0.0))
    throw std::invalid_argument(
        "thermal_p0: need omega_m > 0, Q > 0, T >= 0, t_p > 0");
  ThermalResult out;
  out.regime_ratio = con::k_B * temperature / (con::hbar * omega_m * q_factor);
  out.p0_th = 2.0 * omega_m * t_p * out.regime_ratio;
  out.regime_ok = out.regime_ratio <= 1.0;
  return out;
}

FeasibilityResult feasibility(double omega_sn, double target_p0_th) {
  if (!(omega_sn > 0.0) || !(target_p0_th > 0.0))
    throw std::invalid_argument("feasibility: need omega_sn > 0, target > 0");
  FeasibilityResult out;
  out.omega_sn = omega_sn;
  out.T_over_Q_max = target_p0_th * con::hbar * omega_sn / con::k_B;
  return out;
}

}  // namespace gravimech::sn
