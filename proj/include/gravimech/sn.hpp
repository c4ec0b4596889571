#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gravimech/numeric.hpp"

/**
 * Schrodinger-Newton engine: conditional-Gaussian steady state under
 * continuous position measurement, moment-level stochastic trajectories,
 * pulse transfer dynamics, and the pulsed-protocol probabilities including
 * the thermal correction and feasibility bound.
 *
 * Dynamics use hbar = 1 (so the ground state of a frequency-Omega oscillator
 * has V_xx V_pp = 1/4); thermal_p0 and feasibility sit at the SI boundary and
 * take SI inputs with explicit hbar and k_B.
 */
namespace gravimech::sn {

using numeric::cplx;

// --------------------------------------------------------------------------
// Parameters and state
// --------------------------------------------------------------------------

struct SnParams {
  double mass = 1.0;      // hbar = 1 units
  double omega_m = 1.0;   // bare mechanical frequency, rad/s
  double omega_sn = 0.0;  // gravitational self-frequency, rad/s
  double alpha = 0.0;     // measurement strength (Lambda^2 = alpha^2/(m Omega^2))
  double g0 = 0.0;        // designed optomechanical coupling, rad/s (0 = default)

  /** Shifted frequency sqrt(omega_m^2 + omega_sn^2); drives the covariances. */
  double Omega() const;
  /** eps^2 = omega_sn^2 / (2 Omega^2). */
  double eps2() const;
  /** Dimensionless measurement strength Lambda = alpha / (sqrt(m) Omega). */
  double Lambda() const;

  void validate() const;
};

/** Build params with a prescribed Lambda (sets alpha = Lambda sqrt(m) Omega). */
SnParams params_from_lambda(double lambda, double omega_m = 1.0,
                            double omega_sn = 0.0, double mass = 1.0);

/** Conditional means and symmetric covariance triple. */
struct ConditionalGaussianState {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double V_xx = 0.0;
  double V_xp = 0.0;
  double V_pp = 0.0;
};

/** Homodyne record y_k = alpha <x>_k + dW_k/(sqrt(2) dt), one entry per step. */
struct MeasurementRecord {
  std::vector<double> y;
  double dt = 0.0;
  std::uint64_t seed = 0;
};

/** Time series of conditional states plus the measurement record. */
struct Trajectory {
  std::vector<double> t;
  std::vector<ConditionalGaussianState> states;
  MeasurementRecord record;
};

// --------------------------------------------------------------------------
// Covariance dynamics
// --------------------------------------------------------------------------

/**
 * Which V_pp closed form steady_covariance returns. The printed source
 * expression (kept as legacy_printed for audit) fails both the Lambda -> 0
 * ground-state limit and the Riccati fixed-point check; riccati_consistent
 * is the corrected form passing both, identical at Lambda = 0.
 */
enum class VppForm { riccati_consistent, legacy_printed };

/**
 * Steady state of the conditional covariances (means zero). With
 * s = sqrt(1 + Lambda^4):
 *   V_xx = (1/(sqrt(2) m Omega)) (1+s)^{-1/2}
 *   V_xp = (Lambda^2/2) / (1+s)
 *   V_pp = (m Omega/sqrt(2)) s (1+s)^{-1/2}
 * Determinant V_xx V_pp - V_xp^2 = 1/4 exactly for every Lambda; Lambda = 0
 * is the ground state of the Omega oscillator. The legacy_printed variant
 * replaces V_pp by (m Omega/sqrt(2)) s/(1+s).
 */
ConditionalGaussianState steady_covariance(
    const SnParams& params, VppForm form = VppForm::riccati_consistent);

/**
 * Right-hand side of the deterministic covariance (Riccati) flow, in the
 * order (dV_xx, dV_xp, dV_pp):
 *   dV_xx = 2 V_xp/m - 2 alpha^2 V_xx^2
 *   dV_xp = V_pp/m - m Omega^2 V_xx - 2 alpha^2 V_xx V_xp
 *   dV_pp = -2 m Omega^2 V_xp - 2 alpha^2 V_xp^2 + alpha^2/2
 * The shifted Omega (not omega_m) appears: the self-interaction acts on
 * fluctuations about the conditional mean.
 */
std::array<double, 3> covariance_riccati_rhs(const ConditionalGaussianState& state,
                                             const SnParams& params);

/**
 * Conditional trajectory over `steps` steps of size dt. Covariances follow
 * the Riccati flow (classical RK4 per step). Means rotate exactly at the
 * bare omega_m (the self-term cancels on the mean) and then receive the
 * additive measurement kick:
 *   d<x> = (<p>/m) dt + sqrt(2) alpha V_xx dW
 *   d<p> = -m omega_m^2 <x> dt + sqrt(2) alpha V_xp dW
 * with V taken at the step start and dW = sqrt(dt) * N(0,1) from the seeded
 * stream, shared with the record y dt = alpha <x> dt + dW/sqrt(2). Identical
 * seeds give bit-identical trajectories.
 *
 * Requires dt * Omega <= 0.5 (stability); throws std::runtime_error with a
 * diagnostic if the covariance loses positivity.
 */
Trajectory simulate_trajectory(const SnParams& params,
                               const ConditionalGaussianState& initial,
                               double dt, long steps, std::uint64_t seed);

// --------------------------------------------------------------------------
// Pulse dynamics and probabilities
// --------------------------------------------------------------------------

using Mat2 = std::array<std::array<cplx, 2>, 2>;

/** Effective beam-splitter coupling during a pulse: g0 sqrt(omega_m/Omega). */
double effective_coupling(const SnParams& params);

/**
 * Transfer matrix over one constant-coupling segment of duration t for the
 * photon/phonon amplitude pair, with detuning Delta = omega_m - Omega and
 * W = sqrt(4 g^2 + Delta^2), Phi = W t/2:
 *   e^{-i Delta t/2} [[cos Phi - i (Delta/W) sin Phi, -i (2g/W) sin Phi],
 *                     [-i (2g/W) sin Phi,  cos Phi + i (Delta/W) sin Phi]]
 * Unitary for all inputs; g = 0 gives the free-evolution segment; W -> 0
 * degenerates smoothly to the identity (times the global phase).
 */
Mat2 pulse_transfer(const SnParams& params, double g, double t);

struct SnPulseResult {
  double p0 = 0.0;         // headline value: the leading-order closed form
  double p1 = 1.0;         // 1 - p0
  double p0_leading = 0.0; // ((2n+1) pi/4)^2 eps2^2
  double p0_exact = 0.0;   // |transfer-composition amplitude|^2
};

/**
 * Zero-photon probability after the two-pulse sequence with rotation index n
 * and wait T_wait. p0_leading is the closed form ((2n+1) pi/4)^2 eps2^2;
 * p0_exact composes pulse_transfer over pulse/wait/pulse with
 * t_p = (n + 1/2) pi / g0 (g0 defaults to 100 Omega when unset) and takes
 * the squared magnitude of the photon->phonon element. The exact composition
 * approaches 4x the leading form as eps2 -> 0 (the detuning contributes at
 * the same order as the coupling mismatch); both are reported.
 */
SnPulseResult sn_pulse_p0(const SnParams& params, int n, double t_wait = 0.0);

struct ThermalResult {
  double p0_th = 0.0;
  bool regime_ok = true;     // regime_ratio <= 1
  double regime_ratio = 0.0; // k_B T / (hbar omega_m Q)
};

/**
 * Thermal-force contribution to the zero-photon probability over a sequence
 * with pulse duration t_p (SI inputs):
 *   p0_th = 4 gamma_m t_p k_B T / (hbar omega_m),  gamma_m = omega_m / (2 Q)
 *         = 2 omega_m t_p * k_B T / (hbar omega_m Q).
 */
ThermalResult thermal_p0(double omega_m, double q_factor, double temperature,
                         double t_p);

struct FeasibilityResult {
  double omega_sn = 0.0;      // rad/s
  double T_over_Q_max = 0.0;  // K
};

/**
 * Largest temperature-to-Q ratio keeping the thermal contribution below
 * `target_p0_th` in the matched regime omega_m ~ omega_sn:
 * T/Q <= target * hbar * omega_sn / k_B.
 */
FeasibilityResult feasibility(double omega_sn, double target_p0_th = 1.0);

}  // namespace gravimech::sn
