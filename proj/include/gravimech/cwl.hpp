#pragma once

#include <vector>

#include "gravimech/numeric.hpp"
#include "gravimech/pulse.hpp"

/**
 * Correlated-worldline engine: replica dynamics of the pulsed beam-splitter
 * interaction in the coherent-state representation, the collective ground
 * state structure, Fock-amplitude extraction in log space, and the
 * large-replica-count probabilities P0, P1.
 *
 * Units are hbar = 1 and rad/s throughout (conversion from SI happens at the
 * harness boundary). The replica system couples N photon/phonon amplitude
 * pairs (a_j, b_j) only through their means, so every operation exploits the
 * rank-one structure; dense matrices appear only in small-N test oracles.
 */
namespace gravimech::cwl {

using numeric::cplx;
using numeric::LogComplex;

// --------------------------------------------------------------------------
// Parameters
// --------------------------------------------------------------------------

/** Frequencies of one configuration; mass enters only the ground-state matrix. */
struct CwlParams {
  double omega_m = 1.0;   // bare mechanical frequency, rad/s
  double omega_sn = 0.0;  // gravitational self-frequency, rad/s
  double mass = 1.0;      // hbar = 1 units

  /** Shifted mechanical frequency sqrt(omega_m^2 + omega_sn^2). */
  double Omega() const;
  /** Dimensionless coupling eps^2 = omega_sn^2 / (2 Omega^2), in [0, 1/2]. */
  double eps2() const;

  /** Throws std::invalid_argument unless omega_m > 0, omega_sn >= 0, mass > 0. */
  void validate() const;
};

/** Squeeze parameter zeta = ln(Omega/omega_m)/2 and correlation delta = (omega_m - Omega)/omega_m. */
struct SqueezeCorrelation {
  double zeta = 0.0;
  double delta = 0.0;
};

SqueezeCorrelation squeeze_and_correlation(const CwlParams& params);

// --------------------------------------------------------------------------
// Replica ensembles and collective matrices
// --------------------------------------------------------------------------

/** N photon amplitudes a_j and N phonon amplitudes b_j. */
struct ReplicaEnsemble {
  std::vector<cplx> a;
  std::vector<cplx> b;

  int size() const { return static_cast<int>(a.size()); }
  cplx mean_a() const;
  cplx mean_b() const;
};

/**
 * The projector-like coupling matrix P = I - eps2 * J/N (J = all-ones),
 * held implicitly: apply and solve are O(N).
 */
class ProjectorMatrix {
 public:
  ProjectorMatrix(int n_replicas, double eps2);

  int size() const { return n_; }
  double eps2() const { return eps2_; }

  /** P v. */
  std::vector<cplx> apply(const std::vector<cplx>& v) const;
  /** P^{-1} v = v + eps2/(1-eps2) * mean(v) * ones. Requires eps2 < 1. */
  std::vector<cplx> solve(const std::vector<cplx>& v) const;
  /** Dense form for small-N oracle tests. */
  std::vector<std::vector<double>> dense() const;

 private:
  int n_;
  double eps2_;
};

/**
 * Collective ground-state quadratic form
 * A = 2 m Omega I - 2 m (Omega - omega_m) J/N: eigenvalue 2 m omega_m on the
 * uniform mode (multiplicity 1) and 2 m Omega on its orthogonal complement.
 * The uniform-mode stiffness equals the bare 2 m omega_m for every omega_sn,
 * which is the structural statement that the average coordinate evolves
 * without collective corrections.
 */
class GroundStateMatrix {
 public:
  GroundStateMatrix(int n_replicas, const CwlParams& params);

  int size() const { return n_; }
  double uniform_eigenvalue() const;     // 2 m omega_m
  double transverse_eigenvalue() const;  // 2 m Omega

  /** A v in O(N). */
  std::vector<double> apply(const std::vector<double>& v) const;
  /** Dense form for small-N oracle tests. */
  std::vector<std::vector<double>> dense() const;

 private:
  int n_;
  double mass_;
  double omega_m_;
  double omega_cap_;
};

// --------------------------------------------------------------------------
// Pulse dynamics
// --------------------------------------------------------------------------

/** Mean photon amplitude A and mean phonon amplitude B. */
struct MeanMode {
  cplx A{0.0, 0.0};
  cplx B{0.0, 0.0};
};

/**
 * Exact evolution of the replica means under the pulsed equations of motion
 *   dA/dt = -i g(t) B,
 *   dB/dt = -i g(t)/(1-eps2) A - i Omega eps2/(1-eps2) B,
 * propagated segment-by-segment in closed form (each segment has constant
 * g, so the 2x2 system exponentiates exactly; no quadrature error).
 */
MeanMode mean_mode_evolution(const pulse::PulseProtocol& protocol,
                             const CwlParams& params, cplx a0, cplx b0, double t);

/**
 * Exact solution of the full replica system
 *   da_j/dt = -i g b_j,   P db/dt = -i g a - i Omega eps2 (J/N) b
 * at time t: the means follow mean_mode_evolution and the fluctuations
 * (components orthogonal to the uniform mode) undergo a pure Rabi rotation
 * by the integrated phase phi(t).
 */
ReplicaEnsemble replica_solution(const pulse::PulseProtocol& protocol,
                                 const CwlParams& params,
                                 const std::vector<cplx>& a0,
                                 const std::vector<cplx>& b0, double t);

/**
 * Leading-order closed form for the state at the end of the full sequence
 * (t = 2 t_p + T_wait), starting from photon amplitudes alpha and phonon
 * amplitudes zero:
 *   a_j = -alpha_j + i eps2 Omega (t_p + T_wait) * mean(alpha)
 *   b_j = i eps2 (2n+1) pi/4 * mean(alpha)
 * Valid while the sequence is short against 1/(eps2*Omega); see
 * duration_regime_ok. The retained terms are O(eps2), so agreement with
 * replica_solution is O(eps2^2) plus O(eps2^2 * Omega t).
 */
ReplicaEnsemble sequence_endpoint(const pulse::PulseProtocol& protocol,
                                  const CwlParams& params,
                                  const std::vector<cplx>& alpha);

/** True when eps2 * Omega * (2 t_p + T_wait) <= 0.1. */
bool duration_regime_ok(const CwlParams& params,
                        const pulse::PulseProtocol& protocol);

// --------------------------------------------------------------------------
// Fock amplitudes and probabilities
// --------------------------------------------------------------------------

/**
 * N-replica amplitude for detecting zero photons after the sequence,
 *   K0 = [i eps2 e^{-i Omega t_f} (2n+1) pi/4]^N * N!/N^N,
 * in log space (underflows as a raw double near N ~ 100). eps2 = 0 gives
 * log-magnitude -infinity. The phase is carried for completeness but only
 * the magnitude enters probabilities.
 */
LogComplex fock_amplitude_zero_photon(int n_replicas, double eps2, int n,
                                      double omega_cap, double t_f);

/**
 * N-replica amplitude for detecting the photon again, as a function of
 * x = eps2 * Omega * (t_p + T_wait):
 *   K1 = (i x / N)^N e^{i N / x} Gamma(N+1, i N / x),
 * in log space via the complex upper incomplete gamma. x = 0 is the exact
 * Rabi-return limit (-1)^N. The global cavity phase is dropped (it cancels
 * from all probabilities). Phases are valid modulo 2 pi.
 */
LogComplex fock_amplitude_one_photon(int n_replicas, double x);

/** Final probabilities plus the finite-N extrapolation diagnostic. */
struct CwlPrediction {
  double P0 = 0.0;   // eps2^2 ((2n+1) pi / (4e))^2
  double P1 = 1.0;   // 1 - P0
  double eps2 = 0.0;
  bool regime_ok = true;              // duration_regime_ok
  double extrapolation_residual = 0.0;  // |intercept - ln P0| / |ln P0|; 0 at eps2 = 0
  double p0_pre = 0.0;                // preprobability lim |K0|^{2/N}
  double p1_pre = 1.0;                // preprobability lim |K1|^{2/N} = 1
  /** (N, (2/N) log|K0|) samples behind the extrapolation diagnostic. */
  std::vector<std::pair<double, double>> finite_n_samples;
};

/**
 * The pulsed-protocol prediction: P0 from the closed form (the finite-N
 * extrapolation over N in {8, 16, ..., 1024} is a consistency diagnostic,
 * not the reported value, because convergence is O(log N / N)). A violated
 * duration regime flags the result but still returns it.
 */
CwlPrediction cwl_probabilities(const CwlParams& params,
                                const pulse::PulseProtocol& protocol);

}  // namespace gravimech::cwl
