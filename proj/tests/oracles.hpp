#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gravimech/cwl.hpp"
#include "gravimech/numeric.hpp"
#include "gravimech/pulse.hpp"

/**
 * Independent numerical oracles for the test suite. Everything here is
 * deliberately written against the defining integrals/series/ODEs rather
 * than against the library's closed forms, so agreement is evidence and not
 * tautology. Oracles favor transparency over speed.
 */
namespace oracles {

using cplx = std::complex<double>;
using gravimech::numeric::RngStream;

// ---------------------------------------------------------------------------
// Upper incomplete gamma by direct series (oracle for the CF/series hybrid)
// ---------------------------------------------------------------------------

/**
 * Gamma(a, z) for integer a >= 1 from the lower-series complement
 *   Gamma(a, z) = Gamma(a) - z^a e^{-z} sum_{n>=0} z^n / (a (a+1) ... (a+n)),
 * summed in plain complex arithmetic until the running term falls below
 * 1e-20 of the partial sum (300-term cap). Accurate wherever cancellation is
 * mild (|z| not huge against a), which covers the comparison boxes.
 */
inline cplx series_upper_gamma(int a, cplx z) {
  if (a < 1) throw std::invalid_argument("series_upper_gamma: a must be >= 1");
  if (std::abs(z) == 0.0) return std::tgamma(static_cast<double>(a));
  cplx term = 1.0 / static_cast<double>(a);  // n = 0 term of the series
  cplx sum = term;
  for (int n = 1; n < 300; ++n) {
    term *= z / static_cast<double>(a + n);
    sum += term;
    if (std::abs(term) < 1e-20 * std::abs(sum)) break;
  }
  const cplx lower = std::pow(z, static_cast<double>(a)) * std::exp(-z) * sum;
  return std::tgamma(static_cast<double>(a)) - lower;
}

// ---------------------------------------------------------------------------
// Generating-function oracle for the Fock amplitudes
// ---------------------------------------------------------------------------

/**
 * Per-replica generating kernel at the end of the pulse sequence (final-time
 * cavity phase set to zero):
 *   zeta_k(alpha, beta) = -alpha_k + i x mean(alpha) + i c2 mean(beta),
 * where x is the accumulated collective drift eps2*Omega*(t_p + T_wait) and
 * c2 = eps2 (2n+1) pi / 4 is the pulse-transfer coefficient. The N-photon
 * generating function is G = prod_k zeta_k; the zero-photon amplitude is the
 * mixed partial of G over all beta_k at 0 (alpha = 0) and the one-photon
 * amplitude the mixed partial over all alpha_k at 0 (beta = 0).
 */
struct GeneratingFunction {
  int n_replicas = 1;
  double x = 0.0;   // collective drift coefficient
  double c2 = 0.0;  // pulse-transfer coefficient

  cplx operator()(const std::vector<cplx>& alpha,
                  const std::vector<cplx>& beta) const {
    cplx mean_alpha = 0.0, mean_beta = 0.0;
    for (int k = 0; k < n_replicas; ++k) {
      mean_alpha += alpha[k];
      mean_beta += beta[k];
    }
    mean_alpha /= static_cast<double>(n_replicas);
    mean_beta /= static_cast<double>(n_replicas);
    cplx prod = 1.0;
    for (int k = 0; k < n_replicas; ++k)
      prod *= -alpha[k] + cplx(0.0, 1.0) * (x * mean_alpha + c2 * mean_beta);
    return prod;
  }
};

/**
 * Mixed partial d^N F / dv_1 ... dv_N at v = 0 by the 2^N-corner central
 * difference: sum over sign vectors s of (prod s_i) F(s h) / (2h)^N. Exact
 * (up to roundoff) for any polynomial whose only monomial with all-odd
 * degrees is the multilinear one — true for the degree-N generating
 * functions above, so h may be O(1).
 */
inline cplx mixed_partial(const std::function<cplx(const std::vector<cplx>&)>& f,
                          int n_vars, double h) {
  const std::uint64_t corners = std::uint64_t{1} << n_vars;
  cplx acc = 0.0;
  std::vector<cplx> v(static_cast<std::size_t>(n_vars));
  for (std::uint64_t mask = 0; mask < corners; ++mask) {
    double sign = 1.0;
    for (int i = 0; i < n_vars; ++i) {
      const bool plus = (mask >> i) & 1u;
      v[static_cast<std::size_t>(i)] = plus ? h : -h;
      if (!plus) sign = -sign;
    }
    acc += sign * f(v);
  }
  return acc / std::pow(2.0 * h, n_vars);
}

/** Zero-photon amplitude: mixed partial over beta at alpha = 0. */
inline cplx zero_photon_partial(const GeneratingFunction& g, double h = 0.5) {
  const std::vector<cplx> zero(static_cast<std::size_t>(g.n_replicas), 0.0);
  return mixed_partial(
      [&](const std::vector<cplx>& beta) { return g(zero, beta); },
      g.n_replicas, h);
}

/** One-photon amplitude: mixed partial over alpha at beta = 0. */
inline cplx one_photon_partial(const GeneratingFunction& g, double h = 0.5) {
  const std::vector<cplx> zero(static_cast<std::size_t>(g.n_replicas), 0.0);
  return mixed_partial(
      [&](const std::vector<cplx>& alpha) { return g(alpha, zero); },
      g.n_replicas, h);
}

// ---------------------------------------------------------------------------
// Replica-system RK4 oracle
// ---------------------------------------------------------------------------

/**
 * Direct RK4 integration of the exact replica equations of motion
 *   da_j/dt = -i g(t) b_j,
 *   P db/dt = -i g(t) a - i Omega eps2 mean(b) 1,
 * with P the collective projector (solved exactly per evaluation through
 * ProjectorMatrix::solve). Piecewise-constant protocols are integrated
 * segment by segment so stage evaluations never straddle a discontinuity of
 * g. Returns the state at the requested time.
 */
inline gravimech::cwl::ReplicaEnsemble integrate_replica_system(
    const gravimech::pulse::PulseProtocol& protocol,
    const gravimech::cwl::CwlParams& params, const std::vector<cplx>& alpha,
    const std::vector<cplx>& beta, double t, int steps_per_segment = 4000) {
  const std::size_t n = alpha.size();
  const double eps2 = params.eps2();
  const double omega_cap = params.Omega();
  const gravimech::cwl::ProjectorMatrix projector(static_cast<int>(n), eps2);

  const auto rhs = [&](double g) {
    return [&, g](double, const std::vector<cplx>& y, std::vector<cplx>& dydt) {
      const cplx i_unit(0.0, 1.0);
      std::vector<cplx> forcing(n);
      cplx mean_b = 0.0;
      for (std::size_t j = 0; j < n; ++j) mean_b += y[n + j];
      mean_b /= static_cast<double>(n);
      for (std::size_t j = 0; j < n; ++j) {
        dydt[j] = -i_unit * g * y[n + j];
        forcing[j] = -i_unit * g * y[j] - i_unit * omega_cap * eps2 * mean_b;
      }
      const std::vector<cplx> db = projector.solve(forcing);
      for (std::size_t j = 0; j < n; ++j) dydt[n + j] = db[j];
    };
  };

  std::vector<cplx> y(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    y[j] = alpha[j];
    y[n + j] = beta[j];
  }

  double clock = 0.0;
  auto advance = [&](double g, double until) {
    if (until <= clock) return;
    y = gravimech::numeric::rk4_fixed(rhs(g), y, clock, until,
                                      steps_per_segment);
    clock = until;
  };
  for (const gravimech::pulse::Segment& seg : protocol.segments()) {
    if (clock >= t) break;
    advance(seg.g, std::min(seg.t1, t));
  }
  advance(0.0, t);  // free evolution past the protocol end

  gravimech::cwl::ReplicaEnsemble out;
  out.a.assign(y.begin(), y.begin() + static_cast<long>(n));
  out.b.assign(y.begin() + static_cast<long>(n), y.end());
  return out;
}

// ---------------------------------------------------------------------------
// Thermal-force stochastic-integral Monte Carlo
// ---------------------------------------------------------------------------

struct ThermalMcResult {
  double mean_p0 = 0.0;   // Monte Carlo estimate of E|I|^2
  double std_error = 0.0; // standard error of the mean over seeds
};

/**
 * Monte Carlo oracle for the thermal zero-photon probability: the white
 * thermal force enters the sideband integral
 *   I = integral_0^{2 t_p} F(t') sin(phi(t')) dt'
 * with phi the protocol's integrated phase and F a complex envelope whose
 * quadratures are independent white noises of spectral density
 * S_F = 2 gamma_m k_B T / (hbar omega_m), gamma_m = omega_m / (2Q), in
 * normalized (photon-number) units. Discretized midpoint-wise with per-step
 * quadrature variance S_F / dt; E|I|^2 -> 2 S_F t_p = p0_th as dt -> 0.
 */
inline ThermalMcResult thermal_mc(double omega_m, double q_factor,
                                  double temperature, double t_p, long n_seeds,
                                  int steps_per_pulse = 200,
                                  std::uint64_t seed = 0x7e54a1) {
  const double hbar = 1.054571817e-34;  // J s (CODATA, as in the library)
  const double k_b = 1.380649e-23;      // J / K (exact)
  const double gamma_m = omega_m / (2.0 * q_factor);
  const double s_f = 2.0 * gamma_m * k_b * temperature / (hbar * omega_m);
  const gravimech::pulse::PulseProtocol protocol(0, t_p, 0.0);
  const int n_steps = 2 * steps_per_pulse;
  const double dt = 2.0 * t_p / n_steps;
  const double sigma = std::sqrt(s_f / dt);

  long double acc = 0.0L, acc2 = 0.0L;
  for (long s = 0; s < n_seeds; ++s) {
    RngStream stream(seed, static_cast<std::uint64_t>(s));
    cplx integral = 0.0;
    for (int k = 0; k < n_steps; ++k) {
      const double t_mid = (k + 0.5) * dt;
      const double weight = std::sin(gravimech::pulse::integrated_phase(protocol, t_mid));
      const cplx f(sigma * stream.gaussian(), sigma * stream.gaussian());
      integral += f * weight * dt;
    }
    const double p0 = std::norm(integral);
    acc += p0;
    acc2 += static_cast<long double>(p0) * p0;
  }
  ThermalMcResult out;
  out.mean_p0 = static_cast<double>(acc / n_seeds);
  const long double var =
      (acc2 / n_seeds - (acc / n_seeds) * (acc / n_seeds)) / (n_seeds - 1);
  out.std_error = static_cast<double>(std::sqrt(std::max(var, 0.0L)));
  return out;
}

// ---------------------------------------------------------------------------
// Small dense helpers
// ---------------------------------------------------------------------------

/** Dense matrix-vector product for oracle comparisons. */
inline std::vector<cplx> dense_apply(const std::vector<std::vector<double>>& m,
                                     const std::vector<cplx>& v) {
  std::vector<cplx> out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/** Max relative deviation between two complex vectors (scale: max |b|). */
inline double max_rel_diff(const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
  double scale = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max(scale, std::abs(b[i]));
    diff = std::max(diff, std::abs(a[i] - b[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace oracles
