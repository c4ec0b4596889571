#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

/**
 * Shared numerical kernels: deterministic RNG substreams, a fixed-step RK4
 * integrator with step-halving error control, Monte Carlo quadrature, the
 * complex upper incomplete gamma function in log space, sequence-limit
 * extrapolation, and a small Jacobi eigensolver used by oracle tests.
 *
 * All kernels are pure functions of their inputs (plus an explicit RNG
 * stream); there is no global state, so parallel callers only need disjoint
 * stream indices.
 */
namespace gravimech::numeric {

using cplx = std::complex<double>;

// --------------------------------------------------------------------------
// Random number streams
// --------------------------------------------------------------------------

/**
 * Counter-based random substream.
 *
 * Stream `k` of master seed `s` seeds a splitmix64 state with
 * s XOR (k * 0x9E3779B97F4A7C15 + 1); successive 64-bit outputs follow the
 * splitmix64 recurrence. Distinct stream indices give statistically
 * independent sequences, and a (seed, index) pair reproduces bit-identical
 * output on every platform: uniform doubles are built from the top 53 bits,
 * and normals use an explicit Box-Muller transform (the standard library
 * distributions are not portable across implementations).
 */
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  /** Next uniform double in [0, 1). */
  double uniform();
  /** Next standard normal deviate (Box-Muller; one value cached). */
  double gaussian();
  /** Next raw 64-bit word of the stream. */
  std::uint64_t next_u64();

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// --------------------------------------------------------------------------
// ODE integration
// --------------------------------------------------------------------------

/** dy/dt = rhs(t, y); states are complex vectors (real problems embed). */
using OdeRhs =
    std::function<void(double t, const std::vector<cplx>& y, std::vector<cplx>& dydt)>;

/** One initial-value problem for ode_integrate. */
struct OdeProblem {
  OdeRhs rhs;
  std::vector<cplx> y0;
  double t0 = 0.0;
  double t1 = 1.0;
  double tolerance = 1e-10;  // bound on the step-halving (Richardson) estimate
};

struct OdeResult {
  std::vector<double> t;               // accepted grid (including endpoints)
  std::vector<std::vector<cplx>> y;    // state at each grid point
  int steps = 0;                       // accepted step count
  double error_estimate = 0.0;         // max-norm Richardson estimate at t1
};

/**
 * Classical RK4 with `nsteps` fixed steps from t0 to t1; returns y(t1).
 * Building block for ode_integrate and for test oracles that control their
 * own resolution.
 */
std::vector<cplx> rk4_fixed(const OdeRhs& rhs, std::vector<cplx> y, double t0,
                            double t1, int nsteps);

/**
 * Fixed-step RK4 whose step count is doubled until the Richardson
 * (step-halving) error estimate |y_2n - y_n|_inf / 15 meets the tolerance.
 * Throws std::runtime_error if the step count underflows (2^22 steps reached
 * without meeting tolerance).
 */
OdeResult ode_integrate(const OdeProblem& problem);

// --------------------------------------------------------------------------
// Monte Carlo quadrature
// --------------------------------------------------------------------------

struct McEstimate {
  double value = 0.0;       // sample mean of the integrand
  double std_error = 0.0;   // standard error of the mean
  long n_samples = 0;
};

/** Draws one point of dimension `dim` into `point` using `stream`. */
using McSampler = std::function<void(RngStream& stream, std::vector<double>& point)>;
using McIntegrand = std::function<double(const std::vector<double>& point)>;

/**
 * Unbiased Monte Carlo mean of `integrand` over points drawn by `sampler`
 * (the caller folds the sampling measure into the integrand). Accumulates in
 * long double; the reported standard error is the usual sqrt(var/n).
 */
McEstimate mc_integrate(int dimension, const McSampler& sampler,
                        const McIntegrand& integrand, long n_samples,
                        RngStream& stream);

// --------------------------------------------------------------------------
// Upper incomplete gamma (integer first argument, complex second)
// --------------------------------------------------------------------------

/** A complex number carried as log-magnitude and phase. */
struct LogComplex {
  double log_abs = 0.0;  // natural log of the magnitude
  double arg = 0.0;      // phase, radians, reduced to (-pi, pi]
  cplx value() const;    // exp(log_abs) * e^{i arg}; may overflow for huge log_abs
};

/**
 * log Gamma(a, z) for integer a >= 1 and complex z, returned as
 * (log-magnitude, phase). Evaluation is a Legendre continued fraction (Lentz)
 * for |z| > a + 1 and the lower-series complement otherwise; the switchover
 * is validated in the tests against a direct high-order series oracle.
 *
 * The phase is the principal value only: overall 2*pi windings of the branch
 * are not tracked, so compare phases modulo 2*pi. Magnitudes are accurate to
 * ~1e-12 relative over the boxes exercised by the pulse engines (a <= 65,
 * |z| <= 1e3, and along the imaginary axis up to a ~ 1e3).
 */
LogComplex upper_incomplete_gamma_log(int a, cplx z);

/** Convenience wrapper: Gamma(a, z) as a complex double (may over/underflow). */
cplx upper_incomplete_gamma(int a, cplx z);

// --------------------------------------------------------------------------
// Sequence-limit extrapolation
// --------------------------------------------------------------------------

struct ExtrapolationResult {
  double limit = 0.0;         // fitted intercept a
  double max_residual = 0.0;  // max |fit - sample| over the input points
};

/**
 * Least-squares fit of samples (N, y) to y = a + b/N + c*log(N)/N and
 * extraction of the N -> infinity intercept. Requires >= 4 samples with
 * strictly increasing N. Normal equations are solved in long double.
 */
ExtrapolationResult extrapolate_limit(
    const std::vector<std::pair<double, double>>& samples);

// --------------------------------------------------------------------------
// Small symmetric eigenproblems (test oracle)
// --------------------------------------------------------------------------

/**
 * Eigenvalues of a small real symmetric matrix by cyclic Jacobi rotations,
 * returned in ascending order. Intended for dense oracle checks (N <= 8).
 */
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

/** Reduce an angle to the principal interval (-pi, pi]. */
double principal_angle(double phi);

}  // namespace gravimech::numeric
