#include "gravimech/cwl.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gravimech/constants.hpp"

namespace gravimech::cwl {

namespace {
constexpr double kPi = gravimech::constants::pi;
const cplx kI{0.0, 1.0};
}  // namespace

// --------------------------------------------------------------------------
// Parameters
// --------------------------------------------------------------------------

double CwlParams::Omega() const { return std::hypot(omega_m, omega_sn); }

double CwlParams::eps2() const {
  const double r = omega_sn / omega_m;
  const double r2 = r * r;
  return 0.5 * r2 / (1.0 + r2);
}

void CwlParams::validate() const {
  if (!(omega_m > 0.0) || !(omega_sn >= 0.0) || !(mass > 0.0))
    throw std::invalid_argument(
        "CwlParams: need omega_m > 0, omega_sn >= 0, mass > 0");
}

SqueezeCorrelation squeeze_and_correlation(const CwlParams& params) {
  params.validate();
  const double r = params.omega_sn / params.omega_m;
  SqueezeCorrelation out;
  // zeta = ln(Omega/omega_m)/2 = log1p(r^2)/4, delta = 1 - Omega/omega_m.
  out.zeta = 0.25 * std::log1p(r * r);
  out.delta = -std::expm1(0.5 * std::log1p(r * r));
  return out;
}

// --------------------------------------------------------------------------
// Replica ensembles and collective matrices
// --------------------------------------------------------------------------

namespace {

cplx mean_of(const std::vector<cplx>& v) {
  cplx sum{0.0, 0.0};
  for (const cplx& x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace

cplx ReplicaEnsemble::mean_a() const { return mean_of(a); }
cplx ReplicaEnsemble::mean_b() const { return mean_of(b); }

ProjectorMatrix::ProjectorMatrix(int n_replicas, double eps2)
    : n_(n_replicas), eps2_(eps2) {
  if (n_ < 1) throw std::invalid_argument("ProjectorMatrix: need N >= 1");
  if (!(eps2_ >= 0.0 && eps2_ < 1.0))
    throw std::invalid_argument("ProjectorMatrix: need 0 <= eps2 < 1");
}

std::vector<cplx> ProjectorMatrix::apply(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("ProjectorMatrix::apply: size mismatch");
  const cplx shift = eps2_ * mean_of(v);
  std::vector<cplx> out(v);
  for (cplx& x : out) x -= shift;
  return out;
}

std::vector<cplx> ProjectorMatrix::solve(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("ProjectorMatrix::solve: size mismatch");
  const cplx shift = eps2_ / (1.0 - eps2_) * mean_of(v);
  std::vector<cplx> out(v);
  for (cplx& x : out) x += shift;
  return out;
}

std::vector<std::vector<double>> ProjectorMatrix::dense() const {
  std::vector<std::vector<double>> m(n_, std::vector<double>(n_, 0.0));
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k)
      m[j][k] = (j == k ? 1.0 : 0.0) - eps2_ / n_;
  return m;
}

GroundStateMatrix::GroundStateMatrix(int n_replicas, const CwlParams& params)
    : n_(n_replicas),
      mass_(params.mass),
      omega_m_(params.omega_m),
      omega_cap_(params.Omega()) {
  params.validate();
  if (n_ < 1) throw std::invalid_argument("GroundStateMatrix: need N >= 1");
}

double GroundStateMatrix::uniform_eigenvalue() const {
  return 2.0 * mass_ * omega_m_;
}

double GroundStateMatrix::transverse_eigenvalue() const {
  return 2.0 * mass_ * omega_cap_;
}

std::vector<double> GroundStateMatrix::apply(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("GroundStateMatrix::apply: size mismatch");
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n_;
  const double diag = 2.0 * mass_ * omega_cap_;
  const double shift = 2.0 * mass_ * (omega_cap_ - omega_m_) * mean;
  std::vector<double> out(v);
  for (double& x : out) x = diag * x - shift;
  return out;
}

std::vector<std::vector<double>> GroundStateMatrix::dense() const {
  std::vector<std::vector<double>> m(n_, std::vector<double>(n_, 0.0));
  const double diag = 2.0 * mass_ * omega_cap_;
  const double off = 2.0 * mass_ * (omega_cap_ - omega_m_) / n_;
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) m[j][k] = (j == k ? diag : 0.0) - off;
  return m;
}

// --------------------------------------------------------------------------
// Pulse dynamics
// --------------------------------------------------------------------------

namespace {

struct Mat2c {
  cplx m00, m01, m10, m11;
};

/**
 * Exact propagator over one constant-g segment of duration tau for the mean
 * system d/dt (A, B) = -i [[0, g], [g', w]] (A, B), with g' = g/(1-eps2) and
 * w = Omega eps2/(1-eps2). Splitting off w/2 * identity leaves a traceless
 * part that squares to mu^2 = g g' + w^2/4 times the identity, so the
 * exponential is a cosine/sine pair.
 */
Mat2c segment_propagator(double g, double eps2, double omega_cap, double tau) {
  const double w = omega_cap * eps2 / (1.0 - eps2);
  const double gp = g / (1.0 - eps2);
  const double mu = std::sqrt(g * gp + 0.25 * w * w);
  const double x = mu * tau;
  const double c = std::cos(x);
  const double s_over_mu =
      std::fabs(x) < 1e-8 ? tau * (1.0 - x * x / 6.0) : std::sin(x) / mu;
  const cplx pre = std::polar(1.0, -0.5 * w * tau);
  Mat2c u;
  u.m00 = pre * (c - kI * s_over_mu * (-0.5 * w));
  u.m01 = pre * (-kI * s_over_mu * g);
  u.m10 = pre * (-kI * s_over_mu * gp);
  u.m11 = pre * (c - kI * s_over_mu * (0.5 * w));
  return u;
}

}  // namespace

MeanMode mean_mode_evolution(const pulse::PulseProtocol& protocol,
                             const CwlParams& params, cplx a0, cplx b0,
                             double t) {
  params.validate();
  if (t < 0.0) throw std::invalid_argument("mean_mode_evolution: t must be >= 0");
  const double eps2 = params.eps2();
  const double omega_cap = params.Omega();
  MeanMode state{a0, b0};
  double now = 0.0;
  for (const pulse::Segment& seg : protocol.segments()) {
    if (now >= t) break;
    const double stop = std::min(seg.t1, t);
    if (stop > now) {
      const Mat2c u = segment_propagator(seg.g, eps2, omega_cap, stop - now);
      const cplx na = u.m00 * state.A + u.m01 * state.B;
      const cplx nb = u.m10 * state.A + u.m11 * state.B;
      state.A = na;
      state.B = nb;
      now = stop;
    }
  }
  if (t > now) {  // free evolution past the end of the sequence
    const Mat2c u = segment_propagator(0.0, eps2, omega_cap, t - now);
    const cplx na = u.m00 * state.A + u.m01 * state.B;
    const cplx nb = u.m10 * state.A + u.m11 * state.B;
    state.A = na;
    state.B = nb;
  }
  return state;
}

ReplicaEnsemble replica_solution(const pulse::PulseProtocol& protocol,
                                 const CwlParams& params,
                                 const std::vector<cplx>& a0,
                                 const std::vector<cplx>& b0, double t) {
  params.validate();
  if (a0.empty() || a0.size() != b0.size())
    throw std::invalid_argument("replica_solution: need equal non-empty a0, b0");
  const cplx mean_a0 = mean_of(a0);
  const cplx mean_b0 = mean_of(b0);
  const MeanMode mean = mean_mode_evolution(protocol, params, mean_a0, mean_b0, t);
  const double phi = pulse::integrated_phase(protocol, t);
  const double c = std::cos(phi), s = std::sin(phi);
  ReplicaEnsemble out;
  out.a.resize(a0.size());
  out.b.resize(b0.size());
  for (std::size_t j = 0; j < a0.size(); ++j) {
    const cplx da = a0[j] - mean_a0;
    const cplx db = b0[j] - mean_b0;
    out.a[j] = mean.A + da * c - kI * db * s;
    out.b[j] = mean.B + db * c - kI * da * s;
  }
  return out;
}

ReplicaEnsemble sequence_endpoint(const pulse::PulseProtocol& protocol,
                                  const CwlParams& params,
                                  const std::vector<cplx>& alpha) {
  params.validate();
  if (alpha.empty())
    throw std::invalid_argument("sequence_endpoint: need at least one replica");
  const double eps2 = params.eps2();
  const cplx mean_alpha = mean_of(alpha);
  const cplx a_shift =
      kI * eps2 * params.Omega() * (protocol.t_p() + protocol.t_wait()) * mean_alpha;
  const cplx b_value =
      kI * eps2 * (2.0 * protocol.n() + 1.0) * kPi / 4.0 * mean_alpha;
  ReplicaEnsemble out;
  out.a.resize(alpha.size());
  out.b.assign(alpha.size(), b_value);
  for (std::size_t j = 0; j < alpha.size(); ++j) out.a[j] = -alpha[j] + a_shift;
  return out;
}

bool duration_regime_ok(const CwlParams& params,
                        const pulse::PulseProtocol& protocol) {
  return params.eps2() * params.Omega() * protocol.total_time() <= 0.1;
}

// --------------------------------------------------------------------------
// Fock amplitudes and probabilities
// --------------------------------------------------------------------------

LogComplex fock_amplitude_zero_photon(int n_replicas, double eps2, int n,
                                      double omega_cap, double t_f) {
  if (n_replicas < 1)
    throw std::invalid_argument("fock_amplitude_zero_photon: need N >= 1");
  if (!(eps2 >= 0.0) || n < 0)
    throw std::invalid_argument("fock_amplitude_zero_photon: need eps2 >= 0, n >= 0");
  LogComplex out;
  if (eps2 == 0.0) {
    out.log_abs = -std::numeric_limits<double>::infinity();
    out.arg = 0.0;
    return out;
  }
  const double nn = static_cast<double>(n_replicas);
  const double c = eps2 * (2.0 * n + 1.0) * kPi / 4.0;
  out.log_abs = nn * std::log(c) + std::lgamma(nn + 1.0) - nn * std::log(nn);
  out.arg = numeric::principal_angle(nn * (0.5 * kPi - omega_cap * t_f));
  return out;
}

LogComplex fock_amplitude_one_photon(int n_replicas, double x) {
  if (n_replicas < 1)
    throw std::invalid_argument("fock_amplitude_one_photon: need N >= 1");
  if (!(x >= 0.0))
    throw std::invalid_argument("fock_amplitude_one_photon: need x >= 0");
  LogComplex out;
  if (x == 0.0) {  // exact Rabi return: (-1)^N
    out.log_abs = 0.0;
    out.arg = (n_replicas % 2 != 0) ? kPi : 0.0;
    return out;
  }
  const double nn = static_cast<double>(n_replicas);
  const cplx z{0.0, nn / x};
  const LogComplex gamma = numeric::upper_incomplete_gamma_log(n_replicas + 1, z);
  out.log_abs = nn * std::log(x / nn) + gamma.log_abs;
  out.arg = numeric::principal_angle(nn * 0.5 * kPi + nn / x + gamma.arg);
  return out;
}

CwlPrediction cwl_probabilities(const CwlParams& params,
                                const pulse::PulseProtocol& protocol) {
  params.validate();
  CwlPrediction out;
  out.eps2 = params.eps2();
  out.regime_ok = duration_regime_ok(params, protocol);
  const double c = out.eps2 * (2.0 * protocol.n() + 1.0) * kPi / 4.0;
  const double amp = c / std::exp(1.0);
  out.p0_pre = amp * amp;
  out.p1_pre = 1.0;
  out.P0 = out.p0_pre;
  out.P1 = 1.0 - out.P0;
  if (out.eps2 > 0.0) {
    for (int n_rep = 8; n_rep <= 1024; n_rep *= 2) {
      const LogComplex k0 = fock_amplitude_zero_photon(
          n_rep, out.eps2, protocol.n(), params.Omega(), protocol.total_time());
      out.finite_n_samples.emplace_back(static_cast<double>(n_rep),
                                        2.0 * k0.log_abs / n_rep);
    }
    const numeric::ExtrapolationResult fit =
        numeric::extrapolate_limit(out.finite_n_samples);
    const double target = std::log(out.p0_pre);
    const double scale = std::max(std::fabs(target), 1e-300);
    out.extrapolation_residual = std::fabs(fit.limit - target) / scale;
  }
  return out;
}

}  // namespace gravimech::cwl
