#include "gravimech/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gravimech::numeric {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

// --------------------------------------------------------------------------
// RngStream
// --------------------------------------------------------------------------

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      state_(master_seed ^ (stream_index * kGolden + 1)) {}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform() {
  // Top 53 bits -> [0, 1) with full double resolution.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller on (0, 1] x [0, 1): explicit so all platforms agree bit-for-bit.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * 3.14159265358979323846 * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

// --------------------------------------------------------------------------
// ODE integration
// --------------------------------------------------------------------------

namespace {
void rk4_step(const OdeRhs& rhs, double t, double h, std::vector<cplx>& y,
              std::vector<cplx>& k1, std::vector<cplx>& k2, std::vector<cplx>& k3,
              std::vector<cplx>& k4, std::vector<cplx>& scratch) {
  const std::size_t dim = y.size();
  rhs(t, y, k1);
  for (std::size_t i = 0; i < dim; ++i) scratch[i] = y[i] + 0.5 * h * k1[i];
  rhs(t + 0.5 * h, scratch, k2);
  for (std::size_t i = 0; i < dim; ++i) scratch[i] = y[i] + 0.5 * h * k2[i];
  rhs(t + 0.5 * h, scratch, k3);
  for (std::size_t i = 0; i < dim; ++i) scratch[i] = y[i] + h * k3[i];
  rhs(t + h, scratch, k4);
  for (std::size_t i = 0; i < dim; ++i)
    y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}
}  // namespace

std::vector<cplx> rk4_fixed(const OdeRhs& rhs, std::vector<cplx> y, double t0,
                            double t1, int nsteps) {
  if (nsteps < 1) throw std::invalid_argument("rk4_fixed: nsteps must be >= 1");
  const std::size_t dim = y.size();
  std::vector<cplx> k1(dim), k2(dim), k3(dim), k4(dim), scratch(dim);
  const double h = (t1 - t0) / nsteps;
  for (int s = 0; s < nsteps; ++s) {
    rk4_step(rhs, t0 + s * h, h, y, k1, k2, k3, k4, scratch);
  }
  return y;
}

OdeResult ode_integrate(const OdeProblem& problem) {
  if (problem.tolerance <= 0.0)
    throw std::invalid_argument("ode_integrate: tolerance must be positive");
  constexpr int kMaxSteps = 1 << 22;

  int n = 16;
  std::vector<cplx> coarse = rk4_fixed(problem.rhs, problem.y0, problem.t0, problem.t1, n);
  double err = 0.0;
  std::vector<cplx> fine;
  while (true) {
    fine = rk4_fixed(problem.rhs, problem.y0, problem.t0, problem.t1, 2 * n);
    err = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i)
      err = std::max(err, std::abs(fine[i] - coarse[i]) / 15.0);
    if (err <= problem.tolerance) break;
    if (2 * n >= kMaxSteps)
      throw std::runtime_error(
          "ode_integrate: step count exhausted before meeting tolerance "
          "(err=" + std::to_string(err) + ")");
    n *= 2;
    coarse = std::move(fine);
  }

  // Re-run at the accepted resolution, storing at most 1025 grid points.
  const int accepted = 2 * n;
  const int stride = std::max(1, accepted / 1024);
  OdeResult result;
  result.steps = accepted;
  result.error_estimate = err;
  const std::size_t dim = problem.y0.size();
  std::vector<cplx> y = problem.y0;
  std::vector<cplx> k1(dim), k2(dim), k3(dim), k4(dim), scratch(dim);
  const double h = (problem.t1 - problem.t0) / accepted;
  result.t.push_back(problem.t0);
  result.y.push_back(y);
  for (int s = 0; s < accepted; ++s) {
    rk4_step(problem.rhs, problem.t0 + s * h, h, y, k1, k2, k3, k4, scratch);
    if ((s + 1) % stride == 0 || s + 1 == accepted) {
      result.t.push_back(problem.t0 + (s + 1) * h);
      result.y.push_back(y);
    }
  }
  return result;
}

// --------------------------------------------------------------------------
// Monte Carlo quadrature
// --------------------------------------------------------------------------

McEstimate mc_integrate(int dimension, const McSampler& sampler,
                        const McIntegrand& integrand, long n_samples,
                        RngStream& stream) {
  if (dimension < 1) throw std::invalid_argument("mc_integrate: dimension must be >= 1");
  if (n_samples < 2) throw std::invalid_argument("mc_integrate: need at least 2 samples");
  std::vector<double> point(dimension);
  long double sum = 0.0L, sum_sq = 0.0L;
  for (long i = 0; i < n_samples; ++i) {
    sampler(stream, point);
    const long double v = integrand(point);
    sum += v;
    sum_sq += v * v;
  }
  const long double mean = sum / n_samples;
  long double var = (sum_sq - static_cast<long double>(n_samples) * mean * mean) /
                    (n_samples - 1);
  if (var < 0.0L) var = 0.0L;
  McEstimate est;
  est.value = static_cast<double>(mean);
  est.std_error = static_cast<double>(std::sqrt(var / n_samples));
  est.n_samples = n_samples;
  return est;
}

// --------------------------------------------------------------------------
// Upper incomplete gamma
// --------------------------------------------------------------------------

double principal_angle(double phi) {
  constexpr double two_pi = 2.0 * 3.14159265358979323846;
  phi = std::fmod(phi, two_pi);
  if (phi <= -3.14159265358979323846) phi += two_pi;
  if (phi > 3.14159265358979323846) phi -= two_pi;
  return phi;
}

cplx LogComplex::value() const {
  return std::exp(log_abs) * cplx(std::cos(arg), std::sin(arg));
}

LogComplex upper_incomplete_gamma_log(int a, cplx z) {
  if (a < 1) throw std::invalid_argument("upper_incomplete_gamma_log: a must be >= 1");
  const double ad = static_cast<double>(a);
  if (z == cplx(0.0, 0.0)) {
    // Gamma(a, 0) = Gamma(a) = (a-1)!
    return LogComplex{std::lgamma(ad), 0.0};
  }

  if (std::abs(z) > ad + 1.0) {
    // Legendre continued fraction, evaluated by the modified Lentz scheme:
    // Gamma(a, z) = e^{-z} z^a * h.
    constexpr double tiny = 1e-300;
    cplx b = z + 1.0 - ad;
    if (std::abs(b) < tiny) b = tiny;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 20000; ++i) {
      const double an = -static_cast<double>(i) * (static_cast<double>(i) - ad);
      b += 2.0;
      d = an * d + b;
      if (std::abs(d) < tiny) d = tiny;
      c = b + an / c;
      if (std::abs(c) < tiny) c = tiny;
      d = 1.0 / d;
      const cplx delta = d * c;
      h *= delta;
      if (std::abs(delta - 1.0) < 1e-15) break;
    }
    LogComplex out;
    out.log_abs = -z.real() + ad * std::log(std::abs(z)) + std::log(std::abs(h));
    out.arg = principal_angle(-z.imag() + ad * std::arg(z) + std::arg(h));
    return out;
  }

  // Series for the lower function: gamma(a, z) = z^a e^{-z} sum_n z^n / (a)_(n+1),
  // then Gamma(a, z) = Gamma(a) (1 - P) with P = gamma / Gamma.
  cplx term = 1.0 / ad;
  cplx s = term;
  for (int n = 1; n < 20000; ++n) {
    term *= z / (ad + n);
    s += term;
    if (std::abs(term) < 1e-17 * std::abs(s)) break;
  }
  const cplx log_p = ad * std::log(z) - z + std::log(s) - std::lgamma(ad);
  LogComplex out;
  if (log_p.real() > 36.0) {
    // |P| > ~4e15: 1 - P is -P to double precision; never form exp(log_p).
    out.log_abs = std::lgamma(ad) + log_p.real();
    out.arg = principal_angle(3.14159265358979323846 + log_p.imag());
    return out;
  }
  const cplx p = std::exp(log_p);
  const cplx q = 1.0 - p;
  if (q == cplx(0.0, 0.0)) {
    out.log_abs = -std::numeric_limits<double>::infinity();
    out.arg = 0.0;
    return out;
  }
  out.log_abs = std::lgamma(ad) + std::log(std::abs(q));
  out.arg = principal_angle(std::arg(q));
  return out;
}

cplx upper_incomplete_gamma(int a, cplx z) {
  return upper_incomplete_gamma_log(a, z).value();
}

// --------------------------------------------------------------------------
// Sequence-limit extrapolation
// --------------------------------------------------------------------------

ExtrapolationResult extrapolate_limit(
    const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 4)
    throw std::invalid_argument("extrapolate_limit: need at least 4 samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].first <= samples[i - 1].first)
      throw std::invalid_argument("extrapolate_limit: N values must be increasing");

  // Basis {1, 1/N, log(N)/N}; normal equations in long double.
  long double ata[3][3] = {{0.0L}};
  long double aty[3] = {0.0L};
  for (const auto& [n, y] : samples) {
    const long double phi[3] = {1.0L, 1.0L / n, std::log(static_cast<long double>(n)) / n};
    for (int r = 0; r < 3; ++r) {
      aty[r] += phi[r] * y;
      for (int c = 0; c < 3; ++c) ata[r][c] += phi[r] * phi[c];
    }
  }
  // Gaussian elimination with partial pivoting on the 3x3 system.
  int perm[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(static_cast<double>(ata[r][col])) >
          std::fabs(static_cast<double>(ata[pivot][col])))
        pivot = r;
    std::swap(ata[col], ata[pivot]);
    std::swap(aty[col], aty[pivot]);
    std::swap(perm[col], perm[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const long double f = ata[r][col] / ata[col][col];
      for (int c = col; c < 3; ++c) ata[r][c] -= f * ata[col][c];
      aty[r] -= f * aty[col];
    }
  }
  long double coef[3];
  for (int r = 2; r >= 0; --r) {
    long double acc = aty[r];
    for (int c = r + 1; c < 3; ++c) acc -= ata[r][c] * coef[c];
    coef[r] = acc / ata[r][r];
  }
  (void)perm;

  ExtrapolationResult result;
  result.limit = static_cast<double>(coef[0]);
  for (const auto& [n, y] : samples) {
    const double fit = static_cast<double>(coef[0] + coef[1] / n +
                                           coef[2] * std::log(n) / n);
    result.max_residual = std::max(result.max_residual, std::fabs(fit - y));
  }
  return result;
}

// --------------------------------------------------------------------------
// Jacobi eigensolver (test oracle)
// --------------------------------------------------------------------------

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n)
      throw std::invalid_argument("symmetric_eigenvalues: matrix must be square");

  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace gravimech::numeric
