#include "gravimech/physcore.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "gravimech/constants.hpp"

namespace gravimech::physcore {

namespace con = gravimech::constants;

void MaterialSpec::validate() const {
  if (!(density > 0.0) || !(ionic_mass > 0.0) || !(debye_energy > 0.0) ||
      !(lattice_spacing > 0.0))
    throw std::invalid_argument(
        "MaterialSpec: density, ionic_mass, debye_energy and lattice_spacing "
        "must all be > 0 (material '" + name + "')");
}

void MirrorGeometry::validate() const {
  if (!(radius > 0.0) || !(thickness > 0.0))
    throw std::invalid_argument("MirrorGeometry: radius and thickness must be > 0");
}

double MirrorGeometry::volume() const { return con::pi * radius * radius * thickness; }

double MirrorGeometry::mass(double density) const { return density * volume(); }

// --------------------------------------------------------------------------
// Debye displacement length
// --------------------------------------------------------------------------

namespace {

// Adaptive Simpson quadrature with an absolute tolerance.
double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                            double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(a, b, fa, fm, fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole,
                              std::max(tol, 1e-300), 48);
}

}  // namespace

double xi0(const MaterialSpec& material, double temperature) {
  material.validate();
  if (temperature < 0.0)
    throw std::invalid_argument("xi0: temperature must be >= 0");

  const double m = material.ionic_mass;
  const double theta = material.debye_energy;
  double thermal = 0.0;
  if (temperature > 0.0) {
    const double kt = con::k_B * temperature;
    // E / (e^{E/kT} - 1), finite at E = 0 where it equals kT.
    const auto integrand = [kt](double e) {
      if (e == 0.0) return kt;
      return e / std::expm1(e / kt);
    };
    const double integral =
        adaptive_simpson(integrand, 0.0, theta, 1e-14 * kt * theta);
    thermal = integral / (theta * theta * theta);
  }
  const double xi0_sq =
      (9.0 * con::hbar * con::hbar / m) * (0.25 / theta + thermal);
  return std::sqrt(xi0_sq);
}

// --------------------------------------------------------------------------
// Shape constant
// --------------------------------------------------------------------------

namespace {

// All body samplers are built from unit-cube draws scaled by the dimensions,
// so uniformly rescaling the body by a power of two rescales every sample
// exactly and the (dimensionless) gamma estimate is reproduced bit-for-bit.
void sample_cylinder_point(numeric::RngStream& rng, double radius, double thickness,
                           double z_lo, double z_hi, double* out) {
  const double r = std::sqrt(rng.uniform());
  const double th = 2.0 * con::pi * rng.uniform();
  const double z = z_lo + (z_hi - z_lo) * rng.uniform();
  out[0] = radius * (r * std::cos(th));
  out[1] = radius * (r * std::sin(th));
  out[2] = thickness * z;
}

double pair_inverse_distance(const std::vector<double>& p) {
  const double dx = p[0] - p[3], dy = p[1] - p[4], dz = p[2] - p[5];
  const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
  return 1.0 / d;  // the coincidence set has probability zero
}

}  // namespace

numeric::McEstimate shape_gamma(const MirrorGeometry& geometry, long n_pairs,
                                std::uint64_t seed) {
  geometry.validate();
  if (n_pairs < 32) throw std::invalid_argument("shape_gamma: need at least 32 pairs");

  constexpr int kSlabs = 16;  // stratification of the first point's z coordinate
  const double R = geometry.radius, L = geometry.thickness;
  long double mean_acc = 0.0L, var_acc = 0.0L;
  for (int k = 0; k < kSlabs; ++k) {
    const double z_lo = static_cast<double>(k) / kSlabs - 0.5;
    const double z_hi = static_cast<double>(k + 1) / kSlabs - 0.5;
    numeric::RngStream stream(seed, static_cast<std::uint64_t>(k));
    const long n_slab = n_pairs / kSlabs + (k == kSlabs - 1 ? n_pairs % kSlabs : 0);
    const auto sampler = [&](numeric::RngStream& rng, std::vector<double>& p) {
      sample_cylinder_point(rng, R, L, z_lo, z_hi, p.data());
      sample_cylinder_point(rng, R, L, -0.5, 0.5, p.data() + 3);
    };
    const numeric::McEstimate slab =
        numeric::mc_integrate(6, sampler, pair_inverse_distance, n_slab, stream);
    mean_acc += slab.value;
    var_acc += static_cast<long double>(slab.std_error) * slab.std_error;
  }
  const double scale = std::cbrt(geometry.volume());
  numeric::McEstimate out;
  out.value = scale * static_cast<double>(mean_acc / kSlabs);
  out.std_error = scale * static_cast<double>(std::sqrt(var_acc) / kSlabs);
  out.n_samples = n_pairs;
  return out;
}

numeric::McEstimate shape_gamma_sphere(double radius, long n_pairs,
                                       std::uint64_t seed) {
  if (!(radius > 0.0)) throw std::invalid_argument("shape_gamma_sphere: radius must be > 0");
  if (n_pairs < 32) throw std::invalid_argument("shape_gamma_sphere: need at least 32 pairs");
  numeric::RngStream stream(seed, 0);
  const auto sample_ball = [radius](numeric::RngStream& rng, double* out) {
    // Rejection from the unit cube (acceptance accepts with p = pi/6).
    double x, y, z;
    do {
      x = 2.0 * rng.uniform() - 1.0;
      y = 2.0 * rng.uniform() - 1.0;
      z = 2.0 * rng.uniform() - 1.0;
    } while (x * x + y * y + z * z > 1.0);
    out[0] = radius * x;
    out[1] = radius * y;
    out[2] = radius * z;
  };
  const auto sampler = [&](numeric::RngStream& rng, std::vector<double>& p) {
    sample_ball(rng, p.data());
    sample_ball(rng, p.data() + 3);
  };
  numeric::McEstimate est =
      numeric::mc_integrate(6, sampler, pair_inverse_distance, n_pairs, stream);
  const double volume = 4.0 / 3.0 * con::pi * radius * radius * radius;
  const double scale = std::cbrt(volume);
  est.value *= scale;
  est.std_error *= scale;
  return est;
}

// --------------------------------------------------------------------------
// Inter-path potentials
// --------------------------------------------------------------------------

namespace {

// erf(x)/x, series near the origin so callers stay C^1 through x = 0.
double erf_over_x(double x) {
  const double ax = std::fabs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    // 2/sqrt(pi) * (1 - x^2/3 + x^4/10 - x^6/42)
    return 1.1283791670955126 *
           (1.0 - x2 / 3.0 + x2 * x2 / 10.0 - x2 * x2 * x2 / 42.0);
  }
  return std::erf(x) / x;
}

}  // namespace

double v_slow(double R, double M, const MirrorGeometry& geometry, double gamma_shape) {
  if (R < 0.0) throw std::invalid_argument("v_slow: R must be >= 0");
  if (!(gamma_shape > 0.0)) throw std::invalid_argument("v_slow: gamma must be > 0");
  geometry.validate();
  const double range = std::cbrt(geometry.volume());
  const double c = 0.5 * std::sqrt(con::pi) * gamma_shape / range;
  return -con::G * M * M * c * erf_over_x(c * R);
}

double v_spike(double R, double M, double m_ion, double xi0_length) {
  if (R < 0.0) throw std::invalid_argument("v_spike: R must be >= 0");
  if (!(xi0_length > 0.0)) throw std::invalid_argument("v_spike: xi0 must be > 0");
  const double c = 1.0 / (std::sqrt(2.0) * xi0_length);
  return -con::G * M * m_ion * c * erf_over_x(c * R);
}

double v_spike_depth(double M, double m_ion, double xi0_length) {
  if (!(xi0_length > 0.0)) throw std::invalid_argument("v_spike_depth: xi0 must be > 0");
  return con::G * M * m_ion / xi0_length;
}

double v_slow_depth(double M, const MirrorGeometry& geometry, double gamma_shape) {
  geometry.validate();
  return gamma_shape * con::G * M * M / std::cbrt(geometry.volume());
}

// --------------------------------------------------------------------------
// Frequencies and relaxation
// --------------------------------------------------------------------------

double bulk_frequency(const MaterialSpec& material, double gamma_shape) {
  material.validate();
  if (!(gamma_shape > 0.0))
    throw std::invalid_argument("bulk_frequency: gamma must be > 0");
  return std::sqrt(con::pi * gamma_shape * gamma_shape * gamma_shape * con::G *
                   material.density / 6.0);
}

double spike_frequency(const MaterialSpec& material, double xi0_length) {
  material.validate();
  if (!(xi0_length > 0.0))
    throw std::invalid_argument("spike_frequency: xi0 must be > 0");
  const double xi3 = xi0_length * xi0_length * xi0_length;
  return std::sqrt(std::sqrt(2.0 / con::pi) * con::G * material.ionic_mass /
                   (3.0 * xi3));
}

double relaxation_time(double q_factor, double omega_sn) {
  if (!(q_factor >= 1.0)) throw std::invalid_argument("relaxation_time: Q must be >= 1");
  if (!(omega_sn > 0.0))
    throw std::invalid_argument("relaxation_time: omega_sn must be > 0");
  return q_factor / omega_sn;
}

DerivedScales derive_scales(const MaterialSpec& material,
                            const MirrorGeometry& geometry, double temperature,
                            double q_factor, long n_pairs, std::uint64_t seed) {
  material.validate();
  geometry.validate();
  DerivedScales out;
  out.xi0 = xi0(material, temperature);
  const numeric::McEstimate g = shape_gamma(geometry, n_pairs, seed);
  out.gamma = g.value;
  out.gamma_std_error = g.std_error;
  out.omega_b = bulk_frequency(material, out.gamma);
  out.omega_sn = spike_frequency(material, out.xi0);
  const double M = geometry.mass(material.density);
  out.v_spike_depth = v_spike_depth(M, material.ionic_mass, out.xi0);
  out.v_slow_depth = v_slow_depth(M, geometry, out.gamma);
  out.tau_r = relaxation_time(q_factor, out.omega_sn);
  return out;
}

}  // namespace gravimech::physcore
