#pragma once

#include <cstdint>
#include <string>

#include "gravimech/numeric.hpp"

/**
 * Material and geometry physics: the inter-path gravitational potentials of a
 * rigid extended body, its zero-point nuclear displacement length, the bulk
 * and spike small-oscillation frequencies, and the measurement-relaxation
 * time. Everything here is SI with explicit constants from
 * gravimech/constants.hpp.
 */
namespace gravimech::physcore {

/** Bulk and microscopic properties of the mirror material. */
struct MaterialSpec {
  double density = 0.0;          // kg / m^3
  double ionic_mass = 0.0;       // kg (mass of one nucleus/ion, not the mirror)
  double debye_energy = 0.0;     // J (k_B times the Debye temperature)
  double lattice_spacing = 0.0;  // m
  std::string name;

  /** Throws std::invalid_argument unless all physical fields are > 0. */
  void validate() const;
};

/** Cylindrical mirror: radius R0, thickness L0. */
struct MirrorGeometry {
  double radius = 0.0;     // m
  double thickness = 0.0;  // m

  void validate() const;
  double volume() const;              // pi R0^2 L0, m^3
  double mass(double density) const;  // kg
};

/** Derived scales for one (material, geometry, temperature, Q) configuration. */
struct DerivedScales {
  double xi0 = 0.0;             // zero-point + thermal nuclear displacement, m
  double omega_sn = 0.0;        // spike (gravitational self-coupling) frequency, rad/s
  double omega_b = 0.0;         // bulk oscillation frequency, rad/s
  double gamma = 0.0;           // dimensionless shape constant
  double gamma_std_error = 0.0; // Monte Carlo standard error on gamma
  double v_spike_depth = 0.0;   // G M m / xi0, J
  double v_slow_depth = 0.0;    // gamma G M^2 / V0^(1/3), J
  double tau_r = 0.0;           // Q / omega_sn, s
};

/**
 * RMS zero-point-plus-thermal displacement of one nucleus in a Debye model:
 *   xi0^2(T) = (9 hbar^2 / m) [ 1/(4 theta_D)
 *              + theta_D^-3 * integral_0^theta_D E dE / (e^{E/kT} - 1) ],
 * with theta_D the Debye energy (J) and m the ionic mass. At T = 0 this
 * reduces to xi0 = (3/2) hbar (m theta_D)^{-1/2} exactly. The thermal
 * integral is evaluated by adaptive Simpson quadrature to 1e-12 relative.
 */
double xi0(const MaterialSpec& material, double temperature);

/**
 * Shape constant gamma = V0^{-5/3} * double integral of 1/|r - r'| over the
 * body, a pure number (~1.8-1.9 for squat cylinders and spheres). Estimated
 * by Monte Carlo pair sampling: `n_pairs` pairs, stratified over 16 z-slabs
 * of the first point, each slab on its own counter-derived substream of
 * `seed` — results are bit-reproducible at fixed slab count. The returned
 * standard error combines the per-slab errors.
 */
numeric::McEstimate shape_gamma(const MirrorGeometry& geometry,
                                long n_pairs = 10'000'000,
                                std::uint64_t seed = 0x5eed);

/** gamma for a uniform sphere (plain pair sampling); analytic value is
 *  (6/5)(4 pi/3)^{1/3} = 1.93439... — used as the Monte Carlo anchor test. */
numeric::McEstimate shape_gamma_sphere(double radius, long n_pairs = 10'000'000,
                                       std::uint64_t seed = 0x5eed);

/**
 * Slowly-varying part of the inter-path potential of a displaced body pair:
 *   v_slow(R) = -(G M^2 / R) Erf( (sqrt(pi)/2) * gamma * R / V0^{1/3} ).
 * The range scale V0^{1/3} makes the R -> 0 limit equal the exact self-energy
 * -gamma G M^2 / V0^{1/3} of the defining double integral, and the quadratic
 * term of the well reproduces bulk_frequency below. Continuous and C^1 at
 * R = 0 (series evaluation near the origin); -> -G M^2/R as R -> infinity.
 */
double v_slow(double R, double M, const MirrorGeometry& geometry, double gamma_shape);

/**
 * Short-range spike of the inter-path potential from nuclear zero-point
 * structure: v_spike(R) = -(G M m / R) Erf( R / (sqrt(2) xi0) ), with range
 * xi0 and R -> 0 limit -sqrt(2/pi) G M m / xi0.
 */
double v_spike(double R, double M, double m_ion, double xi0_length);

/** Characteristic spike well depth G M m / xi0 (J). */
double v_spike_depth(double M, double m_ion, double xi0_length);

/** Depth of the slow well, |v_slow(0)| = gamma G M^2 / V0^{1/3} (J). */
double v_slow_depth(double M, const MirrorGeometry& geometry, double gamma_shape);

/**
 * Small-oscillation frequency in the slow well:
 * omega_B = sqrt( pi gamma^3 G rho0 / 6 ) — depends on the material only
 * through its density and on the geometry only through gamma, so it is
 * invariant under uniform rescaling of the body.
 */
double bulk_frequency(const MaterialSpec& material, double gamma_shape);

/**
 * Small-oscillation frequency inside the central spike well:
 * omega_sp = sqrt( sqrt(2/pi) G m / (3 xi0^3) ), scaling as xi0^{-3/2}.
 * This is the gravitational self-coupling frequency used by the dynamics
 * engines (omega_SN ~ omega_sp).
 */
double spike_frequency(const MaterialSpec& material, double xi0_length);

/** Relaxation time of the collective coupling under damping: tau_R = Q / omega_SN. */
double relaxation_time(double q_factor, double omega_sn);

/** All derived scales for one configuration (gamma by Monte Carlo). */
DerivedScales derive_scales(const MaterialSpec& material,
                            const MirrorGeometry& geometry, double temperature,
                            double q_factor, long n_pairs = 10'000'000,
                            std::uint64_t seed = 0x5eed);

}  // namespace gravimech::physcore
