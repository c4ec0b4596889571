#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gravimech/cwl.hpp"
#include "gravimech/physcore.hpp"
#include "gravimech/pulse.hpp"
#include "gravimech/sn.hpp"

/**
 * Experiment pipeline: config ingestion (JSON), material -> omega_sn
 * resolution, three-theory comparison, parameter sweeps, and CSV/JSON
 * emission with full numeric precision and a provenance header.
 */
namespace gravimech::harness {

// --------------------------------------------------------------------------
// Configuration
// --------------------------------------------------------------------------

/** Config failure carrying the list of offending keys ("section.key"). */
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, std::vector<std::string> keys);
  const std::vector<std::string>& offending_keys() const { return keys_; }

 private:
  std::vector<std::string> keys_;
};

/**
 * One experimental configuration. JSON schema (all keys required unless
 * noted):
 *   material:   name (optional), density_kg_m3, ionic_mass_amu, debye_temp_K,
 *               lattice_spacing_m
 *   geometry:   radius_m, thickness_m
 *   pulse:      n, t_p_s, T_wait_s
 *   experiment: omega_m_rad_s, Q, temp_K,
 *               omega_sn_override_rad_s (optional),
 *               omega_cav_rad_s (optional; provenance only, cancels from all
 *               probabilities)
 */
struct ExperimentConfig {
  physcore::MaterialSpec material;
  physcore::MirrorGeometry geometry;
  int pulse_n = 0;
  double t_p = 1.0;          // s
  double t_wait = 0.0;       // s
  double omega_m = 1.0;      // rad/s
  double q_factor = 1.0;     // dimensionless
  double temperature = 0.0;  // K
  std::optional<double> omega_sn_override;  // rad/s
  double omega_cav = 0.0;    // rad/s
};

/** Parse a config from JSON text; throws ConfigError listing every bad key. */
ExperimentConfig parse_config(const std::string& json_text);

/** Read and parse a config file; throws ConfigError on I/O or schema errors. */
ExperimentConfig load_config(const std::string& path);

/**
 * The gravitational self-frequency used by the engines: the explicit
 * override when present, else derived from the material through
 * xi0(material, temperature) -> spike_frequency.
 */
double resolved_omega_sn(const ExperimentConfig& config);

// --------------------------------------------------------------------------
// Comparison and sweeps
// --------------------------------------------------------------------------

/** One theory's final-state probabilities. P0 + P1 = 1 by construction. */
struct TheoryPrediction {
  std::string theory;  // "QM", "SN" or "CWL"
  double P0 = 0.0;
  double P1 = 1.0;
};

struct ComparisonResult {
  std::vector<TheoryPrediction> predictions;  // QM, SN, CWL in that order
  double omega_sn = 0.0;                 // resolved value, rad/s
  double eps2 = 0.0;
  double sn_p0_exact = 0.0;              // transfer-composition diagnostic
  double p0_th = 0.0;                    // thermal contribution, reported
                                         // separately, never mixed into P0
  double extrapolation_residual = 0.0;   // CWL finite-N diagnostic
  bool eps2_small_ok = true;             // eps2 < 0.25 leading-order validity
  bool duration_ok = true;               // CWL pulse-duration regime
  bool thermal_ok = true;                // k_B T/(hbar omega_m Q) <= 1
  ExperimentConfig effective;            // echoed into output headers

  bool regime_ok() const { return eps2_small_ok && duration_ok && thermal_ok; }
};

/**
 * Run all three theories on one configuration. The QM branch is exactly
 * (P0, P1) = (0, 1); SN and CWL come from their engines with mass = 1
 * (hbar = 1 internal units; the probabilities are dimensionless and
 * mass-independent).
 */
ComparisonResult run_comparison(const ExperimentConfig& config);

struct SweepResult {
  std::string axis;
  std::vector<double> grid;
  std::vector<ComparisonResult> rows;  // one per grid point, in grid order
};

/** Valid sweep axes: omega_m, omega_sn, n, tp, Twait, temperature, Q. */
const std::vector<std::string>& sweep_axes();

/**
 * Evaluate run_comparison along one axis. omega_sn sweeps set the override;
 * n sweeps round to the nearest non-negative integer. Unknown axes throw
 * ConfigError listing the valid names.
 */
SweepResult sweep(const ExperimentConfig& config, const std::string& axis,
                  const std::vector<double>& grid);

std::vector<double> linear_grid(double from, double to, int points);
std::vector<double> log_grid(double from, double to, int points);

// --------------------------------------------------------------------------
// Emission
// --------------------------------------------------------------------------

/** Shortest lossless decimal form of v (round-trips exactly; <= 17 digits). */
std::string format_double(double v);

/**
 * Serializers. CSV starts with '#'-prefixed provenance lines echoing the
 * effective config, then a column-name row, then data rows; numeric cells
 * use format_double, booleans are 0/1. Column orders are fixed (documented
 * in the README) and emission is byte-deterministic.
 */
std::string comparison_json(const ComparisonResult& result);
std::string comparison_csv(const ComparisonResult& result);
std::string sweep_json(const SweepResult& result);
std::string sweep_csv(const SweepResult& result);

/** Write content to path, or to stdout when path is empty or "-". */
void emit(const std::string& content, const std::string& path);

}  // namespace gravimech::harness
