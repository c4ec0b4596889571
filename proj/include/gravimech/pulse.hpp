#pragma once

#include <vector>

/**
 * Pulse-protocol definitions and integrated-phase calculus shared by the
 * theory engines.
 *
 * The built-in protocol is two rectangular coupling pulses of duration t_p
 * separated by a free wait T_wait, with amplitude g0 = (2n+1)*pi/(2*t_p)
 * chosen so that the integrated phase reaches (n+1/2)*pi between the pulses
 * (a state swap) and (2n+1)*pi after both (a full return). All values are
 * immutable; phases are computed segment-wise in closed form, so there is no
 * quadrature error anywhere in the protocol layer.
 */
namespace gravimech::pulse {

/** One piecewise-constant coupling segment: g(t) = g on [t0, t1]. */
struct Segment {
  double t0 = 0.0;  // s
  double t1 = 0.0;  // s
  double g = 0.0;   // rad/s
};

/** Two rectangular pulses (duration t_p each) separated by T_wait. */
class PulseProtocol {
 public:
  /**
   * n >= 0 is the rotation index; t_p > 0 and T_wait >= 0 are in seconds.
   * The amplitude is fixed by the swap condition, g0 = (2n+1)*pi/(2*t_p).
   */
  PulseProtocol(int n, double t_p, double t_wait);

  int n() const { return n_; }
  double t_p() const { return t_p_; }             // s
  double t_wait() const { return t_wait_; }       // s
  double g0() const;                              // rad/s
  double total_time() const;                      // 2*t_p + T_wait, s

  /** The three segments (pulse, wait, pulse); the wait is kept even if empty. */
  std::vector<Segment> segments() const;

 private:
  int n_;
  double t_p_;
  double t_wait_;
};

/**
 * Piecewise-constant coupling value at time t. Support boundaries are
 * closed-closed (measure zero, fixed for determinism): t in [0, t_p] and
 * [t_p + T_wait, 2 t_p + T_wait] give g0, anything else 0.
 */
double g_of_t(const PulseProtocol& protocol, double t);

/** Integrated phase phi(t) = integral of g from 0 to t (exact, segment-wise). */
double integrated_phase(const PulseProtocol& protocol, double t);

/**
 * Collectively corrected integrated pulse strength
 * Phi(t) = (1 + eps2/2) * |phi(t)| for this non-negative pulse shape.
 * `omega` (the shifted mechanical frequency, rad/s) enters only the validity
 * bookkeeping: the closed forms assume the pulse drive dominates the
 * collective term, i.e. eps2 * omega * t remains small against Phi —
 * checked by cwl_pulse_regime_ok, not silently assumed here.
 */
double cwl_integrated_pulse(const PulseProtocol& protocol, double eps2,
                            double omega, double t);

/**
 * True when the collective correction stays below 10% of the integrated
 * pulse strength over the whole sequence: eps2*omega*(2 t_p + T) <= 0.1 * Phi_end.
 */
bool cwl_pulse_regime_ok(const PulseProtocol& protocol, double eps2, double omega);

/**
 * General piecewise-constant protocol (for sweeps and oracle tests): a sorted
 * list of segments starting at t = 0 with no gaps. Phase is accumulated in
 * closed form per segment.
 */
class PiecewiseProtocol {
 public:
  explicit PiecewiseProtocol(std::vector<Segment> segments);
  double g(double t) const;
  double phase(double t) const;
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  std::vector<Segment> segments_;
  std::vector<double> phase_at_start_;  // phi(t0) per segment, precomputed
};

/** The two-rectangle protocol as a general piecewise protocol. */
PiecewiseProtocol to_piecewise(const PulseProtocol& protocol);

}  // namespace gravimech::pulse
