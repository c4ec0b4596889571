#include "gravimech/pulse.hpp"

#include <cmath>
#include <stdexcept>

#include "gravimech/constants.hpp"

namespace gravimech::pulse {

PulseProtocol::PulseProtocol(int n, double t_p, double t_wait)
    : n_(n), t_p_(t_p), t_wait_(t_wait) {
  if (n < 0) throw std::invalid_argument("PulseProtocol: n must be >= 0");
  if (!(t_p > 0.0)) throw std::invalid_argument("PulseProtocol: t_p must be > 0");
  if (!(t_wait >= 0.0)) throw std::invalid_argument("PulseProtocol: T_wait must be >= 0");
}

double PulseProtocol::g0() const {
  return (2.0 * n_ + 1.0) * constants::pi / (2.0 * t_p_);
}

double PulseProtocol::total_time() const { return 2.0 * t_p_ + t_wait_; }

std::vector<Segment> PulseProtocol::segments() const {
  const double g = g0();
  return {{0.0, t_p_, g},
          {t_p_, t_p_ + t_wait_, 0.0},
          {t_p_ + t_wait_, total_time(), g}};
}

double g_of_t(const PulseProtocol& protocol, double t) {
  if (t < 0.0) throw std::invalid_argument("g_of_t: t must be >= 0");
  const double tp = protocol.t_p();
  const double tw = protocol.t_wait();
  if (t <= tp) return protocol.g0();
  if (t >= tp + tw && t <= protocol.total_time()) return protocol.g0();
  return 0.0;
}

double integrated_phase(const PulseProtocol& protocol, double t) {
  if (t < 0.0) throw std::invalid_argument("integrated_phase: t must be >= 0");
  const double tp = protocol.t_p();
  const double tw = protocol.t_wait();
  const double g = protocol.g0();
  if (t <= tp) return g * t;
  if (t <= tp + tw) return g * tp;
  if (t <= protocol.total_time()) return g * tp + g * (t - tp - tw);
  return 2.0 * g * tp;
}

double cwl_integrated_pulse(const PulseProtocol& protocol, double eps2,
                            double /*omega*/, double t) {
  if (eps2 < 0.0) throw std::invalid_argument("cwl_integrated_pulse: eps2 must be >= 0");
  return (1.0 + 0.5 * eps2) * std::fabs(integrated_phase(protocol, t));
}

bool cwl_pulse_regime_ok(const PulseProtocol& protocol, double eps2, double omega) {
  const double t_end = protocol.total_time();
  const double phi_end = cwl_integrated_pulse(protocol, eps2, omega, t_end);
  return eps2 * omega * t_end <= 0.1 * phi_end;
}

PiecewiseProtocol::PiecewiseProtocol(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty())
    throw std::invalid_argument("PiecewiseProtocol: need at least one segment");
  if (segments_.front().t0 != 0.0)
    throw std::invalid_argument("PiecewiseProtocol: segments must start at t = 0");
  double phi = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (!(s.t1 >= s.t0))
      throw std::invalid_argument("PiecewiseProtocol: segment must have t1 >= t0");
    if (i > 0 && s.t0 != segments_[i - 1].t1)
      throw std::invalid_argument("PiecewiseProtocol: segments must be gap-free");
    phase_at_start_.push_back(phi);
    phi += s.g * (s.t1 - s.t0);
  }
}

double PiecewiseProtocol::g(double t) const {
  if (t < 0.0) throw std::invalid_argument("PiecewiseProtocol::g: t must be >= 0");
  for (const Segment& s : segments_)
    if (t <= s.t1) return s.g;
  return 0.0;
}

double PiecewiseProtocol::phase(double t) const {
  if (t < 0.0) throw std::invalid_argument("PiecewiseProtocol::phase: t must be >= 0");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (t <= s.t1) return phase_at_start_[i] + s.g * (t - s.t0);
  }
  return phase_at_start_.back() +
         segments_.back().g * (segments_.back().t1 - segments_.back().t0);
}

PiecewiseProtocol to_piecewise(const PulseProtocol& protocol) {
  return PiecewiseProtocol(protocol.segments());
}

}  // namespace gravimech::pulse
