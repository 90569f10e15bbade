#include "sidewinder/gait.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sidewinder {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

int actuator_slot(int k, Direction dir) {
  return dir == Direction::kReversed ? 3 - k : k;
}

}  // namespace

void GaitParams::validate() const {
  require(std::isfinite(inflation_time) && inflation_time > 0.0,
          "gait.inflation_time must be > 0");
  require(std::isfinite(high_time) && high_time > 0.0, "gait.high_time must be > 0");
  require(std::isfinite(low_time) && low_time > 0.0, "gait.low_time must be > 0");
  require(std::isfinite(actuator_delay) && actuator_delay > 0.0,
          "gait.actuator_delay must be > 0");
  require(std::isfinite(pair_offset), "gait.pair_offset must be finite");
  require(std::isfinite(time_constant) && time_constant > 0.0,
          "gait.time_constant must be > 0");
  require(std::isfinite(amplitude) && amplitude >= 0.0, "gait.amplitude must be >= 0");
}

int square_wave(double time, double tau_high, double tau_low, double phase_delay) {
  if (time < phase_delay) return 0;  // the waveform starts at its delay
  const double period = tau_high + tau_low;
  const double local = std::fmod(time - phase_delay, period);
  return local < tau_high ? 1 : 0;
}

std::array<int, 4> valve_commands(double time, const GaitParams& g) {
  std::array<int, 4> u{};
  for (int k = 0; k < 4; ++k) {
    u[k] = square_wave(time, g.high_time, g.low_time,
                       actuator_slot(k, g.direction) * g.actuator_delay);
  }
  return u;
}

PressureState pressure_step(const PressureState& p, const std::array<int, 4>& u,
                            double dt, double time_constant) {
  require(std::isfinite(dt) && dt > 0.0, "pressure_step: dt must be > 0");
  require(std::isfinite(time_constant) && time_constant > 0.0,
          "pressure_step: time_constant must be > 0");
  require(dt <= time_constant / 5.0 + 1e-12,
          "pressure_step: dt must be <= time_constant / 5");
  for (double v : p.p) {
    require(std::isfinite(v), "pressure_step: non-finite pressure");
  }

  const double decay = std::exp(-dt / time_constant);
  PressureState out;
  out.time = p.time + dt;
  for (int i = 0; i < 4; ++i) {
    const double target = static_cast<double>(u[i]);
    out.p[i] = std::clamp(target + (p.p[i] - target) * decay, 0.0, 1.0);
  }
  return out;
}

ShapeState pressures_to_shape(const PressureState& p, double amplitude) {
  return {amplitude * (p.p[0] - p.p[2]), amplitude * (p.p[1] - p.p[3]), 0.0};
}

IdealSignal ideal_shape_signal(double t, const GaitParams& g) {
  const double sign = g.direction == Direction::kReversed ? -1.0 : 1.0;
  const double offset = sign * g.pair_offset;
  const double a = g.amplitude;
  IdealSignal out;
  out.state = {a * std::cos(t), a * std::cos(t - offset), t};
  out.rate = {-a * std::sin(t), -a * std::sin(t - offset)};
  return out;
}

PressureState exact_pressures(double time, const GaitParams& g) {
  g.validate();
  require(std::isfinite(time) && time >= 0.0, "exact_pressures: time must be >= 0");

  PressureState out;
  out.time = time;
  for (int k = 0; k < 4; ++k) {
    const double delay = actuator_slot(k, g.direction) * g.actuator_delay;
    double p = 0.0;
    double t_cur = 0.0;
    // Segment boundaries of this actuator's command, stepped exactly.
    double seg_end = delay;
    int u = 0;
    bool started = false;
    while (t_cur < time) {
      const double t_next = std::min(seg_end, time);
      p = u + (p - u) * std::exp(-(t_next - t_cur) / g.time_constant);
      t_cur = t_next;
      if (t_cur >= time) break;
      if (!started) {
        started = true;
        u = 1;
        seg_end = delay + g.high_time;
      } else {
        u = 1 - u;
        seg_end += (u == 1) ? g.high_time : g.low_time;
      }
    }
    out.p[k] = std::clamp(p, 0.0, 1.0);
  }
  return out;
}

std::vector<Eigen::Vector2d> phase_samples(const GaitParams& g, int n, SignalMode mode) {
  g.validate();
  require(n >= 8, "phase_samples: n must be >= 8");

  std::vector<Eigen::Vector2d> points;
  points.reserve(n);
  if (mode == SignalMode::kIdeal) {
    for (int j = 0; j < n; ++j) {
      const double t = 2.0 * M_PI * j / n;
      const IdealSignal sig = ideal_shape_signal(t, g);
      points.emplace_back(sig.state.a1, sig.state.a2);
    }
    return points;
  }

  // Warm past the startup transient; the waveform contracts by
  // exp(-wave_period / time_constant) per cycle.
  const double period = g.wave_period();
  const int warmup = 12;
  for (int j = 0; j < n; ++j) {
    const double t = warmup * period + period * j / n;
    const ShapeState s = pressures_to_shape(exact_pressures(t, g), g.amplitude);
    points.emplace_back(s.a1, s.a2);
  }
  return points;
}

}  // namespace sidewinder
