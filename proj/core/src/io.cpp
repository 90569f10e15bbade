#include "sidewinder/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace sidewinder {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "time_s,tail_x,tail_y,tail_z,"
        "r00,r01,r02,r10,r11,r12,r20,r21,r22,"
        "com_x,com_y,com_z,n_contacts,a1,a2\n";
  for (const TrajectorySample& s : traj.samples) {
    os << format_double(s.time) << ',' << format_double(s.pose.position.x()) << ','
       << format_double(s.pose.position.y()) << ',' << format_double(s.pose.position.z());
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        os << ',' << format_double(s.pose.rotation(r, c));
      }
    }
    os << ',' << format_double(s.com.x()) << ',' << format_double(s.com.y()) << ','
       << format_double(s.com.z()) << ',' << s.contacts.size() << ','
       << format_double(s.shape.a1) << ',' << format_double(s.shape.a2) << '\n';
  }
}

namespace {

// Equivalent sinusoidal per-actuator pressures of the ideal control;
// opposing pairs differ by exactly cos(t) and cos(t - offset).
std::array<double, 4> ideal_pressures(double t, const GaitParams& g) {
  const double sign = g.direction == Direction::kReversed ? -1.0 : 1.0;
  const double c1 = std::cos(t);
  const double c2 = std::cos(t - sign * g.pair_offset);
  return {0.5 * (1.0 + c1), 0.5 * (1.0 + c2), 0.5 * (1.0 - c1), 0.5 * (1.0 - c2)};
}

}  // namespace

void write_gait_csv(std::ostream& os, const GaitParams& g, SignalMode mode, int n) {
  g.validate();
  if (n < 8) throw std::invalid_argument("gait csv: samples must be >= 8");

  os << "time_s,u1,u2,u3,u4,p1,p2,p3,p4,a1,a2\n";
  const double period = g.wave_period();
  const int warmup = 12;
  for (int j = 0; j < n; ++j) {
    const double local = period * j / n;
    const double t_steady = warmup * period + local;
    const std::array<int, 4> u = valve_commands(t_steady, g);

    std::array<double, 4> p{};
    ShapeState state;
    if (mode == SignalMode::kSquare) {
      const PressureState ps = exact_pressures(t_steady, g);
      p = ps.p;
      state = pressures_to_shape(ps, g.amplitude);
    } else {
      p = ideal_pressures(2.0 * M_PI * j / n, g);
      state.a1 = g.amplitude * (p[0] - p[2]);
      state.a2 = g.amplitude * (p[1] - p[3]);
    }

    os << format_double(local);
    for (int v : u) os << ',' << v;
    for (double v : p) os << ',' << format_double(v);
    os << ',' << format_double(state.a1) << ',' << format_double(state.a2) << '\n';
  }
}

void write_phase_csv(std::ostream& os, const GaitParams& g, SignalMode mode, int n) {
  os << "pair1,pair2\n";
  for (const Eigen::Vector2d& pt : phase_samples(g, n, mode)) {
    os << format_double(pt.x()) << ',' << format_double(pt.y()) << '\n';
  }
}

std::string summary_json(const RunSummary& s) {
  std::string out = "{\n";
  out += "  \"cycles\": " + std::to_string(s.cycles) + ",\n";
  out += "  \"displacement_m\": " + format_double(s.displacement_m) + ",\n";
  out += "  \"bl_per_cycle\": " + format_double(s.bl_per_cycle) + ",\n";
  out += "  \"track_r2\": " + format_double(s.track_r2) + ",\n";
  out += "  \"heading_deg\": " + format_double(s.heading_deg) + "\n";
  out += "}\n";
  return out;
}

}  // namespace sidewinder
