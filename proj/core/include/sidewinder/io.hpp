#pragma once

#include <iosfwd>
#include <string>

#include "sidewinder/gait.hpp"
#include "sidewinder/locomotion.hpp"
#include "sidewinder/metrics.hpp"

namespace sidewinder {

/// All floating-point output is printed with 9 significant digits.
std::string format_double(double v);

/// Columns: time_s,tail_x,tail_y,tail_z,r00..r22,com_x,com_y,com_z,
/// n_contacts,a1,a2; one row per sample.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// Columns: time_s,u1,u2,u3,u4,p1,p2,p3,p4,a1,a2; n rows sampling one
/// steady-state cycle. Ideal mode emits the equivalent sinusoidal
/// per-actuator pressures and the reference valve schedule.
void write_gait_csv(std::ostream& os, const GaitParams& g, SignalMode mode, int n);

/// Columns: pair1,pair2; the phase-diagram point list of phase_samples.
void write_phase_csv(std::ostream& os, const GaitParams& g, SignalMode mode, int n);

/// {cycles, displacement_m, bl_per_cycle, track_r2, heading_deg}.
std::string summary_json(const RunSummary& s);

}  // namespace sidewinder
