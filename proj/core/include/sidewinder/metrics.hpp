#pragma once

#include <string>

#include <Eigen/Core>

#include "sidewinder/locomotion.hpp"

namespace sidewinder {

/// Reference displacements reported for the physical robot, for
/// comparison tables only; the kinematic simulator is not expected to
/// reproduce them (they include friction and compliance effects).
struct SurfaceReference {
  const char* medium;
  double bl_per_cycle;
  double bl_per_cycle_std;
  double reversed_bl_per_cycle;
  double reversed_bl_per_cycle_std;
};

inline constexpr SurfaceReference kSurfaceReferences[] = {
    {"polished concrete", 0.19, 0.02, 0.17, 0.01},
    {"wood", 0.18, 0.01, 0.16, 0.01},
    {"rubber", 0.19, 0.01, 0.17, 0.01},
    {"granular media", 0.14, 0.01, 0.13, 0.01},
};

/// Performance measures of one run.
struct RunSummary {
  int cycles = 0;
  double displacement_m = 0.0;       ///< net COM displacement, start to end
  double bl_per_cycle = 0.0;         ///< displacement_m / (body_length * cycles)
  double track_r2 = 0.0;             ///< straightness of the COM ground track
  double heading_deg = 0.0;          ///< direction of the fitted track
  double max_contact_drift_m = 0.0;  ///< worst stance-interval slip
};

struct TrackFit {
  double heading_deg = 0.0;
  double r2 = 1.0;
};

/// Mean world-frame link position (uniform mass per link).
Eigen::Vector3d center_of_mass(const BackboneShape& shape, const WorldPose& pose);

/// Net COM displacement normalized by body length and cycle count.
double bl_per_cycle(const Trajectory& traj, double body_length, int n_cycles);

/// Total-least-squares line through the COM ground-plane track.
/// r2 = 1 - lambda_min / lambda_max of the xy scatter; coincident points
/// give heading 0 and r2 = 1 by convention. Requires >= 3 samples.
TrackFit track_fit(const Trajectory& traj);

/// Largest world-frame movement of any link across a single step while
/// it stays in the contact set; the constraint solve keeps this at
/// O(dt^2).
double contact_drift(const Trajectory& traj);

RunSummary summarize(const Trajectory& traj, double body_length);

/// Plain-text table of simulated rows next to the physical references
/// (medium, BL/cycle, reversed BL/cycle).
struct TableRow {
  std::string medium;
  double bl = 0.0;
  double bl_reversed = 0.0;
  bool simulated = true;
};
std::string format_surface_table(const std::vector<TableRow>& simulated_rows);

}  // namespace sidewinder
