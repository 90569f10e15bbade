#include "sidewinder/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace sidewinder {

Eigen::Vector3d center_of_mass(const BackboneShape& shape, const WorldPose& pose) {
  if (shape.frames.empty()) throw std::invalid_argument("center_of_mass: empty shape");
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const LinkFrame& f : shape.frames) mean += f.position;
  mean /= static_cast<double>(shape.size());
  return pose.rotation * mean + pose.position;
}

double bl_per_cycle(const Trajectory& traj, double body_length, int n_cycles) {
  if (n_cycles < 1) throw std::invalid_argument("bl_per_cycle: n_cycles must be >= 1");
  if (traj.samples.size() < 2) return 0.0;
  const double displacement = (traj.samples.back().com - traj.samples.front().com).norm();
  return displacement / (body_length * n_cycles);
}

TrackFit track_fit(const Trajectory& traj) {
  if (traj.samples.size() < 3) throw std::invalid_argument("track_fit: needs >= 3 samples");

  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  for (const TrajectorySample& s : traj.samples) centroid += s.com.head<2>();
  centroid /= static_cast<double>(traj.samples.size());

  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (const TrajectorySample& s : traj.samples) {
    const Eigen::Vector2d d = s.com.head<2>() - centroid;
    cov += d * d.transpose();
  }

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(cov);
  const double lo = std::max(eig.eigenvalues()(0), 0.0);
  const double hi = eig.eigenvalues()(1);
  if (hi <= 1e-300) return {0.0, 1.0};  // all points coincide

  Eigen::Vector2d dir = eig.eigenvectors().col(1);
  const Eigen::Vector2d net =
      traj.samples.back().com.head<2>() - traj.samples.front().com.head<2>();
  if (dir.dot(net) < 0.0) dir = -dir;

  TrackFit fit;
  fit.heading_deg = std::atan2(dir.y(), dir.x()) * 180.0 / M_PI;
  fit.r2 = 1.0 - lo / hi;
  return fit;
}

double contact_drift(const Trajectory& traj) {
  // Worst per-step world movement of a link while it stays in the
  // contact set: the stationarity violation the constraint solve is
  // supposed to suppress. Second order in dt.
  double drift = 0.0;
  std::map<int, Eigen::Vector3d> previous;
  for (const TrajectorySample& s : traj.samples) {
    std::map<int, Eigen::Vector3d> current;
    for (int k = 0; k < s.contacts.size(); ++k) {
      current.emplace(s.contacts.indices[k], s.contacts.points[k]);
    }
    for (const auto& [idx, point] : current) {
      const auto it = previous.find(idx);
      if (it != previous.end()) {
        drift = std::max(drift, (point - it->second).norm());
      }
    }
    previous = std::move(current);
  }
  return drift;
}

RunSummary summarize(const Trajectory& traj, double body_length) {
  RunSummary out;
  out.cycles = traj.n_cycles;
  if (traj.samples.size() >= 2) {
    out.displacement_m = (traj.samples.back().com - traj.samples.front().com).norm();
  }
  out.bl_per_cycle = out.displacement_m / (body_length * std::max(1, traj.n_cycles));
  if (traj.samples.size() >= 3) {
    const TrackFit fit = track_fit(traj);
    out.track_r2 = fit.r2;
    out.heading_deg = fit.heading_deg;
  }
  out.max_contact_drift_m = contact_drift(traj);
  return out;
}

std::string format_surface_table(const std::vector<TableRow>& simulated_rows) {
  std::ostringstream os;
  os << "medium                      BL/cycle    reversed BL/cycle\n";
  os << "----------------------------------------------------------\n";
  char buf[128];
  for (const TableRow& row : simulated_rows) {
    std::snprintf(buf, sizeof(buf), "%-26s  %-10.3f  %-10.3f\n", row.medium.c_str(),
                  row.bl, row.bl_reversed);
    os << buf;
  }
  for (const SurfaceReference& ref : kSurfaceReferences) {
    std::snprintf(buf, sizeof(buf), "%-26s  %.2f+/-%.2f  %.2f+/-%.2f\n", ref.medium,
                  ref.bl_per_cycle, ref.bl_per_cycle_std, ref.reversed_bl_per_cycle,
                  ref.reversed_bl_per_cycle_std);
    os << buf;
  }
  return os.str();
}

}  // namespace sidewinder
