#pragma once

#include <vector>

#include <Eigen/Core>

#include "sidewinder/backbone.hpp"
#include "sidewinder/gait.hpp"

namespace sidewinder {

/// World-frame pose of the tail link.
struct WorldPose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
};

/// Body-frame velocity of the tail link.
struct BodyVelocity {
  Eigen::Vector3d linear = Eigen::Vector3d::Zero();   ///< [m/s]
  Eigen::Vector3d angular = Eigen::Vector3d::Zero();  ///< [rad/s]
};

/// Links currently resting on the ground plane.
struct ContactSet {
  std::vector<int> indices;              ///< link indices, ascending
  std::vector<Eigen::Vector3d> points;   ///< world positions
  std::vector<Eigen::Vector3d> r_vectors;///< tail-frame vectors to the contacts
  double ground_z = 0.0;                 ///< world height of the lowest link

  int size() const { return static_cast<int>(indices.size()); }
};

struct VelocitySolve {
  BodyVelocity gdot;
  double residual = 0.0;   ///< stacked-constraint residual norm
  bool degenerate = false; ///< contact geometry leaves a rotation axis free
};

struct TrajectorySample {
  double time = 0.0;
  WorldPose pose;
  ShapeState shape;
  ActuationRate a_rate;
  BodyVelocity body_vel;
  ContactSet contacts;
  Eigen::Vector3d com = Eigen::Vector3d::Zero();
  bool degenerate = false;
};

/// Time series of one simulation run; uniform dt, strictly increasing time.
struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<int> cycle_marks;  ///< sample index of each cycle boundary
  double dt = 0.0;
  int n_cycles = 0;
  bool any_degenerate = false;
};

/// Links whose world height is within tol of the lowest link. The ground
/// plane sits at the current minimum height, so the set is never empty.
ContactSet find_contacts(const BackboneShape& shape, const WorldPose& pose, double tol);

/// Jacobian of the curvature pair with respect to the actuation
/// amplitudes at station s: the 2x2 rotation by s.
Eigen::Matrix2d curvature_jacobian(double s);

/// Sensitivity of a link's tail-frame position to the actuation
/// amplitudes, assembled over the upstream joints: each joint contributes
/// its axis rates (through the exponential's right Jacobian) crossed with
/// the lever arm from the joint's link node. Exact for the discrete chain.
///
/// Throws std::out_of_range for a bad link index.
Eigen::Matrix<double, 3, 2> shape_jacobian(const BackboneShape& shape, int link_index);

/// Maps the tail body velocity to the velocity of a tail-frame point:
/// [ I3 | M ] with M * w = w x point.
Eigen::Matrix<double, 3, 6> point_velocity_jacobian(const Eigen::Vector3d& point);

/// Solves the static-contact constraint for the tail body velocity:
/// stacks point_velocity_jacobian(r_i) * gdot = -shape_jacobian(i) * a_rate
/// over all contacts and returns the minimum-norm least-squares solution.
/// Flags a degenerate solve when the contacts are collinear through the
/// tail origin (some rotation axis is unconstrained).
VelocitySolve solve_body_velocity(const ContactSet& contacts, const BackboneShape& shape,
                                  const ActuationRate& a_rate);

/// Applies the closed-form screw motion of the body twist over dt,
/// right-multiplied onto the pose; the rotation is re-projected onto
/// SO(3) to bound drift over long runs.
WorldPose integrate_pose(const WorldPose& pose, const BodyVelocity& gdot, double dt);

/// Runs the gait for n_cycles: signal -> backbone -> contacts ->
/// constraint solve -> pose update, recording every sample. Square mode
/// threads the pressure dynamics and starts deflated.
///
/// Throws std::invalid_argument on bad inputs and std::runtime_error if
/// the state stops being finite.
Trajectory simulate(const ModelConfig& cfg, const GaitParams& g, int n_cycles,
                    SignalMode mode);

}  // namespace sidewinder
