#pragma once

#include <vector>

#include <Eigen/Core>

namespace sidewinder {

/// Discretization and body geometry of the n-link backbone model.
///
/// The backbone parameter s is dimensionless; the body carries
/// n_links * delta_s of it (2*pi by default, one helical wave).
/// Physical positions are scaled so the chain has length body_length.
struct ModelConfig {
  int n_links = 30;                ///< number of rigid links (>= 2)
  double delta_s = 0.20943951023931953;  ///< backbone parameter per link (2*pi/30)
  double body_length = 0.91;       ///< total body length [m]
  double amplitude = 1.0;  ///< curvature scale of the pair amplitudes; the config
                           ///< layer keeps GaitParams::amplitude equal to it
  double contact_tol = 0.002;      ///< height band for ground-contact detection [m]
  double dt = 0.003;               ///< integration step [s]
  double cycle_period = 1.5;       ///< duration of one gait cycle [s]

  double span() const { return n_links * delta_s; }
  double link_length() const { return body_length / n_links; }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// The two actuation-pair amplitudes and the gait phase that produced them.
struct ShapeState {
  double a1 = 0.0;
  double a2 = 0.0;
  double t = 0.0;  ///< gait phase [rad]; zero when not driven by a phase signal
};

/// Curvature and bicurvature at one backbone station.
struct CurvaturePair {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

/// Orientation and position of one link, expressed in the tail frame.
struct LinkFrame {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
};

/// The built kinematic chain: one frame per link, tail first.
///
/// frames[0] is the identity (the tail link is the body-frame reference);
/// positions are the link start nodes, spaced exactly link_length apart.
struct BackboneShape {
  std::vector<LinkFrame> frames;
  std::vector<double> arc_params;  ///< s_i = i * delta_s
  ShapeState state;                ///< amplitudes the shape was built from
  double delta_s = 0.0;
  double link_length = 0.0;

  int size() const { return static_cast<int>(frames.size()); }
};

/// Backbone station whose curvature drives joint i (i >= 1, between
/// links i-1 and i). Joints sit at s = i * delta_s, midway between the
/// adjacent link centers; the first joint also absorbs the half link
/// between the tail frame and the tail link's center.
inline double joint_station(int i, double delta_s) {
  return i == 1 ? 0.75 * delta_s : i * delta_s;
}

/// Backbone parameter spanned by joint i's rotation.
inline double joint_arc(int i, double delta_s) {
  return i == 1 ? 1.5 * delta_s : delta_s;
}

/// Sinusoidal actuation cycle: (amplitude*cos(t), amplitude*sin(t)).
ShapeState actuation_cycle(double t, double amplitude);

/// Curvature/bicurvature at backbone station s: the amplitude vector
/// rotated by s. Norm is preserved exactly.
CurvaturePair curvature_at(const ShapeState& a, double s);

/// Skew-symmetric matrix of v, so that hat(v) * w == v.cross(w).
Eigen::Matrix3d hat(const Eigen::Vector3d& v);

/// Rotation advancing a link frame along the backbone by delta_s:
/// exp(hat((0, alpha1, alpha2)) * delta_s), evaluated in closed form.
Eigen::Matrix3d link_rotation(const CurvaturePair& c, double delta_s);

/// Builds the n-link chain for one actuation state.
///
/// frames[0] = identity; each subsequent frame applies its joint rotation
/// (curvature sampled per joint_station/joint_arc) and advances the
/// position along the previous link's local x axis by link_length. Node
/// positions converge at O(delta_s^2) to the continuum curve anchored at
/// the tail frame.
///
/// Throws std::invalid_argument on an invalid config or non-finite state.
BackboneShape build_backbone(const ShapeState& a, const ModelConfig& cfg);

}  // namespace sidewinder
