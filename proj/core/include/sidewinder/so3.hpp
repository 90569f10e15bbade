#pragma once

#include <Eigen/Core>

namespace sidewinder {

/// Closed-form exponential of hat(u) (Rodrigues), with a second-order
/// Taylor form below theta = 1e-8 to avoid 0/0.
Eigen::Matrix3d rotation_exp(const Eigen::Vector3d& u);

/// Left Jacobian of SO(3): integrates a constant body twist's translation,
/// V(u) = I + (1-cos)/th^2 hat(u) + (th-sin)/th^3 hat(u)^2.
Eigen::Matrix3d so3_left_jacobian(const Eigen::Vector3d& u);

/// Right Jacobian of SO(3): exp(hat(u + d)) = exp(hat(u)) exp(hat(Jr(u) d)) + O(d^2).
Eigen::Matrix3d so3_right_jacobian(const Eigen::Vector3d& u);

/// Nearest proper rotation to R (polar projection via SVD).
Eigen::Matrix3d polar_project(const Eigen::Matrix3d& r);

}  // namespace sidewinder
