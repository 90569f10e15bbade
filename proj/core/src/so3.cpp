#include "sidewinder/so3.hpp"

#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "sidewinder/backbone.hpp"

namespace sidewinder {

namespace {
constexpr double kSmallAngle = 1e-8;
constexpr double kSeriesAngle = 1e-4;
}  // namespace

Eigen::Matrix3d rotation_exp(const Eigen::Vector3d& u) {
  const double theta = u.norm();
  const Eigen::Matrix3d k = hat(u);
  if (theta < kSmallAngle) {
    return Eigen::Matrix3d::Identity() + k + 0.5 * k * k;
  }
  const double s = std::sin(theta) / theta;
  const double c = (1.0 - std::cos(theta)) / (theta * theta);
  return Eigen::Matrix3d::Identity() + s * k + c * k * k;
}

Eigen::Matrix3d so3_left_jacobian(const Eigen::Vector3d& u) {
  const double theta = u.norm();
  const Eigen::Matrix3d k = hat(u);
  if (theta < kSeriesAngle) {
    return Eigen::Matrix3d::Identity() + 0.5 * k + (1.0 / 6.0) * k * k;
  }
  const double t2 = theta * theta;
  const double a = (1.0 - std::cos(theta)) / t2;
  const double b = (theta - std::sin(theta)) / (t2 * theta);
  return Eigen::Matrix3d::Identity() + a * k + b * k * k;
}

Eigen::Matrix3d so3_right_jacobian(const Eigen::Vector3d& u) {
  const double theta = u.norm();
  const Eigen::Matrix3d k = hat(u);
  if (theta < kSeriesAngle) {
    return Eigen::Matrix3d::Identity() - 0.5 * k + (1.0 / 6.0) * k * k;
  }
  const double t2 = theta * theta;
  const double a = (1.0 - std::cos(theta)) / t2;
  const double b = (theta - std::sin(theta)) / (t2 * theta);
  return Eigen::Matrix3d::Identity() - a * k + b * k * k;
}

Eigen::Matrix3d polar_project(const Eigen::Matrix3d& r) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d out = svd.matrixU() * svd.matrixV().transpose();
  if (out.determinant() < 0.0) {
    Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
    flip(2, 2) = -1.0;
    out = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return out;
}

}  // namespace sidewinder
