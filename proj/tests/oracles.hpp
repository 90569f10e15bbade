// Independent reference implementations the tests check the library
// against. Everything here is deliberately simple and derived from first
// principles, not from the code under test.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sidewinder/backbone.hpp"

namespace oracles {

/// Truncated power series of the matrix exponential, terms k = 0..n_terms.
inline Eigen::Matrix3d expm_series(const Eigen::Matrix3d& m, int n_terms = 20) {
  Eigen::Matrix3d sum = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d term = Eigen::Matrix3d::Identity();
  for (int k = 1; k <= n_terms; ++k) {
    term = term * m / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

inline Eigen::Matrix2d rot2d(double theta) {
  Eigen::Matrix2d r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

/// Central finite difference of a vector map.
template <typename F>
Eigen::MatrixXd central_jacobian(const F& f, const Eigen::VectorXd& x, double h) {
  const Eigen::VectorXd f0 = f(x);
  Eigen::MatrixXd jac(f0.size(), x.size());
  for (int c = 0; c < x.size(); ++c) {
    Eigen::VectorXd hi = x, lo = x;
    hi(c) += h;
    lo(c) -= h;
    jac.col(c) = (f(hi) - f(lo)) / (2.0 * h);
  }
  return jac;
}

/// Dense RK4 integration of the frame ODE R' = R hat(w(s)),
/// p' = R e_x * (body_length / span), from R(0) = I, p(0) = 0.
/// Returns positions at the node stations s_i = i * delta_s.
inline std::vector<Eigen::Vector3d> continuum_nodes(const sidewinder::ShapeState& a,
                                                    const sidewinder::ModelConfig& cfg,
                                                    int substeps_per_link) {
  using Eigen::Matrix3d;
  using Eigen::Vector3d;
  const double h = cfg.delta_s / substeps_per_link;
  const double scale = cfg.body_length / cfg.span();
  auto omega = [&](double s) {
    const sidewinder::CurvaturePair c = sidewinder::curvature_at(a, s);
    return Vector3d(0.0, c.alpha1, c.alpha2);
  };
  Matrix3d r = Matrix3d::Identity();
  Vector3d p = Vector3d::Zero();
  std::vector<Vector3d> nodes;
  nodes.push_back(p);
  double s = 0.0;
  for (int i = 0; i < cfg.n_links - 1; ++i) {
    for (int k = 0; k < substeps_per_link; ++k) {
      const Matrix3d k1r = r * sidewinder::hat(omega(s));
      const Vector3d k1p = r.col(0) * scale;
      const Matrix3d r2 = r + 0.5 * h * k1r;
      const Matrix3d k2r = r2 * sidewinder::hat(omega(s + 0.5 * h));
      const Vector3d k2p = r2.col(0) * scale;
      const Matrix3d r3 = r + 0.5 * h * k2r;
      const Matrix3d k3r = r3 * sidewinder::hat(omega(s + 0.5 * h));
      const Vector3d k3p = r3.col(0) * scale;
      const Matrix3d r4 = r + h * k3r;
      const Matrix3d k4r = r4 * sidewinder::hat(omega(s + h));
      const Vector3d k4p = r4.col(0) * scale;
      r += h / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
      p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
      s += h;
    }
    nodes.push_back(p);
  }
  return nodes;
}

/// Steady-state response of a first-order system driven by a square wave
/// that is high on [0, tau_high) of each period (shifted by delay):
/// the closed-form periodic solution evaluated at absolute time t.
inline double periodic_first_order(double t, double tau_high, double tau_low, double delay,
                                   double time_constant) {
  const double period = tau_high + tau_low;
  double local = std::fmod(t - delay, period);
  if (local < 0.0) local += period;
  const double eh = std::exp(-tau_high / time_constant);
  const double el = std::exp(-tau_low / time_constant);
  const double p0 = el * (1.0 - eh) / (1.0 - eh * el);
  if (local < tau_high) {
    return 1.0 + (p0 - 1.0) * std::exp(-local / time_constant);
  }
  const double p_high = 1.0 + (p0 - 1.0) * eh;
  return p_high * std::exp(-(local - tau_high) / time_constant);
}

/// Winding number of a closed polyline around the origin.
inline int winding_number(const std::vector<Eigen::Vector2d>& points) {
  double total = 0.0;
  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d& a = points[i];
    const Eigen::Vector2d& b = points[(i + 1) % n];
    total += std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b));
  }
  return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

}  // namespace oracles
