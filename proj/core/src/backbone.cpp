#include "sidewinder/backbone.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sidewinder/so3.hpp"

namespace sidewinder {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void ModelConfig::validate() const {
  require(n_links >= 2, "model.n_links must be >= 2 (got " + std::to_string(n_links) + ")");
  require(std::isfinite(delta_s) && delta_s > 0.0, "model.delta_s must be > 0");
  require(std::isfinite(body_length) && body_length > 0.0, "model.body_length must be > 0");
  require(std::isfinite(amplitude) && amplitude >= 0.0, "model.amplitude must be >= 0");
  require(std::isfinite(contact_tol) && contact_tol > 0.0, "model.contact_tol must be > 0");
  require(std::isfinite(dt) && dt > 0.0, "model.dt must be > 0");
  require(std::isfinite(cycle_period) && cycle_period > 0.0, "model.cycle_period must be > 0");
}

ShapeState actuation_cycle(double t, double amplitude) {
  return {amplitude * std::cos(t), amplitude * std::sin(t), t};
}

CurvaturePair curvature_at(const ShapeState& a, double s) {
  const double c = std::cos(s);
  const double sn = std::sin(s);
  return {a.a1 * c - a.a2 * sn, a.a1 * sn + a.a2 * c};
}

Eigen::Matrix3d hat(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return m;
}

Eigen::Matrix3d link_rotation(const CurvaturePair& c, double delta_s) {
  return rotation_exp(Eigen::Vector3d(0.0, c.alpha1, c.alpha2) * delta_s);
}

BackboneShape build_backbone(const ShapeState& a, const ModelConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a.a1) || !std::isfinite(a.a2)) {
    throw std::invalid_argument("build_backbone: non-finite actuation amplitudes");
  }

  BackboneShape shape;
  shape.state = a;
  shape.delta_s = cfg.delta_s;
  shape.link_length = cfg.link_length();
  shape.frames.resize(cfg.n_links);
  shape.arc_params.resize(cfg.n_links);
  shape.arc_params[0] = 0.0;

  for (int i = 1; i < cfg.n_links; ++i) {
    const Eigen::Matrix3d step = link_rotation(
        curvature_at(a, joint_station(i, cfg.delta_s)), joint_arc(i, cfg.delta_s));
    shape.frames[i].rotation = shape.frames[i - 1].rotation * step;
    shape.frames[i].position = shape.frames[i - 1].position +
                               shape.frames[i - 1].rotation.col(0) * shape.link_length;
    shape.arc_params[i] = i * cfg.delta_s;
  }
  return shape;
}

}  // namespace sidewinder
