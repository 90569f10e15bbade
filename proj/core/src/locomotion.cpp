#include "sidewinder/locomotion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "sidewinder/metrics.hpp"
#include "sidewinder/so3.hpp"

namespace sidewinder {

ContactSet find_contacts(const BackboneShape& shape, const WorldPose& pose, double tol) {
  ContactSet set;
  const int n = shape.size();
  std::vector<Eigen::Vector3d> world(n);
  double z_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    world[i] = pose.rotation * shape.frames[i].position + pose.position;
    z_min = std::min(z_min, world[i].z());
  }
  set.ground_z = z_min;
  for (int i = 0; i < n; ++i) {
    if (world[i].z() <= z_min + tol) {
      set.indices.push_back(i);
      set.points.push_back(world[i]);
      set.r_vectors.push_back(shape.frames[i].position);
    }
  }
  return set;
}

Eigen::Matrix2d curvature_jacobian(double s) {
  const double c = std::cos(s);
  const double sn = std::sin(s);
  Eigen::Matrix2d j;
  j << c, -sn,
       sn, c;
  return j;
}

Eigen::Matrix<double, 3, 2> shape_jacobian(const BackboneShape& shape, int link_index) {
  if (link_index < 0 || link_index >= shape.size()) {
    throw std::out_of_range("shape_jacobian: link index " + std::to_string(link_index) +
                            " out of range");
  }

  Eigen::Matrix<double, 3, 2> jac = Eigen::Matrix<double, 3, 2>::Zero();
  const double ds = shape.delta_s;
  const Eigen::Vector3d p_i = shape.frames[link_index].position;

  // Joint m rotates everything downstream of node m; its contribution is
  // the joint's amplitude-to-axis rate crossed with the lever arm from
  // node m. The rate passes through the exponential's right Jacobian, so
  // the assembly is exact for the discrete chain at finite delta_s.
  for (int m = 1; m < link_index; ++m) {
    const double station = joint_station(m, ds);
    const double arc = joint_arc(m, ds);
    const CurvaturePair c = curvature_at(shape.state, station);
    const Eigen::Vector3d u = Eigen::Vector3d(0.0, c.alpha1, c.alpha2) * arc;

    Eigen::Matrix<double, 3, 2> du_da;
    const double cs = std::cos(station);
    const double sn = std::sin(station);
    du_da << 0.0, 0.0,
             cs, -sn,
             sn, cs;
    du_da *= arc;

    const Eigen::Matrix<double, 3, 2> axis_rates =
        shape.frames[m].rotation * (so3_right_jacobian(u) * du_da);
    const Eigen::Vector3d lever = p_i - shape.frames[m].position;
    jac.col(0) += axis_rates.col(0).cross(lever);
    jac.col(1) += axis_rates.col(1).cross(lever);
  }
  return jac;
}

Eigen::Matrix<double, 3, 6> point_velocity_jacobian(const Eigen::Vector3d& point) {
  Eigen::Matrix<double, 3, 6> j;
  j.leftCols<3>() = Eigen::Matrix3d::Identity();
  j.rightCols<3>() = -hat(point);
  return j;
}

VelocitySolve solve_body_velocity(const ContactSet& contacts, const BackboneShape& shape,
                                  const ActuationRate& a_rate) {
  const int n = contacts.size();
  if (n < 1) throw std::invalid_argument("solve_body_velocity: empty contact set");

  Eigen::MatrixXd a(3 * n, 6);
  Eigen::VectorXd b(3 * n);
  const Eigen::Vector2d da(a_rate.da1, a_rate.da2);
  for (int k = 0; k < n; ++k) {
    a.block<3, 6>(3 * k, 0) = point_velocity_jacobian(contacts.r_vectors[k]);
    b.segment<3>(3 * k) = -(shape_jacobian(shape, contacts.indices[k]) * da);
  }

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  const Eigen::VectorXd x = cod.solve(b);

  VelocitySolve out;
  out.gdot.linear = x.head<3>();
  out.gdot.angular = x.tail<3>();
  out.residual = (a * x - b).norm();

  // Contacts collinear through the tail origin leave the rotation about
  // that line unconstrained.
  Eigen::MatrixXd angular_block(3 * n, 3);
  for (int k = 0; k < n; ++k) {
    angular_block.block<3, 3>(3 * k, 0) = -hat(contacts.r_vectors[k]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(angular_block);
  const double sigma_max = svd.singularValues()(0);
  const double threshold = std::max(sigma_max, 1.0) * 1e-10;
  out.degenerate = svd.singularValues()(2) < threshold;
  return out;
}

WorldPose integrate_pose(const WorldPose& pose, const BodyVelocity& gdot, double dt) {
  const Eigen::Vector3d u = gdot.angular * dt;
  WorldPose out;
  out.rotation = polar_project(pose.rotation * rotation_exp(u));
  out.position = pose.position + pose.rotation * (so3_left_jacobian(u) * (gdot.linear * dt));
  return out;
}

namespace {

bool finite(const Eigen::Vector3d& v) { return v.allFinite(); }

}  // namespace

Trajectory simulate(const ModelConfig& cfg, const GaitParams& g, int n_cycles,
                    SignalMode mode) {
  cfg.validate();
  g.validate();
  if (n_cycles < 1) throw std::invalid_argument("simulate: n_cycles must be >= 1");

  // Snap the step so cycle boundaries land exactly on samples.
  const int steps_per_cycle = std::max(1, static_cast<int>(std::lround(cfg.cycle_period / cfg.dt)));
  const double dt = cfg.cycle_period / steps_per_cycle;
  const int n_steps = steps_per_cycle * n_cycles;
  const double phase_rate = 2.0 * M_PI / cfg.cycle_period;

  Trajectory traj;
  traj.dt = dt;
  traj.n_cycles = n_cycles;
  traj.samples.reserve(n_steps + 1);
  for (int c = 0; c <= n_cycles; ++c) traj.cycle_marks.push_back(c * steps_per_cycle);

  WorldPose pose;
  PressureState pressures;  // square mode starts deflated

  for (int k = 0; k <= n_steps; ++k) {
    const double t = k * dt;

    ShapeState state;
    ActuationRate rate;
    std::array<int, 4> u{};
    if (mode == SignalMode::kIdeal) {
      const IdealSignal sig = ideal_shape_signal(phase_rate * t, g);
      state = sig.state;
      rate = {sig.rate.da1 * phase_rate, sig.rate.da2 * phase_rate};
    } else {
      u = valve_commands(t, g);
      state = pressures_to_shape(pressures, g.amplitude);
      rate = {g.amplitude * ((u[0] - pressures.p[0]) - (u[2] - pressures.p[2])) / g.time_constant,
              g.amplitude * ((u[1] - pressures.p[1]) - (u[3] - pressures.p[3])) / g.time_constant};
    }

    const BackboneShape shape = build_backbone(state, cfg);
    const ContactSet contacts = find_contacts(shape, pose, cfg.contact_tol);
    const VelocitySolve solve = solve_body_velocity(contacts, shape, rate);

    TrajectorySample sample;
    sample.time = t;
    sample.pose = pose;
    sample.shape = state;
    sample.a_rate = rate;
    sample.body_vel = solve.gdot;
    sample.contacts = contacts;
    sample.com = center_of_mass(shape, pose);
    sample.degenerate = solve.degenerate;
    traj.any_degenerate = traj.any_degenerate || solve.degenerate;
    traj.samples.push_back(std::move(sample));

    if (!finite(pose.position) || !finite(solve.gdot.linear) || !finite(solve.gdot.angular)) {
      throw std::runtime_error("simulate: non-finite state at t = " + std::to_string(t));
    }

    if (k < n_steps) {
      pose = integrate_pose(pose, solve.gdot, dt);
      if (mode == SignalMode::kSquare) {
        pressures = pressure_step(pressures, u, dt, g.time_constant);
      }
    }
  }
  return traj;
}

}  // namespace sidewinder
