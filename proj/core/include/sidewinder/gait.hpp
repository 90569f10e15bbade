#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "sidewinder/backbone.hpp"

namespace sidewinder {

/// Documented actuator characteristics. Only normalized pressures enter
/// the kinematics; these record the physical scale they correspond to.
inline constexpr double kSupplyPressureKPa = 400.0;      ///< normalized pressure 1.0
inline constexpr double kContractionAtFullPressure = 0.30;
inline constexpr double kBodyDiameterM = 0.032;

enum class Direction { kForward, kReversed };

enum class SignalMode { kIdeal, kSquare };

/// Square-wave valve schedule and first-order pressurization parameters.
///
/// Canonical sidewinding uses high_time = low_time = inflation_time and
/// actuator_delay = inflation_time / 2, with the pairs offset by pi/2.
struct GaitParams {
  double inflation_time = 0.75;   ///< time to reach full pressure [s] (5 * time_constant)
  double high_time = 0.75;        ///< valve-on dwell [s]
  double low_time = 0.75;         ///< valve-off dwell [s]
  double actuator_delay = 0.375;  ///< delay between adjacent actuators [s]
  double pair_offset = 1.5707963267948966;  ///< phase offset between pairs [rad]
  double time_constant = 0.15;    ///< first-order pressurization constant [s]
  double amplitude = 1.0;         ///< curvature scale of the shape amplitudes
  Direction direction = Direction::kForward;

  /// Period of the repeating valve pattern [s].
  double wave_period() const { return high_time + low_time; }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Normalized actuator pressures in [0, 1] (1 is full supply pressure).
struct PressureState {
  std::array<double, 4> p{0.0, 0.0, 0.0, 0.0};
  double time = 0.0;  ///< [s]
};

/// Time derivatives of the shape amplitudes [1/s].
struct ActuationRate {
  double da1 = 0.0;
  double da2 = 0.0;
};

struct IdealSignal {
  ShapeState state;
  ActuationRate rate;  ///< per radian of phase
};

/// Binary valve command, periodic with period tau_high + tau_low once the
/// waveform has started; zero before phase_delay. Right-continuous at the
/// switching instants.
int square_wave(double time, double tau_high, double tau_low, double phase_delay);

/// Commands for the four actuators: actuator k runs the square wave
/// delayed by k * actuator_delay (indices reversed when direction is
/// kReversed). With canonical timing, opposing actuators (0,2) and (1,3)
/// run in antiphase.
std::array<int, 4> valve_commands(double time, const GaitParams& g);

/// Exact first-order update toward the commanded values over dt:
/// p' = u + (p - u) * exp(-dt / time_constant), clamped to [0, 1].
/// dt <= time_constant / 5 is enforced as a sampling guard.
PressureState pressure_step(const PressureState& p, const std::array<int, 4>& u,
                            double dt, double time_constant);

/// Shape amplitudes from opposing-pair pressure differences:
/// a1 = amplitude * (p0 - p2), a2 = amplitude * (p1 - p3).
ShapeState pressures_to_shape(const PressureState& p, double amplitude);

/// Ideal sinusoidal pair signals at phase t:
/// a1 = A cos(t), a2 = A cos(t - pair_offset), with their analytic
/// derivatives. Reversed direction flips the sign of the pair offset.
IdealSignal ideal_shape_signal(double t, const GaitParams& g);

/// Pressures at an absolute time, starting deflated at time zero and
/// stepping every valve switching event with the exact exponential
/// response. Used to reach the steady-state waveform without grid error.
PressureState exact_pressures(double time, const GaitParams& g);

/// Samples one steady-state cycle of the pair amplitudes (a1, a2).
/// Ideal mode lies on the circle of radius amplitude; square mode traces
/// the shark-fin loop. Requires n >= 8.
std::vector<Eigen::Vector2d> phase_samples(const GaitParams& g, int n, SignalMode mode);

}  // namespace sidewinder
