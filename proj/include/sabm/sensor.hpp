#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sabm/errors.hpp"

namespace sabm::sensor {

// One synchronized motion sensor reading. Accelerations in m/s^2, angular
// velocities in rad/s, timestamp in seconds.
struct SensorSample {
  double t = 0.0;
  double accel_h = 0.0;
  double accel_v = 0.0;
  double gyro_h = 0.0;
  double gyro_v = 0.0;
};

using SensorTrace = std::vector<SensorSample>;

struct Velocity {
  double h = 0.0;
  double v = 0.0;
};

// Camera motion over one frame interval.
struct CameraMotion {
  double d_h = 0.0;      // translation, meters
  double d_v = 0.0;
  double theta_h = 0.0;  // rotation, radians
  double theta_v = 0.0;
};

struct AccelIntegral {
  double d_h = 0.0;
  double d_v = 0.0;
  Velocity exit_velocity;
};

// Trapezoidal integral of the gyro channels over [t0, t1]. Samples are
// treated as a piecewise-linear signal; t0/t1 falling between samples are
// interpolated. Throws InsufficientSamples when the trace does not cover
// the interval.
std::pair<double, double> integrate_gyro(const SensorTrace& trace, double t0, double t1);

// Double trapezoidal integration of the accelerometer channels over
// [t0, t1]: velocities are accumulated by the trapezoidal rule at sample
// instants starting from v0, displacement is the trapezoidal integral of
// those velocities. Exit velocity is returned for chaining across frames.
AccelIntegral integrate_accel(const SensorTrace& trace, double t0, double t1,
                              const Velocity& v0);

// Camera motion for the interval between frame `frame_index` and the next
// one. `carry` holds the accumulated velocity and is updated in place.
CameraMotion motion_for_frame(const SensorTrace& trace, int frame_index,
                              double frame_rate_hz, Velocity& carry);

// Plain-text trace file: header `t,ax,ay,gx,gy`, one sample per line.
void save_trace_csv(const SensorTrace& trace, const std::string& path);
SensorTrace load_trace_csv(const std::string& path);

// Throws ParseError unless timestamps are strictly increasing.
void validate_trace(const SensorTrace& trace);

}  // namespace sabm::sensor
