#include "sabm/sensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sabm::sensor {

namespace {

// Interpolated sample at time t on the segment [a, b].
SensorSample lerp_sample(const SensorSample& a, const SensorSample& b, double t) {
  if (t == a.t) return a;
  if (t == b.t) return b;
  const double w = (t - a.t) / (b.t - a.t);
  SensorSample s;
  s.t = t;
  s.accel_h = a.accel_h + w * (b.accel_h - a.accel_h);
  s.accel_v = a.accel_v + w * (b.accel_v - a.accel_v);
  s.gyro_h = a.gyro_h + w * (b.gyro_h - a.gyro_h);
  s.gyro_v = a.gyro_v + w * (b.gyro_v - a.gyro_v);
  return s;
}

// Visits the piecewise-linear signal clipped to [t0, t1]: emits an
// interpolated point at t0, every sample strictly inside, and an
// interpolated point at t1.
template <typename Fn>
void walk_interval(const SensorTrace& trace, double t0, double t1, Fn&& visit) {
  if (!(t0 < t1)) {
    throw InsufficientSamples("interval is empty or reversed");
  }
  if (trace.size() < 2 || trace.front().t > t0 || trace.back().t < t1) {
    throw InsufficientSamples("trace does not cover the requested interval");
  }
  auto it = std::upper_bound(trace.begin(), trace.end(), t0,
                             [](double t, const SensorSample& s) { return t < s.t; });
  // it points at the first sample strictly after t0; the segment start is
  // the sample before it.
  const SensorSample* prev = &*(it - 1);
  visit(lerp_sample(*prev, it != trace.end() ? *it : *prev, t0));
  for (; it != trace.end() && it->t < t1; ++it) {
    visit(*it);
    prev = &*it;
  }
  if (it != trace.end()) {
    visit(lerp_sample(*prev, *it, t1));
  } else {
    // t1 == trace.back().t handled by the loop bound above.
    visit(trace.back());
  }
}

}  // namespace

std::pair<double, double> integrate_gyro(const SensorTrace& trace, double t0, double t1) {
  double th = 0.0, tv = 0.0;
  bool have_prev = false;
  SensorSample prev;
  walk_interval(trace, t0, t1, [&](const SensorSample& s) {
    if (have_prev) {
      const double dt = s.t - prev.t;
      th += 0.5 * (prev.gyro_h + s.gyro_h) * dt;
      tv += 0.5 * (prev.gyro_v + s.gyro_v) * dt;
    }
    prev = s;
    have_prev = true;
  });
  return {th, tv};
}

AccelIntegral integrate_accel(const SensorTrace& trace, double t0, double t1,
                              const Velocity& v0) {
  AccelIntegral out;
  Velocity vel = v0;
  bool have_prev = false;
  SensorSample prev;
  walk_interval(trace, t0, t1, [&](const SensorSample& s) {
    if (have_prev) {
      const double dt = s.t - prev.t;
      const Velocity next{vel.h + 0.5 * (prev.accel_h + s.accel_h) * dt,
                          vel.v + 0.5 * (prev.accel_v + s.accel_v) * dt};
      out.d_h += 0.5 * (vel.h + next.h) * dt;
      out.d_v += 0.5 * (vel.v + next.v) * dt;
      vel = next;
    }
    prev = s;
    have_prev = true;
  });
  out.exit_velocity = vel;
  return out;
}

CameraMotion motion_for_frame(const SensorTrace& trace, int frame_index,
                              double frame_rate_hz, Velocity& carry) {
  if (frame_index < 0 || !(frame_rate_hz > 0.0)) {
    throw InsufficientSamples("bad frame index or frame rate");
  }
  const double t0 = frame_index / frame_rate_hz;
  const double t1 = (frame_index + 1) / frame_rate_hz;
  const auto [theta_h, theta_v] = integrate_gyro(trace, t0, t1);
  const AccelIntegral acc = integrate_accel(trace, t0, t1, carry);
  carry = acc.exit_velocity;
  return CameraMotion{acc.d_h, acc.d_v, theta_h, theta_v};
}

void validate_trace(const SensorTrace& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (!(trace[i].t > trace[i - 1].t)) {
      throw ParseError("trace timestamps not strictly increasing at sample " +
                       std::to_string(i));
    }
  }
}

void save_trace_csv(const SensorTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "t,ax,ay,gx,gy\n";
  char line[256];
  for (const SensorSample& s : trace) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  s.t, s.accel_h, s.accel_v, s.gyro_h, s.gyro_v);
    out << line;
  }
  if (!out) throw IoError("write failed: " + path);
}

SensorTrace load_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ":1: missing header");
  if (line != "t,ax,ay,gx,gy") throw ParseError(path + ":1: unexpected header '" + line + "'");
  SensorTrace trace;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    SensorSample s;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    if (!(ss >> s.t >> s.accel_h >> s.accel_v >> s.gyro_h >> s.gyro_v)) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": malformed sample");
    }
    trace.push_back(s);
  }
  validate_trace(trace);
  return trace;
}

}  // namespace sabm::sensor
