#include "sabm/geometry.hpp"

#include <cmath>

namespace sabm::geometry {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

void require_intrinsics(const CameraIntrinsics& intr) {
  if (!(intr.focal_length_px > 0.0) || !std::isfinite(intr.focal_length_px)) {
    throw DomainError("focal length must be positive and finite");
  }
}

}  // namespace

double rotational_mv_exact(const CameraIntrinsics& intr, double alpha_rad, double theta_rad) {
  require_intrinsics(intr);
  const double exit_angle = alpha_rad + theta_rad;
  if (std::abs(alpha_rad) >= kHalfPi || std::abs(exit_angle) >= kHalfPi) {
    throw DomainError("ray angle reaches +-pi/2, projection undefined");
  }
  return intr.focal_length_px * (std::tan(exit_angle) - std::tan(alpha_rad));
}

double rotational_mv_small_angle(const CameraIntrinsics& intr, double theta_rad) {
  require_intrinsics(intr);
  return intr.focal_length_px * theta_rad;
}

double translational_mv(const CameraIntrinsics& intr, double d_m, double z_m) {
  require_intrinsics(intr);
  if (!(z_m > 0.0)) {
    throw DegenerateDepth("depth must be positive");
  }
  return intr.focal_length_px * d_m / z_m;
}

double depth_from_mv(const CameraIntrinsics& intr, double d_m, double dp_px,
                     double min_displacement_px) {
  require_intrinsics(intr);
  if (d_m == 0.0 || std::abs(dp_px) < min_displacement_px) {
    throw DegenerateMotion("displacement below threshold or zero baseline");
  }
  if ((dp_px > 0.0) != (d_m > 0.0)) {
    throw SignMismatch("displacement sign inconsistent with translation sign");
  }
  return intr.focal_length_px * d_m / dp_px;
}

}  // namespace sabm::geometry
