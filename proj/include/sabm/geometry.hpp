#pragma once

#include "sabm/errors.hpp"

namespace sabm::geometry {

// Pinhole camera described by its focal length in pixels.
struct CameraIntrinsics {
  double focal_length_px = 0.0;
};

// Motion vector components in pixels, horizontal and vertical.
struct PixelDisplacement {
  double dp_h = 0.0;
  double dp_v = 0.0;
};

// Image displacement of a ray at view angle `alpha` when the camera rotates
// by `theta`:  f*tan(alpha+theta) - f*tan(alpha).
// Throws DomainError when either ray angle reaches +-pi/2.
double rotational_mv_exact(const CameraIntrinsics& intr, double alpha_rad, double theta_rad);

// Small-angle form of the rotational displacement: f*theta.
double rotational_mv_small_angle(const CameraIntrinsics& intr, double theta_rad);

// Image displacement of a point at depth z under camera translation d: f*d/z.
// Throws DegenerateDepth when z <= 0.
double translational_mv(const CameraIntrinsics& intr, double d_m, double z_m);

// Inversion of translational_mv: depth from an observed displacement, f*d/dp.
// Throws DegenerateMotion when |dp| < min_displacement_px or d == 0,
// SignMismatch when dp and d disagree in sign.
double depth_from_mv(const CameraIntrinsics& intr, double d_m, double dp_px,
                     double min_displacement_px = 1.0);

}  // namespace sabm::geometry
