#pragma once

#include <stdexcept>
#include <string>

namespace sabm {

// Base class for all toolkit failures so callers can catch one type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SABM_DEFINE_ERROR(Name)                            \
  class Name : public Error {                              \
   public:                                                 \
    explicit Name(const std::string& msg) : Error(msg) {}  \
  }

SABM_DEFINE_ERROR(DomainError);            // projection angle out of range, bad intrinsics
SABM_DEFINE_ERROR(DegenerateDepth);        // non-positive depth
SABM_DEFINE_ERROR(DegenerateMotion);       // displacement below threshold or zero baseline
SABM_DEFINE_ERROR(SignMismatch);           // displacement sign inconsistent with baseline
SABM_DEFINE_ERROR(InsufficientSamples);    // sensor trace does not cover the interval
SABM_DEFINE_ERROR(ShapeMismatch);          // frame/block/grid dimension mismatch
SABM_DEFINE_ERROR(InvalidSearchParam);     // search parameter not usable by the algorithm
SABM_DEFINE_ERROR(InvalidDimensions);      // dimensions violate a tiling contract
SABM_DEFINE_ERROR(TooFewFrames);           // sequence too short for the requested phase
SABM_DEFINE_ERROR(GridMismatch);           // depth map grid does not match the frame tiling
SABM_DEFINE_ERROR(ExcessiveDisplacement);  // camera moved too far for a stable render
SABM_DEFINE_ERROR(UnsupportedCriterion);   // operation defined only for a specific criterion
SABM_DEFINE_ERROR(IoError);                // file read/write failure
SABM_DEFINE_ERROR(ParseError);             // malformed spec/config file, message carries line number

#undef SABM_DEFINE_ERROR

}  // namespace sabm
