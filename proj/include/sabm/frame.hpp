#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sabm/errors.hpp"

namespace sabm {

// Single-channel 8-bit luma raster. The pipeline tiles frames with 64x64
// and 4x4 macroblocks, so both dimensions must be positive multiples of 64.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> luma;

  Frame() = default;
  Frame(int w, int h);

  std::uint8_t at(int x, int y) const { return luma[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return luma[static_cast<std::size_t>(y) * width + x]; }

  bool same_shape(const Frame& other) const {
    return width == other.width && height == other.height;
  }
};

// Binary PGM (P5), 8-bit.
void write_pgm(const Frame& frame, const std::string& path);
Frame read_pgm(const std::string& path);

// Writes a raw 8-bit PGM from arbitrary dimensions (used for depth-map
// visualizations, which are block grids rather than pipeline frames).
void write_pgm_raw(int width, int height, const std::vector<std::uint8_t>& pixels,
                   const std::string& path);

}  // namespace sabm
