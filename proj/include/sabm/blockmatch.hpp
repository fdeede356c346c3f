#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sabm/frame.hpp"

namespace sabm::blockmatch {

enum class Algorithm { FullSearch, ThreeStepSearch };
enum class Criterion { MSE, MAD };

// Forward image motion of one block: the block's content in the current
// frame came from (x - dp_h, y - dp_v) in the reference frame.
struct MotionVector {
  int dp_h = 0;
  int dp_v = 0;
  bool operator==(const MotionVector&) const = default;
};

struct MotionField {
  int block_size = 0;
  int cols = 0;
  int rows = 0;
  std::vector<MotionVector> vectors;

  MotionField() = default;
  MotionField(int block_size_px, int cols_, int rows_)
      : block_size(block_size_px), cols(cols_), rows(rows_),
        vectors(static_cast<std::size_t>(cols_) * rows_) {}

  const MotionVector& at(int row, int col) const {
    return vectors[static_cast<std::size_t>(row) * cols + col];
  }
  MotionVector& at(int row, int col) {
    return vectors[static_cast<std::size_t>(row) * cols + col];
  }
};

struct SearchConfig {
  Algorithm algorithm = Algorithm::ThreeStepSearch;
  int block_size = 4;
  int search_param_p = 15;
  Criterion criterion = Criterion::MSE;
  const MotionField* anchor_field = nullptr;  // per-block search-center seeds
  bool early_exit = false;  // stop a block once cost reaches 0 (skews counts)
  int threads = 0;          // 0 = hardware concurrency
};

struct SearchStats {
  std::int64_t search_points = 0;
  std::int64_t multiplications = 0;
  std::vector<std::int32_t> block_points;  // evaluations per block, row-major
  std::vector<double> block_cost;          // best mean cost per block
};

struct SearchResult {
  MotionField field;
  SearchStats stats;
};

// A rectangular window into some 8-bit raster.
struct BlockView {
  const std::uint8_t* data = nullptr;
  int stride = 0;
  int width = 0;
  int height = 0;
};

struct CostResult {
  double cost = 0.0;         // mean squared/absolute difference
  int multiplications = 0;   // MSE: one per pixel; MAD: none
};

// Comparison criterion between two equally sized blocks.
CostResult block_cost(Criterion criterion, const BlockView& ref_block,
                      const BlockView& cur_block);

// Exhaustive search: for each block of `cur`, the displacement within
// anchor +- p (candidates whose source block leaves `ref` are skipped)
// minimizing the criterion. Ties break on smaller |dp_h|+|dp_v|, then on
// candidate raster order.
SearchResult full_search(const Frame& ref, const Frame& cur, const SearchConfig& cfg);

// Three-Step-Search: log2(p+1) rounds of 8 neighbors at halving step
// sizes around the running best, plus one center evaluation at the start.
SearchResult three_step_search(const Frame& ref, const Frame& cur, const SearchConfig& cfg);

// Search points per macroblock for the Three-Step-Search: 8*log2(p+1)+1.
// Throws InvalidSearchParam unless p >= 1 and p+1 is a power of two.
int tss_search_points(int search_param_p);

// True when every displacement the search pattern can probe keeps the
// source block inside the frame, i.e. the block never skips a candidate.
bool is_interior_block(int frame_w, int frame_h, int block_x_px, int block_y_px,
                       int block_size, MotionVector anchor, int search_param_p);

struct CoarseToFineResult {
  MotionField coarse;  // 64x64 field
  MotionField fine;    // 4x4 field, parent anchor plus refinement
  SearchStats coarse_stats;
  SearchStats fine_stats;
};

// 64x64 Three-Step-Search followed by a 4x4 correction pass anchored at
// each block's parent vector.
CoarseToFineResult coarse_to_fine(const Frame& ref, const Frame& cur,
                                  int p_large = 63, int p_small = 15,
                                  Criterion criterion = Criterion::MSE,
                                  int threads = 0);

// CSV dump: header `row,col,dph,dpv`, one block per line.
void save_field_csv(const MotionField& field, const std::string& path);
MotionField load_field_csv(const std::string& path, int block_size);

}  // namespace sabm::blockmatch
