#include "sabm/blockmatch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace sabm::blockmatch {

namespace {

std::uint64_t sum_sq_diff(const std::uint8_t* a, int a_stride,
                          const std::uint8_t* b, int b_stride, int w, int h) {
  std::uint64_t sum = 0;
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* ra = a + static_cast<std::size_t>(y) * a_stride;
    const std::uint8_t* rb = b + static_cast<std::size_t>(y) * b_stride;
    for (int x = 0; x < w; ++x) {
      const int d = int(ra[x]) - int(rb[x]);
      sum += static_cast<std::uint64_t>(d * d);
    }
  }
  return sum;
}

std::uint64_t sum_abs_diff(const std::uint8_t* a, int a_stride,
                           const std::uint8_t* b, int b_stride, int w, int h) {
  std::uint64_t sum = 0;
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* ra = a + static_cast<std::size_t>(y) * a_stride;
    const std::uint8_t* rb = b + static_cast<std::size_t>(y) * b_stride;
    for (int x = 0; x < w; ++x) {
      sum += static_cast<std::uint64_t>(std::abs(int(ra[x]) - int(rb[x])));
    }
  }
  return sum;
}

struct Best {
  std::uint64_t cost = 0;
  MotionVector vec;
  int l1 = 0;
  bool set = false;
};

// Candidate ordering: lower cost wins, then smaller |dp_h|+|dp_v|, then
// whichever was evaluated first.
void consider(Best& best, std::uint64_t cost, MotionVector v) {
  const int l1 = std::abs(v.dp_h) + std::abs(v.dp_v);
  if (!best.set || cost < best.cost || (cost == best.cost && l1 < best.l1)) {
    best = Best{cost, v, l1, true};
  }
}

struct BlockContext {
  const Frame* ref;
  const Frame* cur;
  int bs;
  Criterion criterion;
  int bx, by;  // block origin in the current frame
  std::int32_t points = 0;
  std::int64_t mults = 0;

  bool valid(MotionVector v) const {
    const int sx = bx - v.dp_h;
    const int sy = by - v.dp_v;
    return sx >= 0 && sy >= 0 && sx + bs <= ref->width && sy + bs <= ref->height;
  }

  std::uint64_t evaluate(MotionVector v) {
    const int sx = bx - v.dp_h;
    const int sy = by - v.dp_v;
    const std::uint8_t* a = cur->luma.data() + static_cast<std::size_t>(by) * cur->width + bx;
    const std::uint8_t* b = ref->luma.data() + static_cast<std::size_t>(sy) * ref->width + sx;
    ++points;
    if (criterion == Criterion::MSE) {
      mults += bs * bs;
      return sum_sq_diff(a, cur->width, b, ref->width, bs, bs);
    }
    return sum_abs_diff(a, cur->width, b, ref->width, bs, bs);
  }
};

MotionVector clamp_anchor(MotionVector a, int bx, int by, int bs, const Frame& ref) {
  // Keep the seeded source block inside the reference frame.
  a.dp_h = std::clamp(a.dp_h, bx - (ref.width - bs), bx);
  a.dp_v = std::clamp(a.dp_v, by - (ref.height - bs), by);
  return a;
}

void validate_common(const Frame& ref, const Frame& cur, const SearchConfig& cfg) {
  if (!ref.same_shape(cur)) {
    throw ShapeMismatch("reference and current frames differ in size");
  }
  if (cfg.block_size <= 0 || ref.width % cfg.block_size != 0 ||
      ref.height % cfg.block_size != 0) {
    throw InvalidDimensions("block size must divide both frame dimensions");
  }
  if (cfg.search_param_p < 1) {
    throw InvalidSearchParam("search parameter must be >= 1");
  }
  if (cfg.anchor_field) {
    const int cols = ref.width / cfg.block_size;
    const int rows = ref.height / cfg.block_size;
    if (cfg.anchor_field->cols != cols || cfg.anchor_field->rows != rows ||
        cfg.anchor_field->block_size != cfg.block_size) {
      throw ShapeMismatch("anchor field grid does not match the frame tiling");
    }
  }
}

// Runs fn(row) for every block row, split contiguously across threads.
// Each row writes disjoint slots, so any thread count yields identical
// results; totals are reduced afterwards in index order.
template <typename Fn>
void parallel_rows(int rows, int threads, Fn&& fn) {
  int n = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n = std::clamp(n, 1, std::max(1, rows));
  if (n == 1) {
    for (int r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (int t = 0; t < n; ++t) {
    const int begin = static_cast<int>(static_cast<std::int64_t>(rows) * t / n);
    const int end = static_cast<int>(static_cast<std::int64_t>(rows) * (t + 1) / n);
    pool.emplace_back([begin, end, &fn] {
      for (int r = begin; r < end; ++r) fn(r);
    });
  }
  for (auto& th : pool) th.join();
}

template <typename BlockFn>
SearchResult run_search(const Frame& ref, const Frame& cur, const SearchConfig& cfg,
                        BlockFn&& search_block) {
  const int bs = cfg.block_size;
  const int cols = cur.width / bs;
  const int rows = cur.height / bs;
  SearchResult out;
  out.field = MotionField(bs, cols, rows);
  out.stats.block_points.assign(static_cast<std::size_t>(cols) * rows, 0);
  out.stats.block_cost.assign(static_cast<std::size_t>(cols) * rows, 0.0);

  parallel_rows(rows, cfg.threads, [&](int r) {
    for (int c = 0; c < cols; ++c) {
      BlockContext ctx{&ref, &cur, bs, cfg.criterion, c * bs, r * bs};
      MotionVector anchor =
          cfg.anchor_field ? cfg.anchor_field->at(r, c) : MotionVector{};
      anchor = clamp_anchor(anchor, ctx.bx, ctx.by, bs, ref);
      const Best best = search_block(ctx, anchor);
      const std::size_t idx = static_cast<std::size_t>(r) * cols + c;
      out.field.vectors[idx] = best.vec;
      out.stats.block_points[idx] = ctx.points;
      out.stats.block_cost[idx] =
          static_cast<double>(best.cost) / (static_cast<double>(bs) * bs);
      // mults folded in after the parallel section via block_points
    }
  });

  const std::int64_t mults_per_point =
      cfg.criterion == Criterion::MSE ? static_cast<std::int64_t>(bs) * bs : 0;
  for (const std::int32_t p : out.stats.block_points) {
    out.stats.search_points += p;
    out.stats.multiplications += p * mults_per_point;
  }
  return out;
}

}  // namespace

CostResult block_cost(Criterion criterion, const BlockView& ref_block,
                      const BlockView& cur_block) {
  if (ref_block.width != cur_block.width || ref_block.height != cur_block.height ||
      ref_block.width <= 0 || ref_block.height <= 0) {
    throw ShapeMismatch("blocks differ in size");
  }
  const int n = ref_block.width * ref_block.height;
  if (criterion == Criterion::MSE) {
    const std::uint64_t sum = sum_sq_diff(ref_block.data, ref_block.stride,
                                          cur_block.data, cur_block.stride,
                                          ref_block.width, ref_block.height);
    return CostResult{static_cast<double>(sum) / n, n};
  }
  const std::uint64_t sum = sum_abs_diff(ref_block.data, ref_block.stride,
                                         cur_block.data, cur_block.stride,
                                         ref_block.width, ref_block.height);
  return CostResult{static_cast<double>(sum) / n, 0};
}

SearchResult full_search(const Frame& ref, const Frame& cur, const SearchConfig& cfg) {
  validate_common(ref, cur, cfg);
  const int p = cfg.search_param_p;
  return run_search(ref, cur, cfg, [&](BlockContext& ctx, MotionVector anchor) {
    Best best;
    for (int dy = -p; dy <= p; ++dy) {
      for (int dx = -p; dx <= p; ++dx) {
        const MotionVector v{anchor.dp_h + dx, anchor.dp_v + dy};
        if (!ctx.valid(v)) continue;
        consider(best, ctx.evaluate(v), v);
        if (cfg.early_exit && best.set && best.cost == 0) return best;
      }
    }
    return best;
  });
}

int tss_search_points(int search_param_p) {
  if (search_param_p < 1 || !std::has_single_bit(static_cast<unsigned>(search_param_p) + 1u)) {
    throw InvalidSearchParam("p must be >= 1 with p+1 a power of two");
  }
  return 8 * (std::bit_width(static_cast<unsigned>(search_param_p) + 1u) - 1) + 1;
}

SearchResult three_step_search(const Frame& ref, const Frame& cur, const SearchConfig& cfg) {
  validate_common(ref, cur, cfg);
  const int p = cfg.search_param_p;
  tss_search_points(p);  // validates the step structure
  return run_search(ref, cur, cfg, [&](BlockContext& ctx, MotionVector anchor) {
    Best best;
    consider(best, ctx.evaluate(anchor), anchor);  // center, once
    for (int step = (p + 1) / 2; step >= 1; step /= 2) {
      if (cfg.early_exit && best.cost == 0) break;
      const MotionVector center = best.vec;
      for (int dy = -step; dy <= step; dy += step) {
        for (int dx = -step; dx <= step; dx += step) {
          if (dx == 0 && dy == 0) continue;
          const MotionVector v{center.dp_h + dx, center.dp_v + dy};
          if (!ctx.valid(v)) continue;
          consider(best, ctx.evaluate(v), v);
        }
      }
    }
    return best;
  });
}

bool is_interior_block(int frame_w, int frame_h, int block_x_px, int block_y_px,
                       int block_size, MotionVector anchor, int search_param_p) {
  const int p = search_param_p;
  return block_x_px - (anchor.dp_h + p) >= 0 &&
         block_x_px - (anchor.dp_h - p) + block_size <= frame_w &&
         block_y_px - (anchor.dp_v + p) >= 0 &&
         block_y_px - (anchor.dp_v - p) + block_size <= frame_h;
}

CoarseToFineResult coarse_to_fine(const Frame& ref, const Frame& cur, int p_large,
                                  int p_small, Criterion criterion, int threads) {
  SearchConfig coarse_cfg;
  coarse_cfg.algorithm = Algorithm::ThreeStepSearch;
  coarse_cfg.block_size = 64;
  coarse_cfg.search_param_p = p_large;
  coarse_cfg.criterion = criterion;
  coarse_cfg.threads = threads;
  SearchResult coarse = three_step_search(ref, cur, coarse_cfg);

  // Every 4x4 block starts from its parent 64x64 vector.
  const int ratio = 64 / 4;
  MotionField anchors(4, cur.width / 4, cur.height / 4);
  for (int r = 0; r < anchors.rows; ++r) {
    for (int c = 0; c < anchors.cols; ++c) {
      anchors.at(r, c) = coarse.field.at(r / ratio, c / ratio);
    }
  }

  SearchConfig fine_cfg;
  fine_cfg.algorithm = Algorithm::ThreeStepSearch;
  fine_cfg.block_size = 4;
  fine_cfg.search_param_p = p_small;
  fine_cfg.criterion = criterion;
  fine_cfg.anchor_field = &anchors;
  fine_cfg.threads = threads;
  SearchResult fine = three_step_search(ref, cur, fine_cfg);

  return CoarseToFineResult{std::move(coarse.field), std::move(fine.field),
                            std::move(coarse.stats), std::move(fine.stats)};
}

void save_field_csv(const MotionField& field, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "row,col,dph,dpv\n";
  for (int r = 0; r < field.rows; ++r) {
    for (int c = 0; c < field.cols; ++c) {
      const MotionVector& v = field.at(r, c);
      out << r << "," << c << "," << v.dp_h << "," << v.dp_v << "\n";
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

MotionField load_field_csv(const std::string& path, int block_size) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "row,col,dph,dpv") {
    throw ParseError(path + ":1: bad motion field header");
  }
  struct Entry {
    int r, c, h, v;
  };
  std::vector<Entry> entries;
  int rows = 0, cols = 0, lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    Entry e{};
    if (!(ss >> e.r >> e.c >> e.h >> e.v)) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": malformed row");
    }
    rows = std::max(rows, e.r + 1);
    cols = std::max(cols, e.c + 1);
    entries.push_back(e);
  }
  MotionField field(block_size, cols, rows);
  if (entries.size() != field.vectors.size()) {
    throw ParseError(path + ": incomplete motion field");
  }
  for (const Entry& e : entries) field.at(e.r, e.c) = MotionVector{e.h, e.v};
  return field;
}

}  // namespace sabm::blockmatch
