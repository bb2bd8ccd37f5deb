#include "ecosim/spatial_index.hpp"

#include <algorithm>
#include <cmath>

namespace ecosim {

void SpatialIndex::build(std::span<const Vec2> positions, const World& world,
                         double cell_size) {
  world_ = &world;
  positions_.assign(positions.begin(), positions.end());
  cells_x_ = std::max(1, static_cast<int>(std::floor(world.width() / cell_size)));
  cells_y_ = std::max(1, static_cast<int>(std::floor(world.height() / cell_size)));
  cell_w_ = world.width() / cells_x_;
  cell_h_ = world.height() / cells_y_;

  const std::size_t n_cells = static_cast<std::size_t>(cells_x_) * cells_y_;
  counts_.assign(n_cells, 0);
  for (const Vec2& p : positions_) ++counts_[cell_of(p)];

  // Exclusive prefix sum; starts_ then acts as a write cursor per cell.
  starts_.assign(n_cells + 1, 0);
  std::uint32_t total = 0;
  for (std::size_t c = 0; c < n_cells; ++c) {
    starts_[c] = total;
    total += counts_[c];
  }
  starts_[n_cells] = total;

  entries_.resize(positions_.size());
  std::vector<std::uint32_t> cursor(starts_.begin(), starts_.end() - 1);
  for (std::uint32_t i = 0; i < positions_.size(); ++i) {
    entries_[cursor[cell_of(positions_[i])]++] = i;
  }
  // Entries within a cell are already ascending because the fill visits
  // positions in order; queries rely on that to emit sorted results cheaply.
}

std::size_t SpatialIndex::cell_of(const Vec2& p) const {
  int cx = static_cast<int>(std::floor(p.x / cell_w_));
  int cy = static_cast<int>(std::floor(p.y / cell_h_));
  // Points sitting exactly on the far edge fold into the last cell.
  if (cx >= cells_x_) cx = cells_x_ - 1;
  if (cy >= cells_y_) cy = cells_y_ - 1;
  if (cx < 0) cx = 0;
  if (cy < 0) cy = 0;
  return static_cast<std::size_t>(cy) * cells_x_ + cx;
}

void SpatialIndex::query_radius(const Vec2& center, double radius,
                                std::vector<std::uint32_t>& out) const {
  out.clear();
  if (!world_ || entries_.empty() || radius < 0) return;

  // Cell ranges that cover the toroidal ball; when the ball spans the whole
  // axis, scan every cell once.
  int span_x = static_cast<int>(std::ceil(radius / cell_w_));
  int span_y = static_cast<int>(std::ceil(radius / cell_h_));
  const bool all_x = 2 * span_x + 1 >= cells_x_;
  const bool all_y = 2 * span_y + 1 >= cells_y_;
  const int cx = static_cast<int>(cell_of(center)) % cells_x_;
  const int cy = static_cast<int>(cell_of(center)) / cells_x_;

  const int x_begin = all_x ? 0 : cx - span_x;
  const int x_end = all_x ? cells_x_ - 1 : cx + span_x;
  const int y_begin = all_y ? 0 : cy - span_y;
  const int y_end = all_y ? cells_y_ - 1 : cy + span_y;

  for (int gy = y_begin; gy <= y_end; ++gy) {
    const int wy = ((gy % cells_y_) + cells_y_) % cells_y_;
    for (int gx = x_begin; gx <= x_end; ++gx) {
      const int wx = ((gx % cells_x_) + cells_x_) % cells_x_;
      const std::size_t c = static_cast<std::size_t>(wy) * cells_x_ + wx;
      for (std::uint32_t k = starts_[c]; k < starts_[c + 1]; ++k) {
        const std::uint32_t i = entries_[k];
        if (world_->toroidal_distance(center, positions_[i]) <= radius) {
          out.push_back(i);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
}

}  // namespace ecosim
