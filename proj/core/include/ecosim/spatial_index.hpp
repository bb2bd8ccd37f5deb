#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ecosim/world.hpp"

namespace ecosim {

// Uniform grid over the torus for radius queries. Entries are indices into
// the position span the index was built from; queries return exactly the
// entries within the toroidal radius, sorted ascending. Rebuild at step
// boundaries; the structure is read-only between rebuilds.
class SpatialIndex {
 public:
  SpatialIndex() = default;

  // cell_size is a target edge length; actual cells divide the world evenly.
  void build(std::span<const Vec2> positions, const World& world, double cell_size);

  // Appends all entries with toroidal_distance(center, pos) <= radius to out
  // (out is cleared first). The caller removes itself if it is an entry.
  void query_radius(const Vec2& center, double radius,
                    std::vector<std::uint32_t>& out) const;

  std::vector<std::uint32_t> query_radius(const Vec2& center, double radius) const {
    std::vector<std::uint32_t> out;
    query_radius(center, radius, out);
    return out;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::size_t cell_of(const Vec2& p) const;

  const World* world_ = nullptr;
  std::vector<Vec2> positions_;
  int cells_x_ = 0;
  int cells_y_ = 0;
  double cell_w_ = 0.0;
  double cell_h_ = 0.0;
  // CSR layout: starts_[c]..starts_[c+1] indexes entries_ for cell c.
  std::vector<std::uint32_t> starts_;
  std::vector<std::uint32_t> entries_;
  std::vector<std::uint32_t> counts_;  // scratch reused across rebuilds
};

}  // namespace ecosim
