#pragma once

#include <vector>

#include "ecosim/config.hpp"
#include "ecosim/rng.hpp"
#include "ecosim/types.hpp"

namespace ecosim {

// A point on the torus. Coordinates are kept reduced to [0, dim) by the
// functions that produce them.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// Which goods a point yields.
struct ResourceSet {
  bool food = false;
  bool mineral = false;

  bool contains(ResourceKind r) const {
    return r == ResourceKind::Food ? food : mineral;
  }
  bool empty() const { return !food && !mineral; }

  friend bool operator==(const ResourceSet&, const ResourceSet&) = default;
};

// Axis-aligned resource field, fully inside the world (never wraps an edge).
struct Patch {
  ResourceKind kind = ResourceKind::Food;
  Vec2 origin;
  double width = 0.0;
  double height = 0.0;

  // Half-open containment: the left/top edges belong to the patch.
  bool contains(const Vec2& p) const {
    return p.x >= origin.x && p.x < origin.x + width && p.y >= origin.y &&
           p.y < origin.y + height;
  }

  bool overlaps(const Patch& o) const {
    return origin.x < o.origin.x + o.width && o.origin.x < origin.x + width &&
           origin.y < o.origin.y + o.height && o.origin.y < origin.y + height;
  }

  friend bool operator==(const Patch&, const Patch&) = default;
};

class World {
 public:
  World(double width, double height, Layout layout, std::vector<Patch> patches)
      : width_(width), height_(height), layout_(layout),
        patches_(std::move(patches)) {}

  double width() const { return width_; }
  double height() const { return height_; }
  Layout layout() const { return layout_; }
  const std::vector<Patch>& patches() const { return patches_; }

  // Reduces a point modulo the world dimensions.
  Vec2 wrap(Vec2 p) const;

  // Euclidean distance with per-axis wraparound deltas min(|d|, dim - |d|).
  double toroidal_distance(const Vec2& a, const Vec2& b) const;

  // Goods available at p. Homogeneous layouts yield both goods everywhere.
  ResourceSet resources_at(const Vec2& p) const;

 private:
  double width_;
  double height_;
  Layout layout_;
  std::vector<Patch> patches_;
};

// Builds the world for a scenario. Heterogeneous layouts place the requested
// patches uniformly at random, disjoint across kinds, retrying up to a fixed
// budget before switching to a deterministic corner arrangement. Throws
// ConfigError when the geometry cannot fit at all.
World generate_world(const ScenarioConfig& config, RngStream& rng);

}  // namespace ecosim
