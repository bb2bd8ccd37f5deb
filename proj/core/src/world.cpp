#include "ecosim/world.hpp"

#include <cmath>
#include <string>

namespace ecosim {

Vec2 World::wrap(Vec2 p) const {
  p.x = std::fmod(p.x, width_);
  if (p.x < 0) p.x += width_;
  p.y = std::fmod(p.y, height_);
  if (p.y < 0) p.y += height_;
  return p;
}

double World::toroidal_distance(const Vec2& a, const Vec2& b) const {
  double dx = std::fabs(a.x - b.x);
  if (dx > width_ - dx) dx = width_ - dx;
  double dy = std::fabs(a.y - b.y);
  if (dy > height_ - dy) dy = height_ - dy;
  return std::sqrt(dx * dx + dy * dy);
}

ResourceSet World::resources_at(const Vec2& p) const {
  if (layout_ == Layout::Homogeneous) return {true, true};
  ResourceSet found;
  for (const Patch& patch : patches_) {
    if (patch.contains(p)) {
      if (patch.kind == ResourceKind::Food)
        found.food = true;
      else
        found.mineral = true;
    }
  }
  return found;
}

namespace {

constexpr int kPlacementAttempts = 1000;

bool overlaps_other_kind(const Patch& candidate, const std::vector<Patch>& placed) {
  for (const Patch& p : placed) {
    if (p.kind != candidate.kind && p.overlaps(candidate)) return true;
  }
  return false;
}

// Deterministic last resort: food fields tile from the origin corner, mineral
// fields from the opposite corner.
std::vector<Patch> corner_layout(const ScenarioConfig& config) {
  const PatchSpec& spec = config.patches;
  std::vector<Patch> patches;
  for (int i = 0; i < spec.food_count; ++i) {
    patches.push_back({ResourceKind::Food,
                       {i * spec.food_size, 0.0},
                       spec.food_size,
                       spec.food_size});
  }
  for (int i = 0; i < spec.mineral_count; ++i) {
    patches.push_back({ResourceKind::Mineral,
                       {config.world_width - (i + 1) * spec.mineral_size,
                        config.world_height - spec.mineral_size},
                       spec.mineral_size,
                       spec.mineral_size});
  }
  for (const Patch& p : patches) {
    if (p.origin.x < 0 || p.origin.y < 0 ||
        p.origin.x + p.width > config.world_width ||
        p.origin.y + p.height > config.world_height ||
        overlaps_other_kind(p, patches)) {
      throw ConfigError("patch layout does not fit the world");
    }
  }
  return patches;
}

}  // namespace

World generate_world(const ScenarioConfig& config, RngStream& rng) {
  validate(config);
  if (config.layout == Layout::Homogeneous) {
    return World(config.world_width, config.world_height, Layout::Homogeneous, {});
  }

  const PatchSpec& spec = config.patches;
  if (spec.food_size > config.world_width || spec.food_size > config.world_height)
    throw ConfigError("food patch larger than world");
  if (spec.mineral_size > config.world_width ||
      spec.mineral_size > config.world_height)
    throw ConfigError("mineral patch larger than world");

  std::vector<Patch> patches;
  patches.reserve(static_cast<std::size_t>(spec.food_count + spec.mineral_count));
  auto place = [&](ResourceKind kind, double size) -> bool {
    for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
      Patch candidate{kind,
                      {rng.uniform(0.0, config.world_width - size),
                       rng.uniform(0.0, config.world_height - size)},
                      size,
                      size};
      if (!overlaps_other_kind(candidate, patches)) {
        patches.push_back(candidate);
        return true;
      }
    }
    return false;
  };

  bool placed_all = true;
  for (int i = 0; placed_all && i < spec.food_count; ++i)
    placed_all = place(ResourceKind::Food, spec.food_size);
  for (int i = 0; placed_all && i < spec.mineral_count; ++i)
    placed_all = place(ResourceKind::Mineral, spec.mineral_size);

  if (!placed_all) patches = corner_layout(config);
  return World(config.world_width, config.world_height, Layout::Heterogeneous,
               std::move(patches));
}

}  // namespace ecosim
