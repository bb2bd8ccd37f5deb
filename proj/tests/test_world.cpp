#include <doctest.h>

#include "ecosim/world.hpp"

using namespace ecosim;

namespace {

World square_world(double side) {
  return World(side, side, Layout::Heterogeneous, {});
}

ScenarioConfig default_config() {
  ScenarioConfig config;
  return config;
}

}  // namespace

TEST_CASE("toroidal distance wraps around the edge") {
  const World w = square_world(600.0);
  CHECK(w.toroidal_distance({0, 0}, {599, 0}) == doctest::Approx(1.0));
  CHECK(w.toroidal_distance({5, 0}, {595, 0}) == doctest::Approx(10.0));
}

TEST_CASE("toroidal distance of a point to itself is zero") {
  const World w = square_world(600.0);
  CHECK(w.toroidal_distance({123.5, 77.25}, {123.5, 77.25}) == 0.0);
}

TEST_CASE("toroidal distance matches the direct diagonal") {
  const World w = square_world(600.0);
  // sqrt(300^2 + 300^2)
  CHECK(w.toroidal_distance({0, 0}, {300, 300}) ==
        doctest::Approx(424.26406871192853).epsilon(1e-12));
}

TEST_CASE("toroidal distance is symmetric and bounded") {
  const World w = World(600.0, 400.0, Layout::Heterogeneous, {});
  RngStream rng(99);
  const double bound = std::sqrt(300.0 * 300.0 + 200.0 * 200.0) + 1e-9;
  for (int i = 0; i < 1000; ++i) {
    const Vec2 a{rng.uniform(0, 600), rng.uniform(0, 400)};
    const Vec2 b{rng.uniform(0, 600), rng.uniform(0, 400)};
    const double dab = w.toroidal_distance(a, b);
    CHECK(dab == w.toroidal_distance(b, a));
    CHECK(dab <= bound);
  }
}

TEST_CASE("wrap reduces coordinates into bounds") {
  const World w = square_world(600.0);
  const Vec2 p = w.wrap({601.5, -0.5});
  CHECK(p.x == doctest::Approx(1.5));
  CHECK(p.y == doctest::Approx(599.5));
  CHECK(p.x >= 0.0);
  CHECK(p.y < 600.0);
}

TEST_CASE("default heterogeneous world has one food and one mineral patch") {
  RngStream rng(7);
  const World w = generate_world(default_config(), rng);
  REQUIRE(w.patches().size() == 2);
  const Patch& food = w.patches()[0];
  const Patch& mineral = w.patches()[1];
  CHECK(food.kind == ResourceKind::Food);
  CHECK(food.width == 300.0);
  CHECK(food.height == 300.0);
  CHECK(mineral.kind == ResourceKind::Mineral);
  CHECK(mineral.width == 100.0);
  CHECK(mineral.height == 100.0);
  CHECK(!food.overlaps(mineral));
}

TEST_CASE("generated patches never overlap across kinds and stay in bounds") {
  ScenarioConfig config = default_config();
  config.patches.food_count = 2;
  config.patches.mineral_count = 3;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    RngStream rng(seed);
    const World w = generate_world(config, rng);
    for (const Patch& p : w.patches()) {
      CHECK(p.origin.x >= 0.0);
      CHECK(p.origin.y >= 0.0);
      CHECK(p.origin.x + p.width <= config.world_width);
      CHECK(p.origin.y + p.height <= config.world_height);
      for (const Patch& q : w.patches()) {
        if (p.kind != q.kind) CHECK(!p.overlaps(q));
      }
    }
  }
}

TEST_CASE("world generation is deterministic in the seed") {
  RngStream a(1234), b(1234), c(99);
  const World wa = generate_world(default_config(), a);
  const World wb = generate_world(default_config(), b);
  const World wc = generate_world(default_config(), c);
  CHECK(wa.patches() == wb.patches());
  CHECK(wa.patches() != wc.patches());
}

TEST_CASE("resources_at reports patch membership") {
  std::vector<Patch> patches = {
      {ResourceKind::Food, {100, 100}, 300, 300},
      {ResourceKind::Mineral, {450, 450}, 100, 100},
  };
  const World w(600, 600, Layout::Heterogeneous, patches);

  SUBCASE("inside the food patch") {
    const ResourceSet r = w.resources_at({250, 250});
    CHECK(r.food);
    CHECK(!r.mineral);
  }
  SUBCASE("outside all patches") {
    CHECK(w.resources_at({50, 50}).empty());
  }
  SUBCASE("inside the mineral patch") {
    const ResourceSet r = w.resources_at({500, 500});
    CHECK(!r.food);
    CHECK(r.mineral);
  }
}

TEST_CASE("homogeneous layout yields both goods everywhere") {
  ScenarioConfig config = default_config();
  config.layout = Layout::Homogeneous;
  RngStream rng(5);
  const World w = generate_world(config, rng);
  RngStream point_rng(6);
  for (int i = 0; i < 100; ++i) {
    const Vec2 p{point_rng.uniform(0, 600), point_rng.uniform(0, 600)};
    const ResourceSet r = w.resources_at(p);
    CHECK(r.food);
    CHECK(r.mineral);
  }
}

TEST_CASE("exhausted placement budget falls back to the corner arrangement") {
  // A 560-wide food field leaves no continuous strip for a 40-wide mineral
  // field, so random placement cannot succeed and the fallback kicks in.
  ScenarioConfig config = default_config();
  config.patches.food_size = 560.0;
  config.patches.mineral_size = 40.0;
  RngStream rng(11);
  const World w = generate_world(config, rng);
  REQUIRE(w.patches().size() == 2);
  CHECK(w.patches()[0].origin == Vec2{0.0, 0.0});
  CHECK(w.patches()[1].origin == Vec2{560.0, 560.0});
  CHECK(!w.patches()[0].overlaps(w.patches()[1]));
}

TEST_CASE("impossible geometry is a configuration error") {
  ScenarioConfig config = default_config();
  config.patches.food_size = 700.0;  // larger than the world
  RngStream rng(3);
  CHECK_THROWS_AS(generate_world(config, rng), ConfigError);
}
