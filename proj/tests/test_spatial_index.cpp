#include <doctest.h>

#include <numeric>

#include "ecosim/spatial_index.hpp"
#include "test_helpers.hpp"

using namespace ecosim;
using ecosim::testing::naive_radius_filter;
using ecosim::testing::random_positions;

TEST_CASE("every agent is indexed exactly once") {
  const World w(600, 600, Layout::Heterogeneous, {});
  RngStream rng(42);
  const auto positions = random_positions(500, w, rng);
  SpatialIndex index;
  index.build(positions, w, 200.0);
  // A whole-world query must return each entry once.
  const auto all = index.query_radius({0, 0}, 600.0);
  std::vector<std::uint32_t> expected(500);
  std::iota(expected.begin(), expected.end(), 0);
  CHECK(all == expected);
}

TEST_CASE("empty index answers empty") {
  const World w(600, 600, Layout::Heterogeneous, {});
  SpatialIndex index;
  index.build({}, w, 200.0);
  CHECK(index.query_radius({10, 10}, 500.0).empty());
}

TEST_CASE("radius zero finds only colocated agents") {
  const World w(600, 600, Layout::Heterogeneous, {});
  const std::vector<Vec2> positions = {{10, 10}, {10, 10}, {10, 10.5}};
  SpatialIndex index;
  index.build(positions, w, 200.0);
  CHECK(index.query_radius({10, 10}, 0.0) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("wraparound neighbours are found") {
  const World w(600, 600, Layout::Heterogeneous, {});
  const std::vector<Vec2> positions = {{595, 0}};
  SpatialIndex index;
  index.build(positions, w, 200.0);
  CHECK(index.query_radius({5, 0}, 10.0) == std::vector<std::uint32_t>{0});
  CHECK(index.query_radius({5, 0}, 9.99).empty());
}

TEST_CASE("query matches the brute-force oracle on random instances") {
  RngStream rng(2024);
  for (int round = 0; round < 100; ++round) {
    const double width = rng.uniform(50.0, 800.0);
    const double height = rng.uniform(50.0, 800.0);
    const World w(width, height, Layout::Heterogeneous, {});
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform_below(200));
    const auto positions = random_positions(n, w, rng);

    const double cell = rng.uniform(5.0, 300.0);
    SpatialIndex index;
    index.build(positions, w, cell);

    for (int q = 0; q < 10; ++q) {
      const Vec2 center{rng.uniform(0, width), rng.uniform(0, height)};
      const double radius = rng.uniform(0.0, 0.8 * std::max(width, height));
      CHECK(index.query_radius(center, radius) ==
            naive_radius_filter(positions, w, center, radius));
    }
  }
}

TEST_CASE("oracle agreement at the default scenario scale") {
  const World w(600, 600, Layout::Heterogeneous, {});
  RngStream rng(77);
  const auto positions = random_positions(100, w, rng);
  SpatialIndex index;
  index.build(positions, w, 200.0);
  for (const Vec2& p : positions) {
    CHECK(index.query_radius(p, 200.0) ==
          naive_radius_filter(positions, w, p, 200.0));
  }
}
