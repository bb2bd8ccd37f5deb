#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace ecosim {

// Deterministic random stream. mt19937_64 output is fully specified by the
// standard; the uniform mappings below are hand-rolled because the
// std::uniform_* distributions are not bit-reproducible across standard
// library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Unbiased uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_below(std::uint64_t n);

  // Fisher-Yates shuffle with this stream.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Stable 64-bit mix (splitmix64 finalizer).
std::uint64_t mix_u64(std::uint64_t x);

// FNV-1a over a label, for deriving per-concern stream seeds.
std::uint64_t hash_label(std::string_view name);

// Independent stream for one named concern of a seeded computation. Adding a
// new consumer with its own name leaves every other stream untouched.
RngStream derive_stream(std::uint64_t seed, std::string_view name);

// Seed for one replicate of one experiment cell.
std::uint64_t replicate_seed(std::uint64_t base_seed, std::string_view cell,
                             std::uint64_t replicate_index);

}  // namespace ecosim
