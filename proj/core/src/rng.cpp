#include "ecosim/rng.hpp"

#include <limits>

namespace ecosim {

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
  // Rejection sampling to kill modulo bias.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

std::uint64_t mix_u64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_label(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RngStream derive_stream(std::uint64_t seed, std::string_view name) {
  return RngStream(mix_u64(seed ^ mix_u64(hash_label(name))));
}

std::uint64_t replicate_seed(std::uint64_t base_seed, std::string_view cell,
                             std::uint64_t replicate_index) {
  return base_seed ^ mix_u64(hash_label(cell) ^ replicate_index);
}

}  // namespace ecosim
