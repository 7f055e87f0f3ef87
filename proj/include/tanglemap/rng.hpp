#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "tanglemap/encode.hpp"

namespace tanglemap {

// mt19937_64 is bit-specified by the standard; the bounded draws below avoid
// std::uniform_int_distribution, whose output differs between standard
// library implementations. Everything downstream of a seed is reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound) by rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  std::size_t index(std::size_t size) { return std::size_t(below(size)); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[std::size_t(below(i))]);
    }
  }

  // First k elements of a seeded Fisher-Yates pass: a uniform k-subset,
  // order randomized, no replacement.
  template <typename T>
  std::vector<T> sample(std::vector<T> pool, std::size_t k) {
    if (k > pool.size()) k = pool.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + std::size_t(below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

// Stable per-purpose seed derivation: distinct labels give independent
// streams from one scenario seed.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label) {
  ByteWriter w;
  w.put_str("tanglemap.seed.v1");
  w.put_u64(root);
  w.put_str(label);
  const Hash256 h = w.digest();
  std::uint64_t s = 0;
  for (int i = 0; i < 8; ++i) s |= std::uint64_t(h[i]) << (8 * i);
  return s;
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label,
                                 std::uint64_t index) {
  ByteWriter w;
  w.put_str("tanglemap.seed.v1");
  w.put_u64(root);
  w.put_str(label);
  w.put_u64(index);
  const Hash256 h = w.digest();
  std::uint64_t s = 0;
  for (int i = 0; i < 8; ++i) s |= std::uint64_t(h[i]) << (8 * i);
  return s;
}

}  // namespace tanglemap
