#pragma once

#include <cstdint>
#include <string_view>

namespace qpres {

/* splitmix64: tiny, portable, and fully specified, so streams are identical on
   every platform.  All randomized operations take an explicit seed and derive
   per-sample substreams with derive_seed, which keeps results independent of
   evaluation order and thread count. */
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // unbiased uniform draw from [0, m)
  uint64_t below(uint64_t m) {
    uint64_t bound = UINT64_MAX - UINT64_MAX % m;
    uint64_t x = next();
    while (x >= bound) x = next();
    return x % m;
  }
};

inline uint64_t derive_seed(uint64_t seed, uint64_t tag) {
  Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
  r.next();
  return r.next();
}

// string tags hash through FNV-1a first
inline uint64_t derive_seed(uint64_t seed, std::string_view tag) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return derive_seed(seed, h);
}

inline uint64_t derive_seed(uint64_t seed, std::string_view tag, uint64_t t2) {
  return derive_seed(derive_seed(seed, tag), t2);
}

inline uint64_t derive_seed(uint64_t seed, std::string_view tag, uint64_t t2, uint64_t t3) {
  return derive_seed(derive_seed(seed, tag, t2), t3);
}

inline uint64_t derive_seed(uint64_t seed, uint64_t tag1, uint64_t tag2) {
  return derive_seed(derive_seed(seed, tag1), tag2);
}

inline uint64_t derive_seed(uint64_t seed, uint64_t t1, uint64_t t2, uint64_t t3) {
  return derive_seed(derive_seed(seed, t1, t2), t3);
}

}  // namespace qpres
