#pragma once

#include <cstdint>

#include "qpres/errors.hpp"
#include "qpres/rng.hpp"

namespace qpres {

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// arithmetic in the prime field F_p; values are residues in [0, p)
struct Fp {
  uint32_t p;

  explicit Fp(uint32_t prime) : p(prime), magic_(~0ull / prime) {
    if (!is_prime_u32(prime)) throw ValidationError("field_char", "must be prime");
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
  // Barrett reduction: one wide multiply instead of a hardware division.
  // For residue inputs the estimate is off by at most one multiple of p.
  uint32_t mul(uint32_t a, uint32_t b) const {
    uint64_t x = static_cast<uint64_t>(a) * b;
    uint64_t q = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(x) * magic_) >> 64);
    uint64_t r = x - q * p;
    if (r >= p) r -= p;
    return static_cast<uint32_t>(r);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p, base = a % p;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw Error("division by zero in F_p");
    return pow(a, p - 2);
  }
  // reduce an arbitrary signed integer into [0, p)
  uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
  }
  uint32_t uniform(Rng& rng) const { return static_cast<uint32_t>(rng.below(p)); }

  bool operator==(const Fp& o) const { return p == o.p; }

 private:
  uint64_t magic_;  // floor((2^64 - 1) / p)
};

}  // namespace qpres
