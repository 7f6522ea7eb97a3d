#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qpres/fp.hpp"

namespace qpres {

/* Univariate polynomials over F_p, coefficients lowest degree first.
   The zero polynomial has an empty coefficient vector and degree -1. */
struct Poly {
  uint32_t p = 2;
  std::vector<uint32_t> c;

  Poly() = default;
  Poly(uint32_t prime, std::vector<uint32_t> coeffs) : p(prime), c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint32_t lead() const { return c.empty() ? 0 : c.back(); }
  uint32_t coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }

  static Poly zero(uint32_t p) { return Poly(p, {}); }
  static Poly one(uint32_t p) { return Poly(p, {1 % p}); }
  static Poly x(uint32_t p) { return Poly(p, {0, 1 % p}); }

  bool operator==(const Poly& o) const { return p == o.p && c == o.c; }
  bool operator<(const Poly& o) const {  // degree, then lexicographic on coefficients
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t i = c.size(); i-- > 0;)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
  }
};

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_sub(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_scale(const Poly& f, uint32_t s);
// division with remainder; g must be nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
Poly poly_mod(const Poly& f, const Poly& g);
Poly poly_gcd(const Poly& f, const Poly& g);  // monic gcd
Poly poly_monic(const Poly& f);
Poly poly_derivative(const Poly& f);
uint32_t poly_eval(const Poly& f, uint32_t x);
// f^e mod m
Poly poly_powmod(const Poly& f, uint64_t e, const Poly& m);
// extended euclid: returns (g, u, v) monic with u f + v g0 = g = gcd
struct Bezout {
  Poly g, u, v;
};
Bezout poly_bezout(const Poly& f, const Poly& g);

/* Complete factorization into monic irreducibles with multiplicities,
   deterministic for a fixed seed (squarefree / distinct-degree / equal-degree
   with seeded random draws).  Factors are returned sorted. */
std::vector<std::pair<Poly, int>> poly_factor(const Poly& f, uint64_t seed = 0);

bool poly_irreducible(const Poly& f, uint64_t seed = 0);

}  // namespace qpres
