#include "qpres/poly.hpp"

#include <algorithm>
#include <map>

#include "qpres/errors.hpp"

namespace qpres {

static void check_same_p(const Poly& f, const Poly& g) {
  if (f.p != g.p) throw Error("polynomial modulus mismatch");
}

Poly poly_add(const Poly& f, const Poly& g) {
  check_same_p(f, g);
  Fp fp(f.p);
  std::vector<uint32_t> c(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = fp.add(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
  return Poly(f.p, std::move(c));
}

Poly poly_sub(const Poly& f, const Poly& g) {
  check_same_p(f, g);
  Fp fp(f.p);
  std::vector<uint32_t> c(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = fp.sub(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
  return Poly(f.p, std::move(c));
}

Poly poly_mul(const Poly& f, const Poly& g) {
  check_same_p(f, g);
  if (f.is_zero() || g.is_zero()) return Poly::zero(f.p);
  Fp fp(f.p);
  std::vector<uint32_t> c(f.c.size() + g.c.size() - 1, 0);
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (!f.c[i]) continue;
    for (size_t j = 0; j < g.c.size(); ++j)
      c[i + j] = fp.add(c[i + j], fp.mul(f.c[i], g.c[j]));
  }
  return Poly(f.p, std::move(c));
}

Poly poly_scale(const Poly& f, uint32_t s) {
  Fp fp(f.p);
  std::vector<uint32_t> c = f.c;
  for (auto& x : c) x = fp.mul(x, s);
  return Poly(f.p, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  check_same_p(f, g);
  if (g.is_zero()) throw Error("polynomial division by zero");
  Fp fp(f.p);
  if (f.degree() < g.degree()) return {Poly::zero(f.p), f};
  std::vector<uint32_t> r = f.c;
  std::vector<uint32_t> q(f.degree() - g.degree() + 1, 0);
  uint32_t glead_inv = fp.inv(g.lead());
  for (int i = f.degree(); i >= g.degree(); --i) {
    uint32_t coef = fp.mul(r[i], glead_inv);
    if (!coef) continue;
    q[i - g.degree()] = coef;
    for (int j = 0; j <= g.degree(); ++j)
      r[i - g.degree() + j] = fp.sub(r[i - g.degree() + j], fp.mul(coef, g.c[j]));
  }
  return {Poly(f.p, std::move(q)), Poly(f.p, std::move(r))};
}

Poly poly_mod(const Poly& f, const Poly& g) { return poly_divmod(f, g).second; }

Poly poly_monic(const Poly& f) {
  if (f.is_zero()) return f;
  Fp fp(f.p);
  return poly_scale(f, fp.inv(f.lead()));
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return poly_monic(a);
}

Poly poly_derivative(const Poly& f) {
  Fp fp(f.p);
  if (f.degree() < 1) return Poly::zero(f.p);
  std::vector<uint32_t> c(f.degree(), 0);
  for (int i = 1; i <= f.degree(); ++i) c[i - 1] = fp.mul(f.c[i], i % f.p);
  return Poly(f.p, std::move(c));
}

uint32_t poly_eval(const Poly& f, uint32_t x) {
  Fp fp(f.p);
  uint32_t r = 0;
  for (size_t i = f.c.size(); i-- > 0;) r = fp.add(fp.mul(r, x), f.c[i]);
  return r;
}

Poly poly_powmod(const Poly& f, uint64_t e, const Poly& m) {
  Poly base = poly_mod(f, m);
  Poly r = Poly::one(f.p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base), m);
    base = poly_mod(poly_mul(base, base), m);
    e >>= 1;
  }
  return r;
}

Bezout poly_bezout(const Poly& f, const Poly& g) {
  // invariant: r0 = u0*f + v0*g, r1 = u1*f + v1*g
  Poly r0 = f, r1 = g;
  Poly u0 = Poly::one(f.p), v0 = Poly::zero(f.p);
  Poly u1 = Poly::zero(f.p), v1 = Poly::one(f.p);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    Poly v2 = poly_sub(v0, poly_mul(q, v1));
    r0 = r1; r1 = r;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  Fp fp(f.p);
  if (r0.is_zero()) return {r0, u0, v0};
  uint32_t s = fp.inv(r0.lead());
  return {poly_scale(r0, s), poly_scale(u0, s), poly_scale(v0, s)};
}

// p-th root of f when f = g(x^p); over the prime field coefficients are fixed
// by Frobenius, so the root just decimates exponents
static Poly pth_root(const Poly& f) {
  std::vector<uint32_t> c;
  for (size_t i = 0; i < f.c.size(); i += f.p) c.push_back(f.c[i]);
  return Poly(f.p, std::move(c));
}

// squarefree decomposition (Yun adapted to characteristic p)
static std::vector<std::pair<Poly, int>> squarefree(const Poly& fin) {
  std::vector<std::pair<Poly, int>> out;  // (squarefree part, multiplicity)
  Poly f = poly_monic(fin);
  int pmult = 1;
  while (f.degree() > 0) {
    Poly d = poly_derivative(f);
    if (d.is_zero()) {
      f = pth_root(f);
      pmult *= static_cast<int>(f.p);
      continue;
    }
    Poly g = poly_gcd(f, d);
    Poly w = poly_divmod(f, g).first;  // product of squarefree factors of mult not divisible by p... standard loop
    int m = 1;
    while (w.degree() > 0) {
      Poly y = poly_gcd(w, g);
      Poly z = poly_divmod(w, y).first;  // factors of exact multiplicity m
      if (z.degree() > 0) out.push_back({poly_monic(z), m * pmult});
      g = poly_divmod(g, y).first;
      w = y;
      ++m;
    }
    if (g.degree() > 0) {
      // remaining part is a p-th power
      Poly r = pth_root(g);
      auto sub = squarefree(r);
      for (auto& [q, mm] : sub) out.push_back({q, mm * pmult * static_cast<int>(f.p)});
    }
    break;
  }
  return out;
}

// distinct-degree decomposition of a squarefree monic polynomial
static std::vector<std::pair<Poly, int>> distinct_degree(const Poly& fin) {
  std::vector<std::pair<Poly, int>> out;  // (product of irreducibles of degree d, d)
  Poly f = fin;
  Poly h = Poly::x(f.p);  // x^(p^d) mod f, iterated
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.push_back({f, f.degree()});
      break;
    }
    h = poly_powmod(h, f.p, f);
    Poly g = poly_gcd(poly_sub(h, Poly::x(f.p)), f);
    if (g.degree() > 0) {
      out.push_back({g, d});
      f = poly_divmod(f, g).first;
      h = poly_mod(h, f);
    }
  }
  return out;
}

// equal-degree splitting (Cantor-Zassenhaus; trace construction for p = 2)
static void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  Fp fp(f.p);
  while (true) {
    std::vector<uint32_t> rc(f.degree(), 0);
    for (auto& x : rc) x = fp.uniform(rng);
    Poly a(f.p, std::move(rc));
    if (a.degree() < 1) continue;
    Poly g = poly_gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(poly_divmod(f, g).first, d, rng, out);
      return;
    }
    Poly b;
    if (f.p == 2) {
      // trace map a + a^2 + a^4 + ... + a^(2^(d-1)) mod f
      Poly t = Poly::zero(f.p), cur = a;
      for (int i = 0; i < d; ++i) {
        t = poly_add(t, cur);
        cur = poly_mod(poly_mul(cur, cur), f);
      }
      b = t;
    } else {
      // a^((p^d-1)/2) = norm(a)^((p-1)/2) with norm(a) = prod a^(p^i), i < d;
      // avoids forming p^d explicitly
      Poly norm = Poly::one(f.p), cur = a;
      for (int i = 0; i < d; ++i) {
        norm = poly_mod(poly_mul(norm, cur), f);
        cur = poly_powmod(cur, f.p, f);
      }
      b = poly_sub(poly_powmod(norm, (f.p - 1) / 2, f), Poly::one(f.p));
    }
    g = poly_gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(poly_divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

std::vector<std::pair<Poly, int>> poly_factor(const Poly& f, uint64_t seed) {
  if (f.is_zero()) throw ZeroPolynomial();
  std::map<Poly, int> acc;
  if (f.degree() == 0) return {};
  Rng rng(derive_seed(seed, 0x70f11ed));
  for (auto& [sf, mult] : squarefree(f)) {
    for (auto& [prod, d] : distinct_degree(sf)) {
      std::vector<Poly> irred;
      equal_degree(prod, d, rng, irred);
      for (auto& q : irred) acc[q] += mult;
    }
  }
  std::vector<std::pair<Poly, int>> out(acc.begin(), acc.end());
  return out;
}

bool poly_irreducible(const Poly& f, uint64_t seed) {
  if (f.degree() < 1) return false;
  auto fac = poly_factor(f, seed);
  return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace qpres
