#include <vector>

#include "doctest.h"
#include "qpres/algio.hpp"
#include "qpres/errors.hpp"
#include "qpres/tropical.hpp"

using namespace qpres;

namespace {

AlgebraPtr fix(const char* name, uint32_t p = 1009) {
  return build_algebra(builtin_spec(name, p));
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_SUITE("tropical") {

TEST_CASE("frozen tropical values on the two vertex line") {
  auto a2 = fix("a2", 2);
  Representation p1 = rep_projective(a2, 0);
  Representation s1 = rep_simple(a2, 0), s2 = rep_simple(a2, 1);

  CHECK(trop_f(p1, {1, -1}) == 0);
  CHECK(trop_f(s2, {1, -1}) == 0);
  CHECK(trop_f(s2, {-1, 1}) == 1);
  CHECK(trop_f(p1, {0, 0}) == 0);
  CHECK(trop_f(p1, {2, 3}) == 5);  // the whole module wins

  CHECK(trop_f_dual(s2, {-1, 1}) == 1);
  CHECK(trop_f_dual(s1, {1, 0}) == 1);
  CHECK(trop_f_dual(s2, {0, 1}) == 1);
  CHECK(trop_f_dual(p1, {-1, 1}) == 0);
}

TEST_CASE("evaluation against an explicit dimension set") {
  DimSet dims{{0, 0}, {0, 1}, {1, 1}};
  CHECK(trop_eval(dims, {3, -2}) == 1);
  CHECK(trop_eval(dims, {-5, -7}) == 0);
  CHECK(trop_eval_dual(dims, {1, 1}, {3, -2}) == 3);  // quotient (1,0) scores 3

  auto a2 = fix("a2", 2);
  Representation p1 = rep_projective(a2, 0);
  DimSet sub = submodule_dimvectors(p1);
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      std::vector<int> d{x, y};
      CHECK(trop_f(p1, d) == trop_eval(sub, d));
      CHECK(trop_f_dual(p1, d) == trop_eval_dual(sub, p1.dims, d));
    }
}

TEST_CASE("duality identity across fixtures and the full grid") {
  struct Setup {
    const char* name;
    uint32_t p;
  } setups[] = {{"a2", 2}, {"k2", 3}, {"a3n", 2}};
  for (const auto& st : setups) {
    auto alg = fix(st.name, st.p);
    std::vector<Representation> mods;
    for (int v = 0; v < alg->num_vertices(); ++v) {
      mods.push_back(rep_simple(alg, v));
      mods.push_back(rep_projective(alg, v));
    }
    mods.push_back(direct_sum(mods[0], mods.back()));
    int nv = alg->num_vertices();
    std::vector<int> delta(nv, -3);
    while (true) {
      for (const auto& m : mods) {
        std::vector<int> neg(nv);
        for (int i = 0; i < nv; ++i) neg[i] = -delta[i];
        CHECK(trop_f(m, delta) - trop_f_dual(m, neg) == dot(m.dims, delta));
      }
      int i = 0;
      while (i < nv && delta[i] == 3) delta[i++] = -3;
      if (i == nv) break;
      ++delta[i];
    }
  }
}

TEST_CASE("tropical evaluation is positively homogeneous") {
  auto k2 = fix("k2", 3);
  Representation p1 = rep_projective(k2, 0);
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int n = 1; n <= 4; ++n) {
        std::vector<int> d{x, y}, nd{n * x, n * y};
        CHECK(trop_f(p1, nd) == n * trop_f(p1, d));
        CHECK(trop_f_dual(p1, nd) == n * trop_f_dual(p1, d));
      }
}

TEST_CASE("stabilization at level one on a real weight") {
  auto big = fix("a2");
  auto small = fix("a2", 2);
  StabilizationReport rep = stabilization_n(big, rep_simple(small, 1), {1, -1}, 8, 16, 5);
  CHECK(rep.n_found == 1);
  REQUIRE(rep.checked_multiples.size() == 8);
  for (const auto& [n, ok] : rep.checked_multiples) {
    CHECK(ok);
    CHECK(n >= 1);
  }
  CHECK(rep.wildness_note == "real");

  StabilizationReport z = stabilization_n(big, rep_simple(small, 0), {0, 0}, 8, 4, 5);
  CHECK(z.n_found == 1);
}

TEST_CASE("stabilization on a tame kronecker weight") {
  auto big = fix("k2");
  auto small = fix("k2", 3);
  // the homogeneous (1,1) module with maps 1 and 2
  Representation m{small, {1, 1}, {Matrix(1, 1, 3), Matrix(1, 1, 3)}};
  m.arrow_maps[0].at(0, 0) = 1;
  m.arrow_maps[1].at(0, 0) = 2;
  check_representation(m);

  StabilizationReport rep = stabilization_n(big, m, {1, -1}, 8, 16, 7);
  CHECK(rep.n_found == 1);
  CHECK(rep.wildness_note == "tame");
  for (const auto& [n, ok] : rep.checked_multiples) CHECK(ok);
}

TEST_CASE("mismatched inputs stay reportable instead of crashing") {
  auto big = fix("a2");
  auto small = fix("a2", 2);
  // deliberately pair the submodule data of S2 with the module S1
  Representation s1_big = rep_simple(big, 0);
  DimSet sub{{0, 0}, {0, 1}};
  StabilizationReport rep =
      stabilization_n(big, s1_big, sub, {0, 1}, {1, -1}, 8, 8, 9, "synthetic");
  CHECK(rep.n_found == 0);
  CHECK(rep.checked_multiples.empty());
  CHECK(rep.wildness_note == "synthetic");
}

TEST_CASE("enumeration over the big field is refused") {
  auto big = fix("a2");
  CHECK_THROWS_AS(trop_f(rep_projective(big, 0), {1, 0}), EnumerationCapExceeded);
}

}  // TEST_SUITE
