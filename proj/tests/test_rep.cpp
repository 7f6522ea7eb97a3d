#include <vector>

#include "doctest.h"
#include "qpres/algio.hpp"
#include "qpres/errors.hpp"
#include "qpres/rep.hpp"
#include "qpres/rng.hpp"

using namespace qpres;

namespace {

AlgebraPtr fix(const char* name, uint32_t p = 1009) {
  return build_algebra(builtin_spec(name, p));
}

// dimension vector of the intersection of two subspace tuples
std::vector<int> intersection_dims(const Submodule& x, const Submodule& y) {
  std::vector<int> out;
  for (size_t v = 0; v < x.bases.size(); ++v) {
    int u = x.bases[v].cols, w = y.bases[v].cols;
    out.push_back(u + w - rank_of(hstack(x.bases[v], y.bases[v])));
  }
  return out;
}

}  // namespace

TEST_SUITE("rep") {

TEST_CASE("simples and projectives have the expected dimensions") {
  auto a2 = fix("a2");
  CHECK(rep_simple(a2, 0).dims == std::vector<int>{1, 0});
  CHECK(rep_simple(a2, 1).dims == std::vector<int>{0, 1});
  CHECK(rep_projective(a2, 0).dims == std::vector<int>{1, 1});
  CHECK(rep_projective(a2, 1).dims == std::vector<int>{0, 1});

  auto a3n = fix("a3n");
  CHECK(rep_simple(a3n, 1).dims == std::vector<int>{0, 1, 0});
  CHECK(rep_projective(a3n, 0).dims == std::vector<int>{1, 1, 0});
  CHECK(rep_projective(a3n, 1).dims == std::vector<int>{0, 1, 1});
  CHECK(rep_projective(a3n, 2).dims == std::vector<int>{0, 0, 1});

  auto k2 = fix("k2");
  CHECK(rep_projective(k2, 0).dims == std::vector<int>{1, 2});

  for (const char* name : {"a2", "k2", "a3n"}) {
    auto alg = fix(name);
    for (int v = 0; v < alg->num_vertices(); ++v) {
      check_representation(rep_simple(alg, v));
      check_representation(rep_projective(alg, v));
    }
  }
}

TEST_CASE("projective arrow action matches right multiplication") {
  auto a2 = fix("a2");
  Representation p1 = rep_projective(a2, 0);
  Matrix act = class_action(p1, a2->arrow_class(0));
  REQUIRE(act.rows == 1);
  REQUIRE(act.cols == 1);
  CHECK(act.at(0, 0) == 1);
}

TEST_CASE("invalid representations are rejected") {
  auto a3n = fix("a3n");
  Representation bad;
  bad.alg = a3n;
  bad.dims = {1, 1, 1};
  bad.arrow_maps = {Matrix::identity(1, 1009), Matrix::identity(1, 1009)};
  // b compose a is the relation; identity maps violate it
  CHECK_THROWS_AS(check_representation(bad), ValidationError);
  bad.arrow_maps[1] = Matrix(1, 1, 1009);
  check_representation(bad);  // a acts, b kills: fine

  Representation shape;
  shape.alg = a3n;
  shape.dims = {1, 2, 0};
  shape.arrow_maps = {Matrix(1, 1, 1009), Matrix(0, 2, 1009)};
  CHECK_THROWS_AS(check_representation(shape), ValidationError);
}

TEST_CASE("hom dimensions on frozen pairs") {
  auto a2 = fix("a2");
  Representation s1 = rep_simple(a2, 0), s2 = rep_simple(a2, 1);
  Representation p1 = rep_projective(a2, 0), p2 = rep_projective(a2, 1);
  CHECK(hom_rep(s1, s1).dim == 1);
  CHECK(hom_rep(s1, s2).dim == 0);
  CHECK(hom_rep(p1, s1).dim == 1);
  CHECK(hom_rep(s1, p1).dim == 0);
  CHECK(hom_rep(p2, p1).dim == 1);
  CHECK(hom_rep(p1, p2).dim == 0);
  CHECK(hom_rep(p1, p1).dim == 1);
}

TEST_CASE("hom basis consists of intertwiners and is additive") {
  auto k2 = fix("k2");
  Representation p1 = rep_projective(k2, 0), s2 = rep_simple(k2, 1);
  HomBasis hb = hom_rep(p1, direct_sum(s2, p1));
  for (const auto& phi : hb.mats) {
    for (size_t a = 0; a < k2->arrows.size(); ++a) {
      const auto& m = p1;
      Representation n = direct_sum(s2, p1);
      int s = k2->arrows[a].from, t = k2->arrows[a].to;
      CHECK(mat_mul(n.arrow_maps[a], phi[s]) == mat_mul(phi[t], m.arrow_maps[a]));
    }
  }
  CHECK(hb.dim == hom_rep(p1, s2).dim + hom_rep(p1, p1).dim);
}

TEST_CASE("hom dimension is invariant under base change") {
  auto a3n = fix("a3n");
  Representation p2 = rep_projective(a3n, 1);
  Representation n = direct_sum(p2, rep_simple(a3n, 1));
  int before = hom_rep(p2, n).dim;
  Rng rng(derive_seed(21, "basechange"));
  Matrix g;
  do {
    g = Matrix::random(n.dims[1], n.dims[1], a3n->fp, rng);
  } while (!inverse(g));
  Representation n2 = n;
  for (size_t a = 0; a < a3n->arrows.size(); ++a) {
    if (a3n->arrows[a].to == 1) n2.arrow_maps[a] = mat_mul(g, n2.arrow_maps[a]);
    if (a3n->arrows[a].from == 1)
      n2.arrow_maps[a] = mat_mul(n2.arrow_maps[a], *inverse(g));
  }
  check_representation(n2);
  CHECK(hom_rep(p2, n2).dim == before);
}

TEST_CASE("duality bridge to the opposite algebra") {
  for (const char* name : {"a2", "k2", "a3n"}) {
    auto alg = fix(name);
    auto op = opposite_algebra(*alg);
    std::vector<Representation> reps;
    for (int v = 0; v < alg->num_vertices(); ++v) {
      reps.push_back(rep_simple(alg, v));
      reps.push_back(rep_projective(alg, v));
    }
    reps.push_back(direct_sum(reps[0], reps[1]));
    for (const auto& m : reps)
      for (const auto& n : reps) {
        CHECK(hom_rep(m, n).dim == hom_rep(dual(n, op), dual(m, op)).dim);
      }
  }
}

TEST_CASE("double dual returns the original matrices") {
  auto k2 = fix("k2");
  auto op = opposite_algebra(*k2);
  auto opop = opposite_algebra(*op);
  CHECK(opop->spec == k2->spec);
  Representation m = rep_projective(k2, 0);
  Representation dd = dual(dual(m, op), opop);
  CHECK(dd.dims == m.dims);
  for (size_t a = 0; a < m.arrow_maps.size(); ++a) CHECK(dd.arrow_maps[a] == m.arrow_maps[a]);
}

TEST_CASE("injectives via the opposite algebra") {
  auto a2 = fix("a2");
  auto op = opposite_algebra(*a2);
  Representation i1 = rep_injective(a2, op, 0);
  Representation i2 = rep_injective(a2, op, 1);
  check_representation(i1);
  check_representation(i2);
  CHECK(i1.dims == std::vector<int>{1, 0});
  CHECK(i2.dims == std::vector<int>{1, 1});
  CHECK(iso_test(i2, rep_projective(a2, 0), 1, 32));
}

TEST_CASE("projective cover splits off the radical") {
  auto a2 = fix("a2");
  Representation p1 = rep_projective(a2, 0);
  Cover c1 = projective_cover(p1);
  CHECK(c1.mult == std::vector<int>{1, 0});
  CHECK(c1.omega.is_zero());

  Cover cs = projective_cover(rep_simple(a2, 0));
  CHECK(cs.mult == std::vector<int>{1, 0});
  CHECK(cs.omega.dims == std::vector<int>{0, 1});  // the syzygy of S1 is S2

  auto k3 = fix("k3");
  Cover ck = projective_cover(rep_simple(k3, 0));
  CHECK(ck.omega.dims == std::vector<int>{0, 3});
}

TEST_CASE("ext1 on frozen pairs") {
  auto a2 = fix("a2");
  Representation s1 = rep_simple(a2, 0), s2 = rep_simple(a2, 1);
  CHECK(ext1(s1, s2) == 1);
  CHECK(ext1(s2, s1) == 0);
  CHECK(ext1(rep_projective(a2, 0), s1) == 0);
  CHECK(ext1(rep_projective(a2, 0), s2) == 0);

  auto k2 = fix("k2");
  CHECK(ext1(rep_simple(k2, 0), rep_simple(k2, 1)) == 2);

  auto a3n = fix("a3n");
  CHECK(ext1(rep_simple(a3n, 0), rep_simple(a3n, 1)) == 1);
  CHECK(ext1(rep_simple(a3n, 1), rep_simple(a3n, 2)) == 1);
  CHECK(ext1(rep_simple(a3n, 0), rep_simple(a3n, 2)) == 0);
}

TEST_CASE("extension middles") {
  auto a2 = fix("a2");
  Representation s1 = rep_simple(a2, 0), s2 = rep_simple(a2, 1);
  Representation e = extension_middle(s1, s2, 3);
  check_representation(e);
  CHECK(e.dims == std::vector<int>{1, 1});
  CHECK(iso_test(e, rep_projective(a2, 0), 1, 32));

  CHECK_THROWS_AS(extension_middle(s2, s1, 3), NoNontrivialExtension);

  // zero cocycle gives the split middle
  Cover cover = projective_cover(s1);
  std::vector<Matrix> zero;
  for (int v = 0; v < 2; ++v) zero.emplace_back(s2.dims[v], cover.omega.dims[v], 1009);
  Representation split = extension_with_cocycle(s1, s2, cover, zero);
  check_representation(split);
  CHECK(iso_test(split, direct_sum(s1, s2), 1, 32));
}

TEST_CASE("submodule dimension vectors on frozen examples") {
  auto a2p2 = fix("a2", 2);
  Representation p1 = rep_projective(a2p2, 0);
  auto dv = submodule_dimvectors(p1);
  CHECK(dv == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});

  CHECK(submodule_dimvectors(rep_simple(a2p2, 0)) ==
        std::vector<std::vector<int>>{{0, 0}, {1, 0}});

  auto k2p3 = fix("k2", 3);
  Representation generic;
  generic.alg = k2p3;
  generic.dims = {1, 1};
  generic.arrow_maps = {Matrix::identity(1, 3), mat_scale(Matrix::identity(1, 3), 2)};
  check_representation(generic);
  CHECK(submodule_dimvectors(generic) ==
        std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("submodule caps") {
  auto a2 = fix("a2");  // field 1009
  CHECK_THROWS_AS(list_submodules(rep_projective(a2, 0)), EnumerationCapExceeded);
  auto a2p2 = fix("a2", 2);
  Representation big = rep_projective(a2p2, 0);
  for (int i = 0; i < 6; ++i) big = direct_sum(big, rep_projective(a2p2, 0));
  CHECK_THROWS_AS(list_submodules(big), EnumerationCapExceeded);
}

TEST_CASE("submodule lattice closure on sums and intersections") {
  auto a3n = fix("a3n", 2);
  Representation m = direct_sum(rep_projective(a3n, 0), rep_projective(a3n, 1));
  auto subs = list_submodules(m);
  auto dv = submodule_dimvectors(m);
  auto has = [&](const std::vector<int>& d) {
    return std::find(dv.begin(), dv.end(), d) != dv.end();
  };
  CHECK(has(std::vector<int>{0, 0, 0}));
  CHECK(has(m.dims));
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = 0; j < i; ++j) CHECK(has(intersection_dims(subs[i], subs[j])));
}

TEST_CASE("submodule and quotient representations") {
  auto a2 = fix("a2", 2);
  Representation p1 = rep_projective(a2, 0);
  auto subs = list_submodules(p1);
  REQUIRE(subs.size() == 3);
  for (const auto& s : subs) {
    Representation sub = submodule_rep(p1, s);
    Representation quo = quotient_rep(p1, s);
    check_representation(sub);
    check_representation(quo);
    CHECK(sub.total_dim() + quo.total_dim() == p1.total_dim());
  }
  // the middle submodule is S2 with quotient S1
  CHECK(iso_test(submodule_rep(p1, subs[1]), rep_simple(a2, 1), 1, 16));
  CHECK(iso_test(quotient_rep(p1, subs[1]), rep_simple(a2, 0), 1, 16));
}

TEST_CASE("isomorphism testing") {
  auto a2 = fix("a2");
  Representation p1 = rep_projective(a2, 0);
  Representation s1 = rep_simple(a2, 0), s2 = rep_simple(a2, 1);
  CHECK(iso_test(p1, p1, 5, 16));
  CHECK_FALSE(iso_test(p1, direct_sum(s1, s2), 5, 16));
  CHECK_FALSE(iso_test(s1, s2, 5, 16));
  CHECK(iso_test(direct_sum(s1, s2), direct_sum(s2, s1), 5, 16));

  auto k2p2 = fix("k2", 2);
  // same dimension vector, non-isomorphic arrow maps
  Representation x, y;
  x.alg = y.alg = k2p2;
  x.dims = y.dims = {1, 1};
  x.arrow_maps = {Matrix::identity(1, 2), Matrix(1, 1, 2)};
  y.arrow_maps = {Matrix(1, 1, 2), Matrix::identity(1, 2)};
  CHECK_FALSE(iso_test(x, y, 5, 16));
  CHECK(iso_test(x, x, 5, 16));
}

TEST_CASE("signed lifting to the large field") {
  auto a3n2 = build_algebra(builtin_spec("a3n", 2));
  auto a3n = fix("a3n");
  Representation m;
  m.alg = a3n2;
  m.dims = {1, 2, 1};
  Matrix a(2, 1, 2), b(1, 2, 2);
  a.at(0, 0) = a.at(1, 0) = 1;
  b.at(0, 0) = b.at(0, 1) = 1;
  m.arrow_maps = {a, b};
  check_representation(m);  // b a = 2 = 0 over F_2

  Representation lifted = lift_representation(m, a3n);
  check_representation(lifted);  // needs a sign flip so that b a = 0 exactly
  CHECK(lifted.dims == m.dims);
  CHECK(lifted.alg->fp.p == 1009);

  auto k2p3 = build_algebra(builtin_spec("k2", 3));
  Representation g;
  g.alg = k2p3;
  g.dims = {1, 1};
  g.arrow_maps = {Matrix::identity(1, 3), mat_scale(Matrix::identity(1, 3), 2)};
  Representation glift = lift_representation(g, fix("k2"));
  check_representation(glift);
  CHECK(glift.dims == g.dims);
}

}  // TEST_SUITE
