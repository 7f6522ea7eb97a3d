#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "qpres/algio.hpp"
#include "qpres/errors.hpp"
#include "qpres/stability.hpp"

using namespace qpres;

namespace {

AlgebraPtr fix(const char* name, uint32_t p = 1009) {
  return build_algebra(builtin_spec(name, p));
}

const TaggedModule* find_module(const TestSet& ts, const std::string& name) {
  for (const auto& tm : ts.modules)
    if (tm.name == name) return &tm;
  return nullptr;
}

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("membership flags on frozen examples") {
  auto a2 = fix("a2", 2);
  MembershipFlags s1 = membership(rep_simple(a2, 0), {1, -1});
  CHECK(s1.in_t);
  CHECK(s1.in_tbar);
  CHECK_FALSE(s1.in_fbar);
  CHECK_FALSE(s1.in_f);
  CHECK_FALSE(s1.in_w);

  MembershipFlags p1 = membership(rep_projective(a2, 0), {1, -1});
  CHECK(p1.in_w);
  CHECK(p1.in_tbar);
  CHECK(p1.in_fbar);
  CHECK_FALSE(p1.in_t);
  CHECK_FALSE(p1.in_f);

  MembershipFlags z = membership(rep_zero(a2), {7, -5});
  CHECK(z.in_t);
  CHECK(z.in_tbar);
  CHECK(z.in_fbar);
  CHECK(z.in_f);
  CHECK(z.in_w);
}

TEST_CASE("flag coherence and scale invariance") {
  auto a2 = fix("a2", 2);
  TestSet ts = build_testset(a2, {2, 2}, 0, 5, true);
  for (const auto& tm : ts.modules) {
    for (int d1 = -2; d1 <= 2; ++d1)
      for (int d2 = -2; d2 <= 2; ++d2) {
        MembershipFlags f = membership(tm.subdims, tm.rep.dims, {d1, d2});
        if (f.in_t) CHECK(f.in_tbar);
        if (f.in_f) CHECK(f.in_fbar);
        CHECK(f.in_w == (f.in_tbar && f.in_fbar));
        MembershipFlags g = membership(tm.subdims, tm.rep.dims, {3 * d1, 3 * d2});
        CHECK(f.in_t == g.in_t);
        CHECK(f.in_tbar == g.in_tbar);
        CHECK(f.in_fbar == g.in_fbar);
        CHECK(f.in_f == g.in_f);
      }
  }
}

TEST_CASE("limit membership witnesses") {
  auto a2 = fix("a2");
  LimitFlags s2 = limit_membership(a2, rep_simple(a2, 1), {1, -1}, 8, 16, 3);
  CHECK(s2.in_f_limit);
  CHECK(s2.witness_f == 1);

  LimitFlags s1 = limit_membership(a2, rep_simple(a2, 0), {1, -1}, 8, 16, 3);
  CHECK(s1.in_t_limit);
  CHECK(s1.witness_t == 1);
  CHECK_FALSE(s1.in_f_limit);  // hom grows with n on the positive side
  CHECK(s1.witness_f == 0);

  LimitFlags zero = limit_membership(a2, rep_projective(a2, 0), {0, 0}, 8, 16, 3);
  CHECK(zero.in_f_limit);
  CHECK(zero.in_t_limit);
  CHECK(zero.witness_f == 1);
  CHECK(zero.witness_t == 1);
}

TEST_CASE("limit flags agree with tropical flags on a slice") {
  auto small = fix("a2", 2);
  auto big = fix("a2");
  TestSet ts = build_testset(small, {2, 2}, 0, 5, true);
  std::vector<std::vector<int>> grid{{1, -1}, {-1, 1}, {1, 1}, {0, -1}, {2, 1}};
  for (const auto& tm : ts.modules)
    for (const auto& d : grid) {
      std::vector<int> nd{-d[0], -d[1]};
      bool fbar = trop_eval(tm.subdims, d) == 0;
      bool tbar = trop_eval_dual(tm.subdims, tm.rep.dims, nd) == 0;
      LimitFlags lf = limit_membership(big, tm.rep, d, 8, 16, 11);
      CHECK(lf.in_f_limit == fbar);
      CHECK(lf.in_t_limit == tbar);
    }
}

TEST_CASE("testset census over small fields") {
  auto a2 = fix("a2", 2);
  CHECK(build_testset(a2, {2, 2}, 0, 1, true).modules.size() == 13);
  CHECK(build_testset(a2, {3, 3}, 0, 1, true).modules.size() == 29);

  auto k2 = fix("k2", 3);
  CHECK(build_testset(k2, {1, 1}, 0, 1, true).modules.size() == 7);
  CHECK(build_testset(k2, {2, 2}, 0, 1, true).modules.size() == 45);

  auto a3n = fix("a3n", 2);
  CHECK(build_testset(a3n, {2, 2, 2}, 0, 1, true).modules.size() == 60);

  auto k3 = fix("k3", 2);
  CHECK(build_testset(k3, {1, 1}, 0, 1, true).modules.size() == 10);
}

TEST_CASE("testset panel and determinism") {
  auto a2 = fix("a2", 2);
  TestSet plain = build_testset(a2, {2, 2}, 0, 9, false);
  // S1, S2, P1; P2, I1, I2 are isomorphic to earlier entries
  CHECK(plain.modules.size() == 3);
  CHECK(find_module(plain, "S1") != nullptr);
  CHECK(find_module(plain, "S2") != nullptr);
  CHECK(find_module(plain, "P1") != nullptr);
  for (const auto& tm : plain.modules) {
    CHECK(!tm.subdims.empty());
    CHECK(std::find(tm.subdims.begin(), tm.subdims.end(), tm.rep.dims) !=
          tm.subdims.end());
  }

  TestSet once = build_testset(a2, {2, 2}, 6, 17, false);
  TestSet twice = build_testset(a2, {2, 2}, 6, 17, false);
  REQUIRE(once.modules.size() == twice.modules.size());
  for (size_t i = 0; i < once.modules.size(); ++i) {
    CHECK(once.modules[i].name == twice.modules[i].name);
    CHECK(once.modules[i].rep.dims == twice.modules[i].rep.dims);
  }
  for (const auto& tm : once.modules) {
    CHECK(tm.rep.dims[0] <= 2);
    CHECK(tm.rep.dims[1] <= 2);
  }

  auto k2 = fix("k2", 3);
  CHECK_THROWS_AS(build_testset(k2, {3, 3}, 0, 1, true), EnumerationCapExceeded);
}

TEST_CASE("tf equivalence on the exhaustive fixture") {
  auto a2 = fix("a2", 2);
  TestSet ts = build_testset(a2, {3, 3}, 0, 5, true);

  TfResult flip = tf_equivalent({1, -1}, {-1, 1}, ts);
  CHECK_FALSE(flip.equivalent);
  CHECK(flip.module_name == "S1");
  CHECK(flip.flag_name == "tbar");

  for (int t1 = -2; t1 <= 2; ++t1)
    for (int t2 = -2; t2 <= 2; ++t2) {
      CHECK(tf_equivalent({t1, t2}, {t1, t2}, ts).equivalent);
      CHECK(tf_equivalent({t1, t2}, {2 * t1, 2 * t2}, ts).equivalent);
    }
}

TEST_CASE("ind sets collapse multiplicities") {
  auto a2 = fix("a2");
  CHECK(ind_set(a2, {2, -1}, 16, 3).weights ==
        std::vector<std::vector<int>>{{1, -1}, {1, 0}});
  CHECK(ind_set(a2, {3, -3}, 16, 3).weights ==
        std::vector<std::vector<int>>{{1, -1}});
  CHECK(ind_set(a2, {1, 0}, 16, 3).weights ==
        std::vector<std::vector<int>>{{1, 0}});
  CHECK(ind_set(a2, {0, 0}, 16, 3).weights.empty());
}

TEST_CASE("cone samples stay in the open cone") {
  IndSet ray{{{1, -1}}};
  auto pts = cone_sample(ray, 10, 5);
  REQUIRE(pts.size() == 10);
  for (const auto& w : pts) {
    CHECK(w[0] >= 1);
    CHECK(w[0] <= 5);
    CHECK(w[1] == -w[0]);
  }

  IndSet quad{{{0, 1}, {1, 0}}};
  for (const auto& w : cone_sample(quad, 10, 5)) {
    CHECK(w[0] >= 1);
    CHECK(w[1] >= 1);
  }

  IndSet mix{{{1, -1}, {1, 0}}};
  for (const auto& w : cone_sample(mix, 10, 5)) {
    CHECK(-w[1] >= 1);          // coefficient of (1,-1)
    CHECK(w[0] + w[1] >= 1);    // coefficient of (1,0)
  }

  CHECK(cone_sample(mix, 4, 9) == cone_sample(mix, 4, 9));
  CHECK(cone_sample(IndSet{}, 3, 1).empty());
}

TEST_CASE("self e scan flags only wild weights") {
  auto a2 = fix("a2");
  CHECK(e_tame_scan(a2, 2, 12, 3).empty());

  auto k3 = fix("k3");
  auto bad = e_tame_scan(k3, 2, 12, 3);
  CHECK_FALSE(bad.empty());
  CHECK(std::find(bad.begin(), bad.end(), std::vector<int>{1, -2}) != bad.end());
  for (const auto& w : bad) CHECK_FALSE(w == std::vector<int>{0, 0});
}

}  // TEST_SUITE
