#include "qpres/stability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "qpres/errors.hpp"
#include "qpres/rng.hpp"

namespace qpres {

namespace {

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

std::vector<int> scaled(const std::vector<int>& v, int n) {
  std::vector<int> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = n * v[i];
  return r;
}

bool all_zero(const std::vector<int>& v) {
  for (int x : v)
    if (x) return false;
  return true;
}

uint64_t fold_weight(uint64_t seed, const std::vector<int>& w) {
  for (int c : w)
    seed = derive_seed(seed, static_cast<uint64_t>(static_cast<int64_t>(c)));
  return seed;
}

}  // namespace

MembershipFlags membership(const DimSet& subdims, const std::vector<int>& total,
                           const std::vector<int>& delta) {
  MembershipFlags f;
  f.in_fbar = trop_eval(subdims, delta) == 0;
  f.in_tbar = trop_eval_dual(subdims, total, negated(delta)) == 0;
  f.in_f = true;
  f.in_t = true;
  long long whole = dot(total, delta);
  for (const auto& v : subdims) {
    long long s = dot(v, delta);
    if (!all_zero(v) && s >= 0) f.in_f = false;
    if (v != total && whole - s <= 0) f.in_t = false;
  }
  f.in_w = f.in_tbar && f.in_fbar;
  return f;
}

MembershipFlags membership(const Representation& m, const std::vector<int>& delta) {
  return membership(submodule_dimvectors(m), m.dims, delta);
}

LimitFlags limit_membership(AlgebraPtr alg, const Representation& m,
                            const std::vector<int>& delta, int n_max, int samples,
                            uint64_t seed) {
  LimitFlags out;
  const Representation& big =
      m.alg->spec == alg->spec ? m : lift_representation(m, alg);
  long long s = dot(delta, m.dims);
  // hom - e = n * s at every level, so a strict sign settles one side for free
  bool f_possible = s <= 0;
  bool t_possible = s >= 0;
  for (int n = 1; n <= n_max; ++n) {
    bool need_f = f_possible && !out.in_f_limit;
    bool need_t = t_possible && !out.in_t_limit;
    if (!need_f && !need_t) break;
    HomEPair he =
        hom_e_generic(alg, scaled(delta, n), big, samples, derive_seed(seed, "limit", n));
    if (need_f && he.hom == 0) {
      out.in_f_limit = true;
      out.witness_f = n;
    }
    if (need_t && he.e == 0) {
      out.in_t_limit = true;
      out.witness_t = n;
    }
  }
  return out;
}

namespace {

// does the matrix tuple satisfy every relation and kill full-length paths
bool respects_relations(const Algebra& alg, const std::vector<int>& dims,
                        const std::vector<Matrix>& maps) {
  auto path_product = [&](const std::vector<int>& arrows, int source) {
    Matrix acc = Matrix::identity(dims[source], alg.fp.p);
    for (int a : arrows) acc = mat_mul(maps[a], acc);
    return acc;
  };
  for (const auto& rel : alg.relations) {
    int rs = alg.arrows[rel.front().arrows.front()].from;
    int rt = alg.arrows[rel.front().arrows.back()].to;
    Matrix acc(dims[rt], dims[rs], alg.fp.p);
    for (const auto& term : rel)
      acc = mat_add(acc, mat_scale(path_product(term.arrows, rs), term.coef));
    if (!acc.is_zero()) return false;
  }
  for (const auto& pi : alg.paths) {
    if (pi.length != alg.nilpotency) continue;
    if (!path_product(pi.arrows, pi.source).is_zero()) return false;
  }
  return true;
}

struct Deduper {
  AlgebraPtr alg;
  std::vector<Representation> panel;  // simples, for hom signatures
  std::map<std::string, std::vector<int>> buckets;
  uint64_t seed;
  uint64_t probe = 0;

  std::string signature(const Representation& r) const {
    std::string key;
    for (int d : r.dims) key += std::to_string(d) + ",";
    key += ";";
    for (const auto& s : panel) {
      key += std::to_string(hom_rep(s, r).dim) + ",";
      key += std::to_string(hom_rep(r, s).dim) + ",";
    }
    key += ";" + std::to_string(hom_rep(r, r).dim);
    return key;
  }

  // true when r is new; the caller then stores it at position `index`
  bool admit(const std::vector<TaggedModule>& pool, const Representation& r,
             int index) {
    std::string key = signature(r);
    int end_dim = hom_rep(r, r).dim;
    auto& bucket = buckets[key];
    for (int idx : bucket) {
      const Representation& kept = pool[idx].rep;
      // an isomorphism makes Hom(r, kept) a free End-torsor, so the
      // dimensions must agree; cheap reject before the randomized search
      if (hom_rep(r, kept).dim != end_dim) continue;
      if (iso_test(r, kept, derive_seed(seed, "dedup", probe++), 600)) return false;
    }
    bucket.push_back(index);
    return true;
  }
};

}  // namespace

TestSet build_testset(AlgebraPtr alg, const std::vector<int>& dim_cap, int count,
                      uint64_t seed, bool exhaustive) {
  const int nv = alg->num_vertices();
  if (static_cast<int>(dim_cap.size()) != nv)
    throw ValidationError("dim_cap", "needs one bound per vertex");
  TestSet ts;
  ts.alg = alg;

  Deduper dedup;
  dedup.alg = alg;
  dedup.seed = derive_seed(seed, "iso");
  for (int v = 0; v < nv; ++v) dedup.panel.push_back(rep_simple(alg, v));

  auto within_cap = [&](const std::vector<int>& dims) {
    for (int v = 0; v < nv; ++v)
      if (dims[v] > dim_cap[v]) return false;
    return true;
  };
  // the cap bounds every entry, named panel modules included, so the testset
  // is exactly a set of isomorphism classes inside the cap
  auto try_add = [&](const std::string& name, const std::string& tag,
                     Representation r) {
    if (r.is_zero() || !within_cap(r.dims)) return false;
    if (!dedup.admit(ts.modules, r, static_cast<int>(ts.modules.size())))
      return false;
    ts.modules.push_back({name, tag, std::move(r), {}});
    return true;
  };

  for (int v = 0; v < nv; ++v)
    try_add("S" + std::to_string(v + 1), "simple", rep_simple(alg, v));
  for (int v = 0; v < nv; ++v)
    try_add("P" + std::to_string(v + 1), "projective", rep_projective(alg, v));
  AlgebraPtr op = opposite_algebra(*alg);
  for (int v = 0; v < nv; ++v)
    try_add("I" + std::to_string(v + 1), "injective-dual", rep_injective(alg, op, v));

  int got = 0;
  for (int t = 0; got < count && t < 30 * count + 60; ++t) {
    Rng wrng(derive_seed(seed, "wt", t));
    std::vector<int> w(nv);
    for (int v = 0; v < nv; ++v)
      w[v] = static_cast<int>(wrng.below(2 * dim_cap[v] + 1)) - dim_cap[v];
    if (all_zero(w)) continue;
    Representation r = cokernel(sample_presentation(alg, w, derive_seed(seed, "coker", t)));
    if (r.is_zero() || !within_cap(r.dims)) continue;
    if (try_add("C" + std::to_string(got), "sampled-cokernel", std::move(r))) ++got;
  }

  size_t pool_end = ts.modules.size();
  got = 0;
  for (int t = 0; got < count && t < 30 * count + 60 && pool_end > 0; ++t) {
    Rng erng(derive_seed(seed, "extpick", t));
    const Representation& a = ts.modules[erng.below(pool_end)].rep;
    const Representation& b = ts.modules[erng.below(pool_end)].rep;
    std::vector<int> sum(nv);
    for (int v = 0; v < nv; ++v) sum[v] = a.dims[v] + b.dims[v];
    if (!within_cap(sum)) continue;
    if (ext1(a, b) == 0) continue;
    Representation mid = extension_middle(a, b, derive_seed(seed, "ext", t));
    if (try_add("E" + std::to_string(got), "extension", std::move(mid))) ++got;
  }

  if (exhaustive) {
    uint64_t q = alg->fp.p;
    long long cap_entries = 0;
    for (const auto& a : alg->arrows)
      cap_entries += static_cast<long long>(dim_cap[a.from]) * dim_cap[a.to];
    double bits = static_cast<double>(cap_entries) * std::log2(static_cast<double>(q));
    if (bits > 20.0)
      throw EnumerationCapExceeded("exhaustive testset needs " +
                                   std::to_string(cap_entries) +
                                   " matrix entries over F_" + std::to_string(q));

    int kept = 0;
    std::vector<int> dims(nv, 0);
    while (true) {
      // advance the dims odometer
      int pos = 0;
      while (pos < nv && dims[pos] == dim_cap[pos]) dims[pos++] = 0;
      if (pos == nv) break;
      ++dims[pos];

      long long entries = 0;
      std::vector<std::pair<int, int>> shapes;
      for (const auto& a : alg->arrows) {
        shapes.emplace_back(dims[a.to], dims[a.from]);
        entries += static_cast<long long>(dims[a.to]) * dims[a.from];
      }
      uint64_t total = 1;
      for (long long i = 0; i < entries; ++i) total *= q;
      for (uint64_t code = 0; code < total; ++code) {
        std::vector<Matrix> maps;
        uint64_t rem = code;
        for (const auto& [r, c] : shapes) {
          Matrix m(r, c, alg->fp.p);
          for (auto& x : m.a) {
            x = static_cast<uint32_t>(rem % q);
            rem /= q;
          }
          maps.push_back(std::move(m));
        }
        if (!respects_relations(*alg, dims, maps)) continue;
        Representation r{alg, dims, std::move(maps)};
        if (try_add("X" + std::to_string(kept), "exhaustive", std::move(r))) ++kept;
      }
    }
  }

  for (auto& tm : ts.modules) tm.subdims = submodule_dimvectors(tm.rep);
  return ts;
}

TfResult tf_equivalent(const std::vector<int>& theta, const std::vector<int>& eta,
                       const TestSet& ts) {
  std::vector<int> nth = negated(theta), net = negated(eta);
  for (const auto& tm : ts.modules) {
    bool tb_th = trop_eval_dual(tm.subdims, tm.rep.dims, nth) == 0;
    bool tb_et = trop_eval_dual(tm.subdims, tm.rep.dims, net) == 0;
    if (tb_th != tb_et) return {false, tm.name, "tbar"};
    bool fb_th = trop_eval(tm.subdims, theta) == 0;
    bool fb_et = trop_eval(tm.subdims, eta) == 0;
    if (fb_th != fb_et) return {false, tm.name, "fbar"};
  }
  return {true, "", ""};
}

IndSet ind_set(AlgebraPtr alg, const std::vector<int>& theta, int samples,
               uint64_t seed) {
  IndSet out;
  if (all_zero(theta)) return out;
  Decomposition d = canonical_decomposition(alg, theta, samples, seed, 24);
  for (const auto& w : d.summands)
    if (out.weights.empty() || out.weights.back() != w) out.weights.push_back(w);
  return out;
}

std::vector<std::vector<int>> cone_sample(const IndSet& ind, int k, uint64_t seed) {
  std::vector<std::vector<int>> out;
  if (ind.weights.empty()) return out;
  Rng rng(derive_seed(seed, "cone"));
  size_t nv = ind.weights[0].size();
  for (int t = 0; t < k; ++t) {
    std::vector<int> w(nv, 0);
    for (const auto& wi : ind.weights) {
      int p = 1 + static_cast<int>(rng.below(5));
      for (size_t i = 0; i < nv; ++i) w[i] += p * wi[i];
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::vector<int>> e_tame_scan(AlgebraPtr alg, int bound, int samples,
                                          uint64_t seed) {
  const int nv = alg->num_vertices();
  uint64_t base = derive_seed(seed, "scan");
  std::vector<std::vector<int>> bad;
  std::vector<int> theta(nv, -bound);
  while (true) {
    if (!all_zero(theta)) {
      int e = e_generic_pair(alg, theta, theta, samples, fold_weight(base, theta));
      if (e > 0) bad.push_back(theta);
    }
    int pos = nv - 1;
    while (pos >= 0 && theta[pos] == bound) theta[pos--] = -bound;
    if (pos < 0) break;
    ++theta[pos];
  }
  return bad;
}

}  // namespace qpres
