#include "qpres/candecomp.hpp"

#include <algorithm>
#include <map>

#include "qpres/errors.hpp"
#include "qpres/matrix.hpp"
#include "qpres/poly.hpp"

namespace qpres {

namespace {

int total_copies(const Presentation& d) {
  int s = 0;
  for (int x : d.neg) s += x;
  for (int x : d.pos) s += x;
  return s;
}

struct PairMap {
  Presentation s, t;  // s acts on the negative side, t on the positive side
};

std::vector<uint32_t> flatten_pair(const PairMap& z) {
  std::vector<uint32_t> v = flatten_map(z.s);
  std::vector<uint32_t> tv = flatten_map(z.t);
  v.insert(v.end(), tv.begin(), tv.end());
  return v;
}

struct EndBasis {
  std::vector<PairMap> basis;
  int s_coords = 0, t_coords = 0;
};

EndBasis end_basis(const Presentation& d) {
  PairSystem sys = homotopy_system(d, d);
  Matrix k = kernel_basis(sys.mat);
  EndBasis out;
  out.s_coords = sys.s_coords;
  out.t_coords = sys.t_coords;
  for (int j = 0; j < k.cols; ++j) {
    std::vector<uint32_t> sc(sys.s_coords), tc(sys.t_coords);
    for (int i = 0; i < sys.s_coords; ++i) sc[i] = k.at(i, j);
    for (int i = 0; i < sys.t_coords; ++i) tc[i] = k.at(sys.s_coords + i, j);
    out.basis.push_back({unflatten_map(d.alg, d.neg, d.neg, sc),
                         unflatten_map(d.alg, d.pos, d.pos, tc)});
  }
  return out;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  Poly g = poly_gcd(a, b);
  Poly q = poly_divmod(a, g).first;
  return poly_monic(poly_mul(q, b));
}

Poly min_poly_matrix(const Matrix& a) {
  uint32_t p = a.p;
  if (a.rows == 0) return Poly::one(p);
  int n = a.rows;
  SpanSolver span(p, n * n);
  Matrix pw = Matrix::identity(n, p);
  auto flat = [&](const Matrix& m) {
    std::vector<uint32_t> v(size_t(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v[size_t(r) * n + c] = m.at(r, c);
    return v;
  };
  Fp fp(p);
  for (int k = 0;; ++k) {
    auto dep = span.insert(flat(pw));
    if (dep) {
      std::vector<uint32_t> c(k + 1);
      for (int i = 0; i < k; ++i) c[i] = fp.neg((*dep)[i]);
      c[k] = 1;
      return Poly(p, c);
    }
    pw = mat_mul(pw, a);
  }
}

// minimal polynomial of the pair acting on the realized complex
Poly pair_min_poly(const PairMap& z) {
  Poly m = Poly::one(z.s.alg->fp.p);
  for (const Realized& rl : {realize(z.s), realize(z.t)})
    for (const Matrix& mm : rl.maps) m = poly_lcm(m, min_poly_matrix(mm));
  return m;
}

PairMap eval_poly_pair(const Poly& f, const PairMap& z, const Presentation& id_s,
                       const Presentation& id_t) {
  AlgebraPtr alg = z.s.alg;
  Fp fp(alg->fp.p);
  PairMap pw{id_s, id_t};
  std::vector<uint32_t> acc_s(flatten_map(id_s).size(), 0);
  std::vector<uint32_t> acc_t(flatten_map(id_t).size(), 0);
  for (int k = 0; k <= f.degree(); ++k) {
    uint32_t ck = f.coeff(k);
    if (ck != 0) {
      auto fs = flatten_map(pw.s);
      auto ft = flatten_map(pw.t);
      for (size_t i = 0; i < fs.size(); ++i) acc_s[i] = fp.add(acc_s[i], fp.mul(ck, fs[i]));
      for (size_t i = 0; i < ft.size(); ++i) acc_t[i] = fp.add(acc_t[i], fp.mul(ck, ft[i]));
    }
    if (k < f.degree()) {
      pw.s = compose_maps(z.s, pw.s);
      pw.t = compose_maps(z.t, pw.t);
    }
  }
  return {unflatten_map(alg, z.s.neg, z.s.neg, acc_s),
          unflatten_map(alg, z.t.neg, z.t.neg, acc_t)};
}

bool pair_equal(const PairMap& a, const PairMap& b) {
  return flatten_map(a.s) == flatten_map(b.s) && flatten_map(a.t) == flatten_map(b.t);
}

// per-vertex matrices of unit-class coefficients of a square block endo
std::vector<Matrix> top_of(const Presentation& u) {
  AlgebraPtr alg = u.alg;
  int nv = alg->num_vertices();
  uint32_t p = alg->fp.p;
  std::vector<Matrix> tau;
  int off = 0;
  for (int v = 0; v < nv; ++v) {
    int m = u.neg[v];
    const auto& hb = alg->hom_basis(v, v);
    int unit_pos = -1;
    for (size_t k = 0; k < hb.size(); ++k)
      if (hb[k] == alg->vertex_unit(v)) unit_pos = static_cast<int>(k);
    Matrix t(m, m, p);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) t.at(r, c) = u.blocks[off + r][off + c][unit_pos];
    tau.push_back(std::move(t));
    off += m;
  }
  return tau;
}

std::vector<int> all_indices(const std::vector<int>& mult) {
  int total = 0;
  for (int x : mult) total += x;
  std::vector<int> idx(total);
  for (int i = 0; i < total; ++i) idx[i] = i;
  return idx;
}

// u restricted to selected copies on both sides
Presentation submap(const Presentation& u, const std::vector<int>& rows,
                    const std::vector<int>& row_mult, const std::vector<int>& cols,
                    const std::vector<int>& col_mult) {
  Presentation out = zero_map(u.alg, col_mult, row_mult);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out.blocks[i][j] = u.blocks[rows[i]][cols[j]];
  return out;
}

struct Sel {
  std::vector<int> rows, cols;  // global copy indices
  std::vector<int> mult;        // per-vertex rank of the top idempotent
};

// per-vertex row and column selections with tau[rows, cols] invertible
Sel select_for(const std::vector<Matrix>& tau, const std::vector<int>& mult) {
  Sel sel;
  sel.mult.assign(mult.size(), 0);
  int off = 0;
  for (size_t v = 0; v < mult.size(); ++v) {
    RrefResult byc = rref_rank(tau[v]);
    Matrix sub(tau[v].rows, byc.rank, tau[v].p);
    for (int r = 0; r < tau[v].rows; ++r)
      for (int j = 0; j < byc.rank; ++j) sub.at(r, j) = tau[v].at(r, byc.pivots[j]);
    RrefResult byr = rref_rank(transpose(sub));
    sel.mult[v] = byc.rank;
    for (int j : byc.pivots) sel.cols.push_back(off + j);
    for (int i : byr.pivots) sel.rows.push_back(off + i);
    off += mult[v];
  }
  return sel;
}

Presentation invert_block_endo(const Presentation& u) {
  AlgebraPtr alg = u.alg;
  const std::vector<int>& mult = u.neg;
  int n = map_coords(u);
  if (n == 0) return u;
  Matrix m(n, n, alg->fp.p);
  std::vector<uint32_t> e(n, 0);
  for (int j = 0; j < n; ++j) {
    e[j] = 1;
    auto col = flatten_map(compose_maps(u, unflatten_map(alg, mult, mult, e)));
    for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
    e[j] = 0;
  }
  auto idv = flatten_map(identity_map(alg, mult));
  Matrix b(n, 1, alg->fp.p);
  for (int i = 0; i < n; ++i) b.at(i, 0) = idv[i];
  auto x = solve(m, b);
  if (!x) throw Error("block endomorphism with invertible top is not invertible");
  std::vector<uint32_t> xv(n);
  for (int i = 0; i < n; ++i) xv[i] = x->at(i, 0);
  Presentation inv = unflatten_map(alg, mult, mult, xv);
  if (flatten_map(compose_maps(inv, u)) != idv)
    throw Error("one-sided inverse of a block endomorphism");
  return inv;
}

struct Summand {
  Presentation d1;            // the cut presentation
  Presentation iota_s, iota_t;  // chain map of the cut into d
};

/* Cuts the summand of d carried by the idempotent pair pi: split injections
   are columns of pi at copies where its top has full rank, retractions come
   from inverting the selected square block. */
Summand cut_summand(const Presentation& d, const PairMap& pi) {
  Sel cs = select_for(top_of(pi.s), d.neg);
  Sel ct = select_for(top_of(pi.t), d.pos);

  Presentation iota_s = submap(pi.s, all_indices(d.neg), d.neg, cs.cols, cs.mult);
  Presentation iota_t = submap(pi.t, all_indices(d.pos), d.pos, ct.cols, ct.mult);

  Presentation core_s = submap(pi.s, cs.rows, cs.mult, cs.cols, cs.mult);
  Presentation core_t = submap(pi.t, ct.rows, ct.mult, ct.cols, ct.mult);
  Presentation rho_s = compose_maps(invert_block_endo(core_s),
                                    submap(pi.s, cs.rows, cs.mult, all_indices(d.neg), d.neg));
  Presentation rho_t = compose_maps(invert_block_endo(core_t),
                                    submap(pi.t, ct.rows, ct.mult, all_indices(d.pos), d.pos));

  if (flatten_map(compose_maps(rho_s, iota_s)) != flatten_map(identity_map(d.alg, cs.mult)) ||
      flatten_map(compose_maps(rho_t, iota_t)) != flatten_map(identity_map(d.alg, ct.mult)))
    throw Error("summand retraction failed");

  Summand out{compose_maps(rho_t, compose_maps(d, iota_s)), iota_s, iota_t};
  // the cut must embed as a chain map: d after iota_s = iota_t after d1
  if (flatten_map(compose_maps(d, iota_s)) != flatten_map(compose_maps(out.iota_t, out.d1)))
    throw Error("summand is not a subcomplex");
  return out;
}

PairMap random_end_element(const EndBasis& eb,
                           const std::vector<std::vector<uint32_t>>& flats,
                           const Presentation& zs, const Presentation& zt, Rng& rng) {
  Fp fp(zs.alg->fp.p);
  std::vector<uint32_t> acc(eb.s_coords + eb.t_coords, 0);
  for (const auto& f : flats) {
    uint32_t c = fp.uniform(rng);
    if (c == 0) continue;
    for (size_t i = 0; i < f.size(); ++i) acc[i] = fp.add(acc[i], fp.mul(c, f[i]));
  }
  std::vector<uint32_t> sc(acc.begin(), acc.begin() + eb.s_coords);
  std::vector<uint32_t> tc(acc.begin() + eb.s_coords, acc.end());
  return {unflatten_map(zs.alg, zs.neg, zs.neg, sc),
          unflatten_map(zt.alg, zt.neg, zt.neg, tc)};
}

void rec_split(const Presentation& d, Rng& rng, int trials,
               std::vector<SplitPiece>& out) {
  if (total_copies(d) == 0) return;
  EndBasis eb = end_basis(d);
  if (static_cast<int>(eb.basis.size()) <= 1) {
    out.push_back({d, 1});  // scalars only
    return;
  }
  Presentation id_s = identity_map(d.alg, d.neg);
  Presentation id_t = identity_map(d.alg, d.pos);
  std::vector<std::vector<uint32_t>> flats;
  for (const auto& pm : eb.basis) flats.push_back(flatten_pair(pm));

  int fails = 0, max_degree = 1;
  while (fails < trials) {
    PairMap z = random_end_element(eb, flats, id_s, id_t, rng);
    Poly mu = pair_min_poly(z);
    auto factors = poly_factor(mu, rng.next());
    if (factors.size() < 2) {
      if (!factors.empty()) max_degree = std::max(max_degree, factors[0].first.degree());
      ++fails;
      continue;
    }
    Poly g = Poly::one(mu.p);
    for (int i = 0; i < factors[0].second; ++i) g = poly_mul(g, factors[0].first);
    Poly h = poly_divmod(mu, g).first;
    Bezout bz = poly_bezout(g, h);
    if (!(bz.g == Poly::one(mu.p))) {
      ++fails;
      continue;
    }
    PairMap pi = eval_poly_pair(poly_mod(poly_mul(bz.v, h), mu), z, id_s, id_t);
    PairMap pi2{compose_maps(pi.s, pi.s), compose_maps(pi.t, pi.t)};
    bool idem = pair_equal(pi2, pi) &&
                flatten_map(compose_maps(d, pi.s)) == flatten_map(compose_maps(pi.t, d));
    bool proper = !pair_equal(pi, {zero_map(d.alg, d.neg, d.neg), zero_map(d.alg, d.pos, d.pos)}) &&
                  !pair_equal(pi, {id_s, id_t});
    if (!idem || !proper) {
      ++fails;
      continue;
    }
    PairMap co{map_sub(id_s, pi.s), map_sub(id_t, pi.t)};
    Summand a = cut_summand(d, pi);
    Summand b = cut_summand(d, co);
    if (total_copies(a.d1) + total_copies(b.d1) != total_copies(d))
      throw Error("summand copies fail to add up");
    rec_split(a.d1, rng, trials, out);
    rec_split(b.d1, rng, trials, out);
    return;
  }
  out.push_back({d, max_degree});
}

uint64_t fold_weight(uint64_t seed, const std::vector<int>& w) {
  uint64_t h = seed;
  for (int x : w) h = derive_seed(h, static_cast<uint64_t>(static_cast<int64_t>(x)));
  return h;
}

bool is_zero_weight(const std::vector<int>& w) {
  for (int x : w)
    if (x != 0) return false;
  return true;
}

struct Resolver {
  AlgebraPtr alg;
  int samples;
  uint64_t seed;
  int trials;
  std::map<std::vector<int>, std::vector<std::vector<int>>> memo;

  std::vector<std::vector<int>> resolve(const std::vector<int>& w, int* agree) {
    if (is_zero_weight(w)) {
      if (agree) *agree = samples;
      return {};
    }
    if (!agree) {
      auto it = memo.find(w);
      if (it != memo.end()) return it->second;
    }
    uint64_t wseed = fold_weight(derive_seed(seed, "cand"), w);
    std::map<std::vector<std::vector<int>>, int> votes;
    for (int t = 0; t < samples; ++t) {
      Presentation d = sample_presentation(alg, w, derive_seed(wseed, "draw", t));
      auto pieces = split_pieces(d, derive_seed(wseed, "chain", t), trials);
      std::vector<std::vector<int>> ms;
      for (const auto& pc : pieces) {
        std::vector<int> pw = pc.pres.weight();
        int e = pc.residue_degree;
        bool divisible = e >= 2;
        for (int x : pw) divisible = divisible && x % e == 0;
        if (divisible) {
          std::vector<int> base(pw.size());
          for (size_t i = 0; i < pw.size(); ++i) base[i] = pw[i] / e;
          auto sub = resolve(base, nullptr);
          for (int r = 0; r < e; ++r) ms.insert(ms.end(), sub.begin(), sub.end());
        } else {
          ms.push_back(pw);
        }
      }
      std::sort(ms.begin(), ms.end());
      ++votes[ms];
    }
    std::vector<std::vector<int>> best;
    int best_count = -1;
    for (const auto& [ms, count] : votes)
      if (count > best_count) {
        best = ms;
        best_count = count;
      }
    if (2 * best_count < samples) throw CanonicalInconsistent(best_count, samples);
    if (agree) *agree = best_count;
    memo[w] = best;
    return best;
  }
};

std::string weight_string(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace

EndAlgebra end_algebra(const Presentation& d) {
  EndAlgebra out;
  if (total_copies(d) == 0) return out;
  EndBasis eb = end_basis(d);
  out.dimension = static_cast<int>(eb.basis.size());
  for (const auto& pm : eb.basis) out.basis.emplace_back(pm.s, pm.t);
  SpanSolver span(d.alg->fp.p, eb.s_coords + eb.t_coords);
  for (const auto& pm : eb.basis)
    if (span.insert(flatten_pair(pm))) throw Error("dependent endomorphism basis");
  out.structure.resize(out.dimension);
  for (int i = 0; i < out.dimension; ++i) {
    out.structure[i].resize(out.dimension);
    for (int j = 0; j < out.dimension; ++j) {
      PairMap prod{compose_maps(eb.basis[i].s, eb.basis[j].s),
                   compose_maps(eb.basis[i].t, eb.basis[j].t)};
      auto coords = span.express(flatten_pair(prod));
      if (!coords) throw Error("endomorphism pairs not closed under composition");
      out.structure[i][j] = *coords;
    }
  }
  return out;
}

std::vector<SplitPiece> split_pieces(const Presentation& d, uint64_t seed, int trials) {
  for (size_t v = 0; v < d.neg.size(); ++v)
    if (d.neg[v] > 0 && d.pos[v] > 0) throw NotReduced();
  std::vector<SplitPiece> out;
  Rng rng(derive_seed(seed, "split"));
  rec_split(d, rng, trials, out);
  return out;
}

std::vector<Presentation> split_presentation(const Presentation& d, uint64_t seed,
                                             int trials) {
  std::vector<Presentation> out;
  for (auto& pc : split_pieces(d, seed, trials)) out.push_back(std::move(pc.pres));
  return out;
}

Decomposition canonical_decomposition(AlgebraPtr alg, const std::vector<int>& delta,
                                      int samples, uint64_t seed, int trials) {
  Resolver rs{alg, samples, seed, trials, {}};
  Decomposition out;
  out.samples = samples;
  out.agree_den = samples;
  out.summands = rs.resolve(delta, &out.agree_num);
  return out;
}

bool verify_canonical(AlgebraPtr alg, const std::vector<std::vector<int>>& candidate,
                      int samples, uint64_t seed) {
  if (candidate.empty()) return false;
  const int trials = 24;
  std::map<std::vector<int>, bool> indec;
  for (const auto& w : candidate)
    if (!indec.count(w)) {
      try {
        Decomposition sub = canonical_decomposition(
            alg, w, samples, fold_weight(derive_seed(seed, "indec"), w), trials);
        indec[w] = sub.summands.size() == 1 && sub.summands[0] == w;
      } catch (const CanonicalInconsistent&) {
        indec[w] = false;
      }
    }
  for (const auto& [w, ok] : indec)
    if (!ok) return false;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> pair_e;
  for (size_t i = 0; i < candidate.size(); ++i)
    for (size_t j = 0; j < candidate.size(); ++j) {
      if (i == j) continue;
      auto key = std::make_pair(candidate[i], candidate[j]);
      auto it = pair_e.find(key);
      if (it == pair_e.end()) {
        uint64_t s = fold_weight(fold_weight(derive_seed(seed, "pair"), candidate[i]),
                                 candidate[j]);
        it = pair_e.emplace(key, e_generic_pair(alg, candidate[i], candidate[j], samples, s))
                 .first;
      }
      if (it->second != 0) return false;
    }
  return true;
}

std::string to_string(WeightTag tag) {
  switch (tag) {
    case WeightTag::Real: return "real";
    case WeightTag::Tame: return "tame";
    default: return "wild";
  }
}

WeightClass weight_class_of(AlgebraPtr alg, const std::vector<int>& delta, int samples,
                            uint64_t seed) {
  WeightClass out;
  for (int t = 0; t < samples; ++t) {
    uint64_t ds = derive_seed(seed, "rigid", t);
    Presentation d = sample_presentation(alg, delta, ds);
    if (E_hom(d, d) == 0) {
      out.tag = WeightTag::Real;
      out.witness = ds;
      return out;
    }
  }
  int e = e_generic_pair(alg, delta, delta, samples, derive_seed(seed, "pair"));
  out.tag = e == 0 ? WeightTag::Tame : WeightTag::Wild;
  out.witness = static_cast<uint64_t>(e);
  return out;
}

WeightTag weight_tag(AlgebraPtr alg, const std::vector<int>& delta, int samples,
                     uint64_t seed) {
  return weight_class_of(alg, delta, samples, seed).tag;
}

WeightClass classify_weight(AlgebraPtr alg, const std::vector<int>& delta, int samples,
                            uint64_t seed) {
  Decomposition dec =
      canonical_decomposition(alg, delta, samples, derive_seed(seed, "indec"), 24);
  if (dec.summands.size() != 1 || dec.summands[0] != delta)
    throw NotIndecomposable(weight_string(delta));
  return weight_class_of(alg, delta, samples, seed);
}

}  // namespace qpres
