#include "qpres/rep.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>
#include <string>

#include "qpres/errors.hpp"
#include "qpres/rng.hpp"

namespace qpres {

namespace {

void require_same(const Representation& m, const Representation& n) {
  if (m.alg.get() == n.alg.get()) return;
  if (!(m.alg->spec == n.alg->spec)) throw AlgebraMismatch();
}

// vertex-major, row-major coordinates for a per-vertex matrix tuple
std::vector<uint32_t> flatten_tuple(const std::vector<Matrix>& mats) {
  std::vector<uint32_t> out;
  for (const auto& m : mats)
    out.insert(out.end(), m.a.begin(), m.a.end());
  return out;
}

}  // namespace

void check_representation(const Representation& m) {
  const Algebra& alg = *m.alg;
  if (static_cast<int>(m.dims.size()) != alg.num_vertices())
    throw ValidationError("dims", "wrong number of vertices");
  if (m.arrow_maps.size() != alg.arrows.size())
    throw ValidationError("arrow_maps", "wrong number of arrows");
  for (size_t a = 0; a < alg.arrows.size(); ++a) {
    const Matrix& mat = m.arrow_maps[a];
    if (mat.rows != m.dims[alg.arrows[a].to] || mat.cols != m.dims[alg.arrows[a].from])
      throw ValidationError("arrow_maps", "shape mismatch at arrow " + alg.arrows[a].name);
    if (mat.p != alg.fp.p) throw ValidationError("arrow_maps", "field mismatch");
  }
  auto path_product = [&](const std::vector<int>& arrows, int source) {
    Matrix acc = Matrix::identity(m.dims[source], alg.fp.p);
    for (int a : arrows) acc = mat_mul(m.arrow_maps[a], acc);
    return acc;
  };
  for (const auto& rel : alg.relations) {
    int rs = alg.arrows[rel.front().arrows.front()].from;
    int rt = alg.arrows[rel.front().arrows.back()].to;
    Matrix acc(m.dims[rt], m.dims[rs], alg.fp.p);
    for (const auto& term : rel)
      acc = mat_add(acc, mat_scale(path_product(term.arrows, rs), term.coef));
    if (!acc.is_zero())
      throw ValidationError("arrow_maps", "a relation does not act by zero");
  }
  for (const auto& pi : alg.paths) {
    if (pi.length != alg.nilpotency) continue;
    if (!path_product(pi.arrows, pi.source).is_zero())
      throw ValidationError("arrow_maps", "a full-length path acts by a nonzero matrix");
  }
}

Representation rep_zero(AlgebraPtr alg) {
  Representation m;
  m.alg = alg;
  m.dims.assign(alg->num_vertices(), 0);
  m.arrow_maps.assign(alg->arrows.size(), Matrix(0, 0, alg->fp.p));
  return m;
}

Representation rep_simple(AlgebraPtr alg, int vertex) {
  Representation m;
  m.alg = alg;
  m.dims.assign(alg->num_vertices(), 0);
  m.dims[vertex] = 1;
  for (const auto& a : alg->arrows)
    m.arrow_maps.emplace_back(m.dims[a.to], m.dims[a.from], alg->fp.p);
  return m;
}

Representation rep_projective(AlgebraPtr alg, int vertex) {
  Representation m;
  m.alg = alg;
  const int nv = alg->num_vertices();
  m.dims.resize(nv);
  // local coordinate c at vertex u is the c-th class with source `vertex`, target u
  for (int u = 0; u < nv; ++u)
    m.dims[u] = static_cast<int>(alg->basis_with(vertex, u).size());
  for (size_t a = 0; a < alg->arrows.size(); ++a) {
    int u = alg->arrows[a].from, w = alg->arrows[a].to;
    const auto& src = alg->basis_with(vertex, u);
    const auto& dst = alg->basis_with(vertex, w);
    Matrix mat(m.dims[w], m.dims[u], alg->fp.p);
    for (size_t c = 0; c < src.size(); ++c) {
      std::vector<uint32_t> prod =
          alg->mul_basis(alg->arrow_class(static_cast<int>(a)), src[c]);
      for (size_t r = 0; r < dst.size(); ++r)
        mat.at(static_cast<int>(r), static_cast<int>(c)) = prod[dst[r]];
    }
    m.arrow_maps.push_back(std::move(mat));
  }
  return m;
}

Representation dual(const Representation& m, AlgebraPtr op) {
  if (!(opposite_spec(m.alg->spec) == op->spec)) throw AlgebraMismatch();
  Representation d;
  d.alg = op;
  d.dims = m.dims;
  for (const auto& mat : m.arrow_maps) d.arrow_maps.push_back(transpose(mat));
  return d;
}

Representation rep_injective(AlgebraPtr alg, AlgebraPtr op, int vertex) {
  if (!(opposite_spec(alg->spec) == op->spec)) throw AlgebraMismatch();
  return dual(rep_projective(op, vertex), alg);
}

Matrix class_action(const Representation& m, int basis_class) {
  const Algebra& alg = *m.alg;
  const PathInfo& pi = alg.paths[alg.basis[basis_class]];
  Matrix acc = Matrix::identity(m.dims[pi.source], alg.fp.p);
  for (int a : pi.arrows) acc = mat_mul(m.arrow_maps[a], acc);
  return acc;
}

Representation direct_sum(const Representation& m, const Representation& n) {
  require_same(m, n);
  Representation s;
  s.alg = m.alg;
  const int nv = m.alg->num_vertices();
  s.dims.resize(nv);
  for (int v = 0; v < nv; ++v) s.dims[v] = m.dims[v] + n.dims[v];
  for (size_t a = 0; a < m.arrow_maps.size(); ++a) {
    const Matrix &ma = m.arrow_maps[a], &na = n.arrow_maps[a];
    Matrix mat(ma.rows + na.rows, ma.cols + na.cols, ma.p);
    for (int r = 0; r < ma.rows; ++r)
      for (int c = 0; c < ma.cols; ++c) mat.at(r, c) = ma.at(r, c);
    for (int r = 0; r < na.rows; ++r)
      for (int c = 0; c < na.cols; ++c) mat.at(ma.rows + r, ma.cols + c) = na.at(r, c);
    s.arrow_maps.push_back(std::move(mat));
  }
  return s;
}

HomBasis hom_rep(const Representation& m, const Representation& n) {
  require_same(m, n);
  const Algebra& alg = *m.alg;
  const int nv = alg.num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  const int total = off[nv];

  int crows = 0;
  for (size_t a = 0; a < alg.arrows.size(); ++a)
    crows += n.dims[alg.arrows[a].to] * m.dims[alg.arrows[a].from];
  Matrix cons(crows, total, alg.fp.p);
  int row = 0;
  for (size_t a = 0; a < alg.arrows.size(); ++a) {
    int s = alg.arrows[a].from, t = alg.arrows[a].to;
    const Matrix &ma = m.arrow_maps[a], &na = n.arrow_maps[a];
    for (int r = 0; r < n.dims[t]; ++r) {
      for (int c = 0; c < m.dims[s]; ++c) {
        // (N_a phi_s - phi_t M_a)(r, c) = 0
        for (int k = 0; k < n.dims[s]; ++k) {
          int idx = off[s] + k * m.dims[s] + c;
          cons.at(row, idx) = alg.fp.add(cons.at(row, idx), na.at(r, k));
        }
        for (int k = 0; k < m.dims[t]; ++k) {
          int idx = off[t] + r * m.dims[t] + k;
          cons.at(row, idx) = alg.fp.sub(cons.at(row, idx), ma.at(k, c));
        }
        ++row;
      }
    }
  }

  Matrix ker = kernel_basis(cons);
  HomBasis out;
  out.dim = ker.cols;
  for (int k = 0; k < ker.cols; ++k) {
    std::vector<Matrix> mats;
    for (int v = 0; v < nv; ++v) {
      Matrix phi(n.dims[v], m.dims[v], alg.fp.p);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c)
          phi.at(r, c) = ker.at(off[v] + r * m.dims[v] + c, k);
      mats.push_back(std::move(phi));
    }
    out.mats.push_back(std::move(mats));
  }
  return out;
}

Cover projective_cover(const Representation& m) {
  const Algebra& alg = *m.alg;
  const int nv = alg.num_vertices();
  Cover cover;
  cover.mult.assign(nv, 0);
  std::vector<std::vector<int>> gens(nv);  // standard-vector lifts of the top
  for (int v = 0; v < nv; ++v) {
    SpanSolver rad(alg.fp.p, m.dims[v]);
    for (size_t a = 0; a < alg.arrows.size(); ++a) {
      if (alg.arrows[a].to != v) continue;
      const Matrix& ma = m.arrow_maps[a];
      for (int c = 0; c < ma.cols; ++c) {
        std::vector<uint32_t> col(ma.rows);
        for (int r = 0; r < ma.rows; ++r) col[r] = ma.at(r, c);
        rad.insert(col);
      }
    }
    for (int k = 0; k < m.dims[v]; ++k) {
      std::vector<uint32_t> e(m.dims[v], 0);
      e[k] = 1;
      if (!rad.contains(e)) {
        rad.insert(e);
        gens[v].push_back(k);
      }
    }
    cover.mult[v] = static_cast<int>(gens[v].size());
  }

  cover.proj = rep_zero(m.alg);
  std::vector<Matrix> actions(alg.dim());
  for (int b = 0; b < alg.dim(); ++b) actions[b] = class_action(m, b);
  for (int v = 0; v < nv; ++v)
    for (int k = 0; k < cover.mult[v]; ++k)
      cover.proj = direct_sum(cover.proj, rep_projective(m.alg, v));

  for (int u = 0; u < nv; ++u) {
    Matrix epi(m.dims[u], cover.proj.dims[u], alg.fp.p);
    int col = 0;
    for (int v = 0; v < nv; ++v) {
      for (int k = 0; k < cover.mult[v]; ++k) {
        for (int w : alg.basis_with(v, u)) {
          for (int r = 0; r < m.dims[u]; ++r)
            epi.at(r, col) = actions[w].at(r, gens[v][k]);
          ++col;
        }
      }
    }
    if (rank_of(epi) != m.dims[u]) throw Error("internal: cover not surjective");
    cover.epi.push_back(std::move(epi));
  }

  cover.omega.alg = m.alg;
  cover.omega.dims.resize(nv);
  for (int v = 0; v < nv; ++v) {
    cover.incl.push_back(kernel_basis(cover.epi[v]));
    cover.omega.dims[v] = cover.incl.back().cols;
  }
  for (size_t a = 0; a < alg.arrows.size(); ++a) {
    int u = alg.arrows[a].from, w = alg.arrows[a].to;
    Matrix rhs = mat_mul(cover.proj.arrow_maps[a], cover.incl[u]);
    auto sol = solve(cover.incl[w], rhs);
    if (!sol) throw Error("internal: kernel not arrow-stable");
    cover.omega.arrow_maps.push_back(std::move(*sol));
  }
  return cover;
}

namespace {

// flattened restrictions of Hom(proj, n) along the kernel inclusion
SpanSolver restriction_span(const Cover& cover, const Representation& n,
                            const HomBasis& hom_proj_n) {
  const int nv = static_cast<int>(n.dims.size());
  int width = 0;
  for (int v = 0; v < nv; ++v) width += n.dims[v] * cover.omega.dims[v];
  SpanSolver span(n.alg->fp.p, width);
  for (const auto& phi : hom_proj_n.mats) {
    std::vector<Matrix> restr;
    for (int v = 0; v < nv; ++v) restr.push_back(mat_mul(phi[v], cover.incl[v]));
    span.insert(flatten_tuple(restr));
  }
  return span;
}

}  // namespace

int ext1(const Representation& m, const Representation& n) {
  require_same(m, n);
  if (m.is_zero() || n.is_zero()) return 0;
  Cover cover = projective_cover(m);
  if (cover.omega.is_zero()) return 0;
  HomBasis hom_omega_n = hom_rep(cover.omega, n);
  if (hom_omega_n.dim == 0) return 0;
  HomBasis hom_proj_n = hom_rep(cover.proj, n);
  SpanSolver span = restriction_span(cover, n, hom_proj_n);
  return hom_omega_n.dim - span.rank();
}

Representation extension_with_cocycle(const Representation& m, const Representation& n,
                                      const Cover& cover,
                                      const std::vector<Matrix>& cocycle) {
  require_same(m, n);
  const Algebra& alg = *m.alg;
  const int nv = alg.num_vertices();
  // ambient space at v is N_v + P_v; divide out {(c(x), -incl(x))}
  std::vector<Matrix> lifts, projs;
  Representation e;
  e.alg = m.alg;
  e.dims.resize(nv);
  for (int v = 0; v < nv; ++v) {
    int amb = n.dims[v] + cover.proj.dims[v];
    Matrix rel(amb, cover.omega.dims[v], alg.fp.p);
    for (int c = 0; c < cover.omega.dims[v]; ++c) {
      for (int r = 0; r < n.dims[v]; ++r) rel.at(r, c) = cocycle[v].at(r, c);
      for (int r = 0; r < cover.proj.dims[v]; ++r)
        rel.at(n.dims[v] + r, c) = alg.fp.neg(cover.incl[v].at(r, c));
    }
    std::vector<int> comp = standard_complement(rel);
    e.dims[v] = static_cast<int>(comp.size());
    if (e.dims[v] != n.dims[v] + m.dims[v])
      throw Error("internal: extension dimension mismatch");
    Matrix basis(amb, e.dims[v], alg.fp.p);
    for (int c = 0; c < e.dims[v]; ++c) basis.at(comp[c], c) = 1;
    Matrix full = hstack(rel, basis);
    auto inv = inverse(full);
    if (!inv) throw Error("internal: extension basis not invertible");
    Matrix q(e.dims[v], amb, alg.fp.p);
    for (int r = 0; r < e.dims[v]; ++r)
      for (int c = 0; c < amb; ++c) q.at(r, c) = inv->at(cover.omega.dims[v] + r, c);
    lifts.push_back(std::move(basis));
    projs.push_back(std::move(q));
  }
  for (size_t a = 0; a < alg.arrows.size(); ++a) {
    int u = alg.arrows[a].from, w = alg.arrows[a].to;
    int ambu = n.dims[u] + cover.proj.dims[u];
    int ambw = n.dims[w] + cover.proj.dims[w];
    Matrix diag(ambw, ambu, alg.fp.p);
    const Matrix& na = n.arrow_maps[a];
    const Matrix& pa = cover.proj.arrow_maps[a];
    for (int r = 0; r < na.rows; ++r)
      for (int c = 0; c < na.cols; ++c) diag.at(r, c) = na.at(r, c);
    for (int r = 0; r < pa.rows; ++r)
      for (int c = 0; c < pa.cols; ++c)
        diag.at(n.dims[w] + r, n.dims[u] + c) = pa.at(r, c);
    e.arrow_maps.push_back(mat_mul(projs[w], mat_mul(diag, lifts[u])));
  }
  return e;
}

Representation extension_middle(const Representation& m, const Representation& n,
                                uint64_t seed) {
  require_same(m, n);
  if (m.is_zero() || n.is_zero()) throw NoNontrivialExtension();
  Cover cover = projective_cover(m);
  HomBasis hom_omega_n = hom_rep(cover.omega, n);
  HomBasis hom_proj_n = hom_rep(cover.proj, n);
  SpanSolver span = restriction_span(cover, n, hom_proj_n);
  if (hom_omega_n.dim - span.rank() <= 0) throw NoNontrivialExtension();
  // a basis element outside the restriction image always exists here
  for (const auto& phi : hom_omega_n.mats) {
    if (!span.contains(flatten_tuple(phi)))
      return extension_with_cocycle(m, n, cover, phi);
  }
  // mix with random coefficients as a fallback
  Rng rng(derive_seed(seed, "extension_middle"));
  const Algebra& alg = *m.alg;
  for (int t = 0; t < 64; ++t) {
    std::vector<Matrix> mix;
    for (size_t v = 0; v < m.dims.size(); ++v)
      mix.emplace_back(n.dims[v], cover.omega.dims[v], alg.fp.p);
    for (const auto& phi : hom_omega_n.mats) {
      uint32_t c = alg.fp.uniform(rng);
      for (size_t v = 0; v < m.dims.size(); ++v)
        mix[v] = mat_add(mix[v], mat_scale(phi[v], c));
    }
    if (!span.contains(flatten_tuple(mix)))
      return extension_with_cocycle(m, n, cover, mix);
  }
  throw NoNontrivialExtension();
}

std::vector<Submodule> list_submodules(const Representation& m) {
  const Algebra& alg = *m.alg;
  const uint32_t q = alg.fp.p;
  const int d = m.total_dim();
  const int nv = alg.num_vertices();
  if (q != 2 && q != 3 && q != 5)
    throw EnumerationCapExceeded("field size " + std::to_string(q) +
                                 " outside the enumeration cap");
  if (d > 12)
    throw EnumerationCapExceeded("total dimension " + std::to_string(d) +
                                 " outside the enumeration cap");
  double logtotal = d * std::log2(static_cast<double>(q));
  if (logtotal > 20.0)
    throw EnumerationCapExceeded("state space too large for vector enumeration");

  std::vector<Matrix> actions(alg.dim());
  for (int b = 0; b < alg.dim(); ++b) actions[b] = class_action(m, b);

  std::vector<int> voff(nv + 1, 0);
  for (int v = 0; v < nv; ++v) voff[v + 1] = voff[v] + m.dims[v];

  auto canon_key = [&](const std::vector<Matrix>& bases) {
    std::string key;
    for (const auto& b : bases) key += matrix_key(column_space_canon(b)) + "|";
    return key;
  };
  auto spans_to_bases = [&](std::vector<SpanSolver>& spans) {
    std::vector<Matrix> bases;
    for (int v = 0; v < nv; ++v) {
      auto vecs = spans[v].basis_rows();
      Matrix b(m.dims[v], static_cast<int>(vecs.size()), q);
      for (size_t c = 0; c < vecs.size(); ++c)
        for (int r = 0; r < m.dims[v]; ++r) b.at(r, static_cast<int>(c)) = vecs[c][r];
      bases.push_back(column_space_canon_cols(b));
    }
    return bases;
  };

  std::set<std::string> seen;
  std::vector<Submodule> subs;
  auto add_sub = [&](std::vector<Matrix> bases) {
    std::string key = canon_key(bases);
    if (seen.count(key)) return false;
    seen.insert(key);
    Submodule s;
    s.bases = std::move(bases);
    s.dims.resize(nv);
    for (int v = 0; v < nv; ++v) s.dims[v] = s.bases[v].cols;
    subs.push_back(std::move(s));
    return true;
  };

  {
    std::vector<Matrix> zero;
    for (int v = 0; v < nv; ++v) zero.emplace_back(m.dims[v], 0, q);
    add_sub(std::move(zero));
  }

  // cyclic closures of every nonzero vector
  uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  std::vector<uint32_t> digits(d, 0);
  for (uint64_t code = 1; code < count; ++code) {
    uint64_t rem = code;
    for (int i = 0; i < d; ++i) {
      digits[i] = static_cast<uint32_t>(rem % q);
      rem /= q;
    }
    std::vector<SpanSolver> spans;
    for (int v = 0; v < nv; ++v) spans.emplace_back(q, m.dims[v]);
    for (int b = 0; b < alg.dim(); ++b) {
      int sv = alg.source_of(b), tv = alg.target_of(b);
      std::vector<uint32_t> comp(m.dims[sv]);
      for (int r = 0; r < m.dims[sv]; ++r) comp[r] = digits[voff[sv] + r];
      const Matrix& act = actions[b];
      std::vector<uint32_t> img(m.dims[tv], 0);
      for (int r = 0; r < m.dims[tv]; ++r) {
        uint64_t acc = 0;
        for (int c = 0; c < m.dims[sv]; ++c)
          acc += static_cast<uint64_t>(act.at(r, c)) * comp[c];
        img[r] = static_cast<uint32_t>(acc % q);
      }
      spans[tv].insert(img);
    }
    add_sub(spans_to_bases(spans));
  }

  // close under pairwise sums
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::vector<Matrix> bases;
      for (int v = 0; v < nv; ++v)
        bases.push_back(column_space_canon_cols(hstack(subs[i].bases[v], subs[j].bases[v])));
      add_sub(std::move(bases));
    }
  }

  std::stable_sort(subs.begin(), subs.end(), [&](const Submodule& x, const Submodule& y) {
    int tx = 0, ty = 0;
    for (int v = 0; v < nv; ++v) tx += x.dims[v], ty += y.dims[v];
    if (tx != ty) return tx < ty;
    if (x.dims != y.dims) return x.dims < y.dims;
    return canon_key(x.bases) < canon_key(y.bases);
  });
  return subs;
}

std::vector<std::vector<int>> submodule_dimvectors(const Representation& m) {
  std::vector<std::vector<int>> out;
  for (const auto& s : list_submodules(m)) out.push_back(s.dims);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Representation submodule_rep(const Representation& m, const Submodule& s) {
  const Algebra& alg = *m.alg;
  Representation out;
  out.alg = m.alg;
  out.dims = s.dims;
  for (size_t a = 0; a < alg.arrows.size(); ++a) {
    int u = alg.arrows[a].from, w = alg.arrows[a].to;
    auto sol = solve(s.bases[w], mat_mul(m.arrow_maps[a], s.bases[u]));
    if (!sol) throw Error("internal: subspace tuple not arrow-stable");
    out.arrow_maps.push_back(std::move(*sol));
  }
  return out;
}

Representation quotient_rep(const Representation& m, const Submodule& s) {
  const Algebra& alg = *m.alg;
  const int nv = alg.num_vertices();
  Representation out;
  out.alg = m.alg;
  out.dims.resize(nv);
  std::vector<Matrix> lifts, projs;
  for (int v = 0; v < nv; ++v) {
    std::vector<int> comp = standard_complement(s.bases[v]);
    out.dims[v] = static_cast<int>(comp.size());
    Matrix basis(m.dims[v], out.dims[v], alg.fp.p);
    for (int c = 0; c < out.dims[v]; ++c) basis.at(comp[c], c) = 1;
    Matrix full = hstack(s.bases[v], basis);
    auto inv = inverse(full);
    if (!inv) throw Error("internal: quotient basis not invertible");
    Matrix q(out.dims[v], m.dims[v], alg.fp.p);
    for (int r = 0; r < out.dims[v]; ++r)
      for (int c = 0; c < m.dims[v]; ++c)
        q.at(r, c) = inv->at(s.bases[v].cols + r, c);
    lifts.push_back(std::move(basis));
    projs.push_back(std::move(q));
  }
  for (size_t a = 0; a < alg.arrows.size(); ++a) {
    int u = alg.arrows[a].from, w = alg.arrows[a].to;
    out.arrow_maps.push_back(mat_mul(projs[w], mat_mul(m.arrow_maps[a], lifts[u])));
  }
  return out;
}

bool iso_test(const Representation& m, const Representation& n, uint64_t seed,
              int trials) {
  require_same(m, n);
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  HomBasis hom = hom_rep(m, n);
  if (hom.dim == 0) return false;
  const Fp& fp = m.alg->fp;
  auto invertible_everywhere = [&](const std::vector<Matrix>& phi) {
    for (size_t v = 0; v < m.dims.size(); ++v)
      if (rank_of(phi[v]) != m.dims[v]) return false;
    return true;
  };
  for (const auto& phi : hom.mats)
    if (invertible_everywhere(phi)) return true;

  double logtotal = hom.dim * std::log2(static_cast<double>(fp.p));
  if (logtotal <= 12.0) {
    // small search space: scan every coefficient tuple
    uint64_t count = 1;
    for (int i = 0; i < hom.dim; ++i) count *= fp.p;
    for (uint64_t code = 1; code < count; ++code) {
      uint64_t rem = code;
      std::vector<Matrix> phi;
      for (size_t v = 0; v < m.dims.size(); ++v)
        phi.emplace_back(n.dims[v], m.dims[v], fp.p);
      for (int k = 0; k < hom.dim; ++k) {
        uint32_t c = static_cast<uint32_t>(rem % fp.p);
        rem /= fp.p;
        if (!c) continue;
        for (size_t v = 0; v < m.dims.size(); ++v)
          phi[v] = mat_add(phi[v], mat_scale(hom.mats[k][v], c));
      }
      if (invertible_everywhere(phi)) return true;
    }
    return false;
  }

  Rng rng(derive_seed(seed, "iso_test"));
  for (int t = 0; t < trials; ++t) {
    std::vector<Matrix> phi;
    for (size_t v = 0; v < m.dims.size(); ++v)
      phi.emplace_back(n.dims[v], m.dims[v], fp.p);
    for (int k = 0; k < hom.dim; ++k) {
      uint32_t c = fp.uniform(rng);
      for (size_t v = 0; v < m.dims.size(); ++v)
        phi[v] = mat_add(phi[v], mat_scale(hom.mats[k][v], c));
    }
    if (invertible_everywhere(phi)) return true;
  }
  std::cerr << "iso_test: inconclusive after " << trials
            << " random combinations; reporting non-isomorphic\n";
  return false;
}

Representation lift_representation(const Representation& m, AlgebraPtr target) {
  AlgebraSpec want = m.alg->spec;
  want.field_char = target->spec.field_char;
  if (!(want == target->spec)) throw AlgebraMismatch();
  const uint32_t q = m.alg->fp.p;
  const uint32_t p = target->fp.p;
  if (q >= p) throw ValidationError("field_char", "lift requires a larger target field");

  struct Entry {
    int arrow, r, c;
    uint32_t value;
  };
  std::vector<Entry> entries;
  for (size_t a = 0; a < m.arrow_maps.size(); ++a) {
    const Matrix& mat = m.arrow_maps[a];
    for (int r = 0; r < mat.rows; ++r)
      for (int c = 0; c < mat.cols; ++c)
        if (mat.at(r, c)) entries.push_back({static_cast<int>(a), r, c, mat.at(r, c)});
  }
  if (entries.size() > 18)
    throw EnumerationCapExceeded("too many nonzero entries for signed lifting");

  const Algebra& alg = *target;
  std::vector<std::vector<int>> check_paths;  // full-length paths and relation data
  auto build_candidate = [&](uint64_t mask) {
    Representation cand;
    cand.alg = target;
    cand.dims = m.dims;
    for (size_t a = 0; a < m.arrow_maps.size(); ++a)
      cand.arrow_maps.emplace_back(m.arrow_maps[a].rows, m.arrow_maps[a].cols, p);
    for (size_t i = 0; i < entries.size(); ++i) {
      const Entry& en = entries[i];
      long long val = (mask >> i) & 1 ? static_cast<long long>(en.value) - q
                                      : static_cast<long long>(en.value);
      cand.arrow_maps[en.arrow].at(en.r, en.c) = target->fp.reduce(val);
    }
    return cand;
  };
  auto valid = [&](const Representation& cand) {
    auto path_product = [&](const std::vector<int>& arrows, int source) {
      Matrix acc = Matrix::identity(cand.dims[source], p);
      for (int a : arrows) acc = mat_mul(cand.arrow_maps[a], acc);
      return acc;
    };
    for (const auto& rel : alg.relations) {
      int rs = alg.arrows[rel.front().arrows.front()].from;
      int rt = alg.arrows[rel.front().arrows.back()].to;
      Matrix acc(cand.dims[rt], cand.dims[rs], p);
      for (const auto& term : rel)
        acc = mat_add(acc, mat_scale(path_product(term.arrows, rs), term.coef));
      if (!acc.is_zero()) return false;
    }
    for (const auto& pi : alg.paths) {
      if (pi.length != alg.nilpotency) continue;
      if (!path_product(pi.arrows, pi.source).is_zero()) return false;
    }
    return true;
  };

  uint64_t limit = 1ULL << entries.size();
  for (uint64_t mask = 0; mask < limit; ++mask) {
    Representation cand = build_candidate(mask);
    if (valid(cand)) return cand;
  }
  throw Error("no signed lift satisfies the relations");
}

}  // namespace qpres
