#include "qpres/present.hpp"

#include <algorithm>

#include "qpres/errors.hpp"

namespace qpres {

namespace {

void require_same(const Presentation& x, const Presentation& y) {
  if (x.alg.get() == y.alg.get()) return;
  if (!(x.alg->spec == y.alg->spec)) throw AlgebraMismatch();
}

const std::vector<int>& hom_basis_of(const Presentation& x, int col_v, int row_v) {
  return x.alg->hom_basis(col_v, row_v);
}

}  // namespace

std::vector<int> copies_of(const std::vector<int>& mult) {
  std::vector<int> out;
  for (size_t v = 0; v < mult.size(); ++v)
    for (int k = 0; k < mult[v]; ++k) out.push_back(static_cast<int>(v));
  return out;
}

Presentation zero_map(AlgebraPtr alg, std::vector<int> neg, std::vector<int> pos) {
  Presentation x;
  x.alg = alg;
  x.neg = std::move(neg);
  x.pos = std::move(pos);
  auto rows = copies_of(x.pos), cols = copies_of(x.neg);
  x.blocks.resize(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    x.blocks[r].resize(cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
      x.blocks[r][c].assign(alg->hom_basis(cols[c], rows[r]).size(), 0);
  }
  return x;
}

Presentation identity_map(AlgebraPtr alg, const std::vector<int>& mult) {
  Presentation x = zero_map(alg, mult, mult);
  auto rows = copies_of(mult);
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& hb = alg->hom_basis(rows[r], rows[r]);
    for (size_t k = 0; k < hb.size(); ++k)
      if (hb[k] == alg->vertex_unit(rows[r])) x.blocks[r][r][k] = 1;
  }
  return x;
}

Presentation random_map(AlgebraPtr alg, std::vector<int> neg, std::vector<int> pos,
                        Rng& rng) {
  Presentation x = zero_map(alg, std::move(neg), std::move(pos));
  for (auto& row : x.blocks)
    for (auto& blk : row)
      for (auto& coeff : blk) coeff = alg->fp.uniform(rng);
  return x;
}

Presentation sample_presentation(AlgebraPtr alg, const std::vector<int>& delta,
                                 uint64_t seed) {
  std::vector<int> neg(delta.size()), pos(delta.size());
  for (size_t v = 0; v < delta.size(); ++v) {
    pos[v] = std::max(delta[v], 0);
    neg[v] = std::max(-delta[v], 0);
  }
  Rng rng(derive_seed(seed, "presentation"));
  return random_map(alg, std::move(neg), std::move(pos), rng);
}

Presentation compose_maps(const Presentation& x, const Presentation& y) {
  require_same(x, y);
  if (y.pos != x.neg) throw Error("block map composition shape mismatch");
  const Algebra& alg = *x.alg;
  Presentation z = zero_map(x.alg, y.neg, x.pos);
  auto zr = copies_of(z.pos), zc = copies_of(z.neg), mid = copies_of(x.neg);
  for (size_t r = 0; r < zr.size(); ++r) {
    for (size_t c = 0; c < zc.size(); ++c) {
      const auto& out_basis = hom_basis_of(z, zc[c], zr[r]);
      std::vector<uint32_t> acc(alg.dim(), 0);
      bool any = false;
      for (size_t m = 0; m < mid.size(); ++m) {
        const auto& xb = x.blocks[r][m];
        const auto& yb = y.blocks[m][c];
        const auto& xbasis = hom_basis_of(x, mid[m], zr[r]);
        const auto& ybasis = hom_basis_of(y, zc[c], mid[m]);
        for (size_t i = 0; i < xb.size(); ++i) {
          if (!xb[i]) continue;
          for (size_t j = 0; j < yb.size(); ++j) {
            if (!yb[j]) continue;
            // x after y corresponds to the product hat(y) * hat(x)
            std::vector<uint32_t> prod = alg.mul_basis(ybasis[j], xbasis[i]);
            uint32_t f = alg.fp.mul(xb[i], yb[j]);
            for (int k = 0; k < alg.dim(); ++k)
              if (prod[k]) {
                acc[k] = alg.fp.add(acc[k], alg.fp.mul(f, prod[k]));
                any = true;
              }
          }
        }
      }
      if (any)
        for (size_t i = 0; i < out_basis.size(); ++i) z.blocks[r][c][i] = acc[out_basis[i]];
    }
  }
  return z;
}

Presentation map_sub(const Presentation& x, const Presentation& y) {
  require_same(x, y);
  if (x.neg != y.neg || x.pos != y.pos) throw Error("block map shape mismatch in sub");
  Presentation z = x;
  for (size_t r = 0; r < z.blocks.size(); ++r)
    for (size_t c = 0; c < z.blocks[r].size(); ++c)
      for (size_t i = 0; i < z.blocks[r][c].size(); ++i)
        z.blocks[r][c][i] = x.alg->fp.sub(z.blocks[r][c][i], y.blocks[r][c][i]);
  return z;
}

int map_coords(const Presentation& x) {
  int n = 0;
  for (const auto& row : x.blocks)
    for (const auto& blk : row) n += static_cast<int>(blk.size());
  return n;
}

std::vector<uint32_t> flatten_map(const Presentation& x) {
  std::vector<uint32_t> out;
  for (const auto& row : x.blocks)
    for (const auto& blk : row) out.insert(out.end(), blk.begin(), blk.end());
  return out;
}

Presentation unflatten_map(AlgebraPtr alg, const std::vector<int>& neg,
                           const std::vector<int>& pos,
                           const std::vector<uint32_t>& coords) {
  Presentation x = zero_map(alg, neg, pos);
  size_t idx = 0;
  for (auto& row : x.blocks)
    for (auto& blk : row)
      for (auto& coeff : blk) {
        if (idx >= coords.size()) throw Error("unflatten size mismatch");
        coeff = coords[idx++];
      }
  if (idx != coords.size()) throw Error("unflatten size mismatch");
  return x;
}

Realized realize(const Presentation& d) {
  const Algebra& alg = *d.alg;
  const int nv = alg.num_vertices();
  Realized out;
  out.source = rep_zero(d.alg);
  out.target = rep_zero(d.alg);
  auto cols = copies_of(d.neg), rows = copies_of(d.pos);
  for (int v : cols) out.source = direct_sum(out.source, rep_projective(d.alg, v));
  for (int v : rows) out.target = direct_sum(out.target, rep_projective(d.alg, v));

  // vertex-local offsets of each copy inside the realized sums
  auto offsets = [&](const std::vector<int>& copy_vs) {
    std::vector<std::vector<int>> off(copy_vs.size(), std::vector<int>(nv, 0));
    std::vector<int> run(nv, 0);
    for (size_t k = 0; k < copy_vs.size(); ++k) {
      off[k] = run;
      for (int u = 0; u < nv; ++u)
        run[u] += static_cast<int>(alg.basis_with(copy_vs[k], u).size());
    }
    return off;
  };
  auto coff = offsets(cols), roff = offsets(rows);

  for (int u = 0; u < nv; ++u) {
    Matrix mat(out.target.dims[u], out.source.dims[u], alg.fp.p);
    for (size_t c = 0; c < cols.size(); ++c) {
      const auto& src_basis = alg.basis_with(cols[c], u);
      for (size_t r = 0; r < rows.size(); ++r) {
        const auto& blk = d.blocks[r][c];
        const auto& hb = alg.hom_basis(cols[c], rows[r]);
        const auto& dst_basis = alg.basis_with(rows[r], u);
        for (size_t x = 0; x < src_basis.size(); ++x) {
          // image of the basis path x under right multiplication by the block
          std::vector<uint32_t> img(alg.dim(), 0);
          for (size_t k = 0; k < hb.size(); ++k) {
            if (!blk[k]) continue;
            std::vector<uint32_t> prod = alg.mul_basis(src_basis[x], hb[k]);
            for (int i = 0; i < alg.dim(); ++i)
              if (prod[i]) img[i] = alg.fp.add(img[i], alg.fp.mul(blk[k], prod[i]));
          }
          for (size_t y = 0; y < dst_basis.size(); ++y)
            mat.at(roff[r][u] + static_cast<int>(y), coff[c][u] + static_cast<int>(x)) =
                img[dst_basis[y]];
        }
      }
    }
    out.maps.push_back(std::move(mat));
  }
  return out;
}

Representation cokernel(const Presentation& d) {
  const Algebra& alg = *d.alg;
  const int nv = alg.num_vertices();
  Realized rl = realize(d);
  Representation out;
  out.alg = d.alg;
  out.dims.resize(nv);
  std::vector<Matrix> lifts, projs;
  for (int v = 0; v < nv; ++v) {
    std::vector<int> comp = standard_complement(rl.maps[v]);
    out.dims[v] = static_cast<int>(comp.size());
    Matrix basis(rl.target.dims[v], out.dims[v], alg.fp.p);
    for (int c = 0; c < out.dims[v]; ++c) basis.at(comp[c], c) = 1;
    // projection along the image onto the chosen complement
    Matrix full = hstack(column_space_canon_cols(rl.maps[v]), basis);
    auto inv = inverse(full);
    if (!inv) throw Error("internal: cokernel basis not invertible");
    Matrix q(out.dims[v], rl.target.dims[v], alg.fp.p);
    int imgdim = full.cols - out.dims[v];
    for (int r = 0; r < out.dims[v]; ++r)
      for (int c = 0; c < rl.target.dims[v]; ++c) q.at(r, c) = inv->at(imgdim + r, c);
    lifts.push_back(std::move(basis));
    projs.push_back(std::move(q));
  }
  for (size_t a = 0; a < alg.arrows.size(); ++a) {
    int u = alg.arrows[a].from, w = alg.arrows[a].to;
    out.arrow_maps.push_back(
        mat_mul(projs[w], mat_mul(rl.target.arrow_maps[a], lifts[u])));
  }
  return out;
}

HomEPair hom_e_fixed(const Presentation& d, const Representation& m) {
  if (!(d.alg->spec == m.alg->spec)) throw AlgebraMismatch();
  const Algebra& alg = *d.alg;
  auto rows = copies_of(d.pos), cols = copies_of(d.neg);
  // Hom(P_i, M) is M at vertex i; the induced map acts by the class action
  std::vector<int> roff(rows.size() + 1, 0), coff(cols.size() + 1, 0);
  for (size_t r = 0; r < rows.size(); ++r) roff[r + 1] = roff[r] + m.dims[rows[r]];
  for (size_t c = 0; c < cols.size(); ++c) coff[c + 1] = coff[c] + m.dims[cols[c]];
  Matrix phi(coff[cols.size()], roff[rows.size()], alg.fp.p);
  std::vector<Matrix> actions(alg.dim());
  std::vector<bool> have(alg.dim(), false);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < cols.size(); ++c) {
      const auto& blk = d.blocks[r][c];
      const auto& hb = alg.hom_basis(cols[c], rows[r]);
      Matrix acc(m.dims[cols[c]], m.dims[rows[r]], alg.fp.p);
      for (size_t k = 0; k < hb.size(); ++k) {
        if (!blk[k]) continue;
        if (!have[hb[k]]) {
          actions[hb[k]] = class_action(m, hb[k]);
          have[hb[k]] = true;
        }
        acc = mat_add(acc, mat_scale(actions[hb[k]], blk[k]));
      }
      for (int i = 0; i < acc.rows; ++i)
        for (int j = 0; j < acc.cols; ++j)
          phi.at(coff[c] + i, roff[r] + j) = acc.at(i, j);
    }
  }
  int rank = rank_of(phi);
  HomEPair out;
  out.hom = roff[rows.size()] - rank;
  out.e = coff[cols.size()] - rank;
  return out;
}

HomEPair hom_e_generic(AlgebraPtr alg, const std::vector<int>& delta,
                       const Representation& m, int samples, uint64_t seed) {
  if (samples < 1) throw ValidationError("samples", "must be at least 1");
  HomEPair best;
  for (int t = 0; t < samples; ++t) {
    Presentation d = sample_presentation(alg, delta, derive_seed(seed, "sample", t));
    HomEPair cur = hom_e_fixed(d, m);
    if (t == 0) {
      best = cur;
    } else {
      best.hom = std::min(best.hom, cur.hom);
      best.e = std::min(best.e, cur.e);
    }
  }
  return best;
}

PairSystem homotopy_system(const Presentation& d, const Presentation& e_pres) {
  require_same(d, e_pres);
  const Algebra& alg = *d.alg;
  Presentation target = zero_map(d.alg, d.neg, e_pres.pos);
  const int target_coords = map_coords(target);

  Presentation s0 = zero_map(d.alg, d.neg, e_pres.neg);
  Presentation t0 = zero_map(d.alg, d.pos, e_pres.pos);
  PairSystem sys;
  sys.s_coords = map_coords(s0);
  sys.t_coords = map_coords(t0);
  sys.mat = Matrix(target_coords, sys.s_coords + sys.t_coords, alg.fp.p);

  int col = 0;
  std::vector<uint32_t> coords(sys.s_coords, 0);
  for (int i = 0; i < sys.s_coords; ++i) {
    coords.assign(sys.s_coords, 0);
    coords[i] = 1;
    Presentation s = unflatten_map(d.alg, d.neg, e_pres.neg, coords);
    std::vector<uint32_t> img = flatten_map(compose_maps(e_pres, s));
    for (int r = 0; r < target_coords; ++r) sys.mat.at(r, col) = img[r];
    ++col;
  }
  std::vector<uint32_t> tcoords(sys.t_coords, 0);
  for (int i = 0; i < sys.t_coords; ++i) {
    tcoords.assign(sys.t_coords, 0);
    tcoords[i] = 1;
    Presentation t = unflatten_map(d.alg, d.pos, e_pres.pos, tcoords);
    std::vector<uint32_t> img = flatten_map(compose_maps(t, d));
    for (int r = 0; r < target_coords; ++r) sys.mat.at(r, col) = alg.fp.neg(img[r]);
    ++col;
  }
  return sys;
}

int E_hom(const Presentation& d, const Presentation& e_pres) {
  PairSystem sys = homotopy_system(d, e_pres);
  return sys.mat.rows - rank_of(sys.mat);
}

int e_generic_pair(AlgebraPtr alg, const std::vector<int>& delta,
                   const std::vector<int>& eta, int samples, uint64_t seed) {
  if (samples < 1) throw ValidationError("samples", "must be at least 1");
  int best = -1;
  for (int t = 0; t < samples; ++t) {
    Presentation d = sample_presentation(alg, delta, derive_seed(seed, "pair_d", t));
    Presentation g = sample_presentation(alg, eta, derive_seed(seed, "pair_g", t));
    int cur = hom_e_fixed(d, cokernel(g)).e;
    if (best < 0 || cur < best) best = cur;
  }
  return best;
}

HomEPair dual_hom_e(AlgebraPtr alg, const Representation& m,
                    const std::vector<int>& delta_check, int samples, uint64_t seed) {
  AlgebraPtr op = opposite_algebra(*alg);
  Representation dm = dual(m, op);
  return hom_e_generic(op, delta_check, dm, samples, derive_seed(seed, "dual"));
}

}  // namespace qpres
