#include "qpres/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qpres/errors.hpp"

namespace qpres {

namespace {

constexpr int kPathCap = 200000;

// rows kept fully reduced, sorted by pivot position
struct Echelon {
  uint32_t p;
  int width;
  std::vector<int> pivots;
  std::vector<std::vector<uint32_t>> rows;

  explicit Echelon(uint32_t prime, int w) : p(prime), width(w) {}

  // eliminates in place; single pass suffices because rows are reduced
  void reduce(std::vector<uint32_t>& v) const {
    Fp f(p);
    for (size_t r = 0; r < rows.size(); ++r) {
      uint32_t c = v[pivots[r]];
      if (c == 0) continue;
      const auto& row = rows[r];
      for (int j = pivots[r]; j < width; ++j)
        if (row[j]) v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
  }

  void insert(std::vector<uint32_t> v) {
    reduce(v);
    int piv = -1;
    for (int j = 0; j < width; ++j)
      if (v[j]) { piv = j; break; }
    if (piv < 0) return;
    Fp f(p);
    uint32_t inv = f.inv(v[piv]);
    for (int j = piv; j < width; ++j) v[j] = f.mul(v[j], inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      uint32_t c = rows[r][piv];
      if (c == 0) continue;
      for (int j = piv; j < width; ++j)
        if (v[j]) rows[r][j] = f.sub(rows[r][j], f.mul(c, v[j]));
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < piv) ++pos;
    pivots.insert(pivots.begin() + pos, piv);
    rows.insert(rows.begin() + pos, std::move(v));
  }

  bool is_pivot(int j) const {
    return std::find(pivots.begin(), pivots.end(), j) != pivots.end();
  }
};

std::string path_text(const Algebra& alg, const std::vector<int>& arrows) {
  std::string s;
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += "*";
    s += alg.arrows[arrows[i]].name;
  }
  return s;
}

}  // namespace

AlgebraPtr build_algebra(const AlgebraSpec& spec) {
  auto alg_owned = std::shared_ptr<Algebra>(new Algebra());
  Algebra& alg = *alg_owned;
  alg.spec = spec;
  alg.fp = Fp(spec.field_char);
  alg.nilpotency = spec.nilpotency_bound;
  if (spec.nilpotency_bound < 1)
    throw ValidationError("nilpotency_bound", "must be at least 1");
  if (spec.vertices.empty()) throw ValidationError("vertices", "empty vertex list");

  std::map<std::string, int> vid;
  for (const auto& v : spec.vertices) {
    if (vid.count(v)) throw ValidationError("vertices", "duplicate vertex " + v);
    vid[v] = static_cast<int>(alg.vertex_labels.size());
    alg.vertex_labels.push_back(v);
  }
  std::map<std::string, int> aid;
  for (const auto& a : spec.arrows) {
    if (aid.count(a.name)) throw ValidationError("arrows", "duplicate arrow " + a.name);
    if (!vid.count(a.from) || !vid.count(a.to))
      throw ValidationError("arrows", "arrow " + a.name + " has unknown endpoint");
    aid[a.name] = static_cast<int>(alg.arrows.size());
    alg.arrows.push_back({a.name, vid[a.from], vid[a.to]});
  }

  const Fp& fp = alg.fp;
  for (const auto& rspec : spec.relations) {
    Relation rel;
    int rs = -1, rt = -1;
    for (const auto& tspec : rspec) {
      if (tspec.path.size() < 2)
        throw ValidationError("relations", "relation paths must have length at least 2");
      RelTerm term;
      term.coef = fp.reduce(tspec.coef);
      for (const auto& name : tspec.path) {
        auto it = aid.find(name);
        if (it == aid.end()) throw UnknownArrow(name);
        term.arrows.push_back(it->second);
      }
      for (size_t i = 0; i + 1 < term.arrows.size(); ++i)
        if (alg.arrows[term.arrows[i]].to != alg.arrows[term.arrows[i + 1]].from)
          throw NonParallelRelation("path is not composable at arrow " +
                                    alg.arrows[term.arrows[i + 1]].name);
      int ts = alg.arrows[term.arrows.front()].from;
      int tt = alg.arrows[term.arrows.back()].to;
      if (rs < 0) {
        rs = ts;
        rt = tt;
      } else if (ts != rs || tt != rt) {
        throw NonParallelRelation("relation mixes different sources or targets");
      }
      if (term.coef) rel.push_back(std::move(term));
    }
    if (!rel.empty()) alg.relations.push_back(std::move(rel));
  }

  const int nv = alg.num_vertices();
  const int L = alg.nilpotency;

  // paths of length <= L in creation order: length layers, arrows appended
  for (int v = 0; v < nv; ++v) alg.paths.push_back({v, v, 0, {}});
  auto& pid_by_arrows = alg.pid_by_arrows_;
  {
    size_t layer_begin = 0, layer_end = alg.paths.size();
    for (int len = 1; len <= L; ++len) {
      for (size_t i = layer_begin; i < layer_end; ++i) {
        PathInfo base = alg.paths[i];
        for (int a = 0; a < static_cast<int>(alg.arrows.size()); ++a) {
          if (alg.arrows[a].from != base.target) continue;
          PathInfo np = base;
          np.arrows.push_back(a);
          np.target = alg.arrows[a].to;
          np.length = len;
          if (static_cast<int>(alg.paths.size()) >= kPathCap)
            throw Error("path count exceeds truncation cap");
          pid_by_arrows[np.arrows] = static_cast<int>(alg.paths.size());
          alg.paths.push_back(std::move(np));
        }
      }
      layer_begin = layer_end;
      layer_end = alg.paths.size();
    }
  }
  const int np = static_cast<int>(alg.paths.size());

  // column order: longest paths first, so survivors are the short classes
  std::vector<int> path_at_pos(np);
  for (int i = 0; i < np; ++i) path_at_pos[i] = i;
  std::stable_sort(path_at_pos.begin(), path_at_pos.end(), [&](int x, int y) {
    if (alg.paths[x].length != alg.paths[y].length)
      return alg.paths[x].length > alg.paths[y].length;
    return x < y;
  });
  std::vector<int> pos_of_path(np);
  for (int i = 0; i < np; ++i) pos_of_path[path_at_pos[i]] = i;

  if (static_cast<long long>(np) * np > 4000000LL)
    throw Error("algebra too large for truncation construction");

  // two-sided span of the relations, truncated at length L
  Echelon ech(fp.p, np);
  for (const auto& rel : alg.relations) {
    int rs = alg.arrows[rel.front().arrows.front()].from;
    int rt = alg.arrows[rel.front().arrows.back()].to;
    for (int qp = 0; qp < np; ++qp) {
      if (alg.paths[qp].target != rs) continue;
      for (int q = 0; q < np; ++q) {
        if (alg.paths[q].source != rt) continue;
        std::vector<uint32_t> vec(np, 0);
        bool nonzero = false;
        for (const auto& term : rel) {
          int total = alg.paths[qp].length + static_cast<int>(term.arrows.size()) +
                      alg.paths[q].length;
          if (total > L) continue;
          std::vector<int> arr = alg.paths[qp].arrows;
          arr.insert(arr.end(), term.arrows.begin(), term.arrows.end());
          arr.insert(arr.end(), alg.paths[q].arrows.begin(), alg.paths[q].arrows.end());
          int pid = pid_by_arrows.at(arr);
          vec[pos_of_path[pid]] = fp.add(vec[pos_of_path[pid]], term.coef);
          if (vec[pos_of_path[pid]]) nonzero = true;
        }
        if (nonzero) ech.insert(std::move(vec));
      }
    }
  }

  // certificate: every path of full length L must vanish in the quotient
  for (int pid = 0; pid < np; ++pid) {
    if (alg.paths[pid].length != L) continue;
    std::vector<uint32_t> v(np, 0);
    v[pos_of_path[pid]] = 1;
    ech.reduce(v);
    for (int j = 0; j < np; ++j)
      if (v[j]) throw NotNilpotentAtBound(L);
  }

  alg.basis_index_of.assign(np, -1);
  for (int pid = 0; pid < np; ++pid) {
    if (ech.is_pivot(pos_of_path[pid])) continue;
    alg.basis_index_of[pid] = static_cast<int>(alg.basis.size());
    alg.basis.push_back(pid);
  }
  const int dim = static_cast<int>(alg.basis.size());

  alg.pathred_.assign(np, {});
  for (int pid = 0; pid < np; ++pid) {
    std::vector<uint32_t> v(np, 0);
    v[pos_of_path[pid]] = 1;
    ech.reduce(v);
    std::vector<uint32_t> red(dim, 0);
    for (int pos = 0; pos < np; ++pos) {
      if (!v[pos]) continue;
      int b = alg.basis_index_of[path_at_pos[pos]];
      if (b < 0) throw Error("internal: residual on pivot column");
      red[b] = v[pos];
    }
    alg.pathred_[pid] = std::move(red);
  }

  alg.unit_.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    alg.unit_[v] = alg.basis_index_of[v];
    if (alg.unit_[v] < 0) throw Error("internal: vertex unit eliminated");
  }
  alg.arrow_class_.assign(alg.arrows.size(), -1);
  for (size_t a = 0; a < alg.arrows.size(); ++a) {
    if (L >= 1) {
      auto it = pid_by_arrows.find({static_cast<int>(a)});
      if (it != pid_by_arrows.end()) alg.arrow_class_[a] = alg.basis_index_of[it->second];
    }
    if (alg.arrow_class_[a] < 0) throw Error("internal: arrow class eliminated");
  }
  alg.by_st_.assign(static_cast<size_t>(nv) * nv, {});
  for (int b = 0; b < dim; ++b) {
    const PathInfo& pi = alg.paths[alg.basis[b]];
    alg.by_st_[pi.source * nv + pi.target].push_back(b);
  }
  return alg_owned;
}

std::vector<uint32_t> Algebra::mul_basis(int bx, int by) const {
  const PathInfo& px = paths[basis[bx]];
  const PathInfo& py = paths[basis[by]];
  std::vector<uint32_t> zero(dim(), 0);
  if (py.target != px.source) return zero;
  int total = px.length + py.length;
  if (total > nilpotency) return zero;
  if (total == 0) return pathred_[px.source];
  std::vector<int> arr = py.arrows;
  arr.insert(arr.end(), px.arrows.begin(), px.arrows.end());
  auto it = pid_by_arrows_.find(arr);
  if (it == pid_by_arrows_.end()) throw Error("internal: concatenated path not enumerated");
  return pathred_[it->second];
}

std::vector<uint32_t> Algebra::mul_elems(const std::vector<uint32_t>& x,
                                         const std::vector<uint32_t>& y) const {
  std::vector<uint32_t> out(dim(), 0);
  for (int i = 0; i < dim(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < dim(); ++j) {
      if (!y[j]) continue;
      uint32_t c = fp.mul(x[i], y[j]);
      std::vector<uint32_t> prod = mul_basis(i, j);
      for (int k = 0; k < dim(); ++k)
        if (prod[k]) out[k] = fp.add(out[k], fp.mul(c, prod[k]));
    }
  }
  return out;
}

std::string Algebra::basis_name(int b) const {
  const PathInfo& pi = paths[basis[b]];
  if (pi.length == 0) return "e_" + vertex_labels[pi.source];
  return path_text(*this, pi.arrows);
}

AlgebraSpec opposite_spec(const AlgebraSpec& spec) {
  AlgebraSpec op = spec;
  for (auto& a : op.arrows) std::swap(a.from, a.to);
  for (auto& rel : op.relations)
    for (auto& term : rel) std::reverse(term.path.begin(), term.path.end());
  return op;
}

AlgebraPtr opposite_algebra(const Algebra& alg) {
  return build_algebra(opposite_spec(alg.spec));
}

std::vector<int> proj_hom_basis(const Algebra& alg, int i, int j) {
  return alg.hom_basis(i, j);
}

}  // namespace qpres
