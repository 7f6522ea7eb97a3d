#include "qpres/matrix.hpp"

#include <sstream>

namespace qpres {

Matrix Matrix::identity(int n, uint32_t p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

Matrix Matrix::random(int r, int c, const Fp& fp, Rng& rng) {
  Matrix m(r, c, fp.p);
  for (auto& x : m.a) x = fp.uniform(rng);
  return m;
}

bool Matrix::is_zero() const {
  for (uint32_t x : a)
    if (x) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1u % p : 0u)) return false;
  return true;
}

static void check_same_p(const Matrix& x, const Matrix& y) {
  if (x.p != y.p) throw Error("matrix modulus mismatch");
}

Matrix mat_add(const Matrix& x, const Matrix& y) {
  check_same_p(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix shape mismatch in add");
  Fp fp(x.p);
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = fp.add(r.a[i], y.a[i]);
  return r;
}

Matrix mat_sub(const Matrix& x, const Matrix& y) {
  check_same_p(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix shape mismatch in sub");
  Fp fp(x.p);
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = fp.sub(r.a[i], y.a[i]);
  return r;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
  check_same_p(x, y);
  if (x.cols != y.rows) throw Error("matrix shape mismatch in mul");
  Matrix r(x.rows, y.cols, x.p);
  const uint64_t p = x.p;
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      uint64_t xv = x.at(i, k);
      if (!xv) continue;
      for (int j = 0; j < y.cols; ++j) {
        uint64_t acc = r.at(i, j) + xv * y.at(k, j) % p;
        r.at(i, j) = static_cast<uint32_t>(acc >= p ? acc - p : acc);
      }
    }
  return r;
}

Matrix mat_scale(const Matrix& x, uint32_t c) {
  Fp fp(x.p);
  Matrix r = x;
  for (auto& v : r.a) v = fp.mul(v, c);
  return r;
}

Matrix transpose(const Matrix& x) {
  Matrix r(x.cols, x.rows, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Matrix hstack(const Matrix& x, const Matrix& y) {
  check_same_p(x, y);
  if (x.rows != y.rows) throw Error("matrix shape mismatch in hstack");
  Matrix r(x.rows, x.cols + y.cols, x.p);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& x, const Matrix& y) {
  check_same_p(x, y);
  if (x.cols != y.cols) throw Error("matrix shape mismatch in vstack");
  Matrix r(x.rows + y.rows, x.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
  return r;
}

RrefResult rref_rank(const Matrix& m) {
  Fp fp(m.p);
  RrefResult res;
  res.reduced = m;
  Matrix& r = res.reduced;
  int lead = 0;
  for (int col = 0; col < r.cols && lead < r.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows; ++i)
      if (r.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
    uint32_t inv = fp.inv(r.at(lead, col));
    for (int j = col; j < r.cols; ++j) r.at(lead, j) = fp.mul(r.at(lead, j), inv);
    for (int i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      uint32_t f = r.at(i, col);
      if (!f) continue;
      for (int j = col; j < r.cols; ++j)
        r.at(i, j) = fp.sub(r.at(i, j), fp.mul(f, r.at(lead, j)));
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = static_cast<int>(res.pivots.size());
  return res;
}

int rank_of(const Matrix& m) { return rref_rank(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  Fp fp(m.p);
  RrefResult rr = rref_rank(m);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (pi < rr.pivots.size() && rr.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(m.cols, static_cast<int>(free_cols.size()), m.p);
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k.at(f, static_cast<int>(fi)) = 1 % m.p;
    for (int r = 0; r < rr.rank; ++r) k.at(rr.pivots[r], static_cast<int>(fi)) = fp.neg(rr.reduced.at(r, f));
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  check_same_p(m, b);
  if (m.rows != b.rows) throw Error("matrix shape mismatch in solve");
  Matrix aug = hstack(m, b);
  RrefResult rr = rref_rank(aug);
  // any pivot landing in the b-block means inconsistency
  for (int c : rr.pivots)
    if (c >= m.cols) return std::nullopt;
  Matrix x(m.cols, b.cols, m.p);
  for (int r = 0; r < rr.rank; ++r) {
    int pc = rr.pivots[r];
    for (int j = 0; j < b.cols; ++j) x.at(pc, j) = rr.reduced.at(r, m.cols + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.rows, m.p));
  if (!x) return std::nullopt;
  if (!mat_mul(m, *x).is_identity()) return std::nullopt;
  return x;
}

Matrix column_space_canon(const Matrix& m) {
  RrefResult rr = rref_rank(transpose(m));
  Matrix canon(rr.rank, m.rows, m.p);
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < m.rows; ++j) canon.at(i, j) = rr.reduced.at(i, j);
  return canon;
}

Matrix column_space_canon_cols(const Matrix& m) { return transpose(column_space_canon(m)); }

std::vector<int> standard_complement(const Matrix& b) {
  SpanSolver span(b.p, b.rows);
  for (int c = 0; c < b.cols; ++c) {
    std::vector<uint32_t> col(b.rows);
    for (int r = 0; r < b.rows; ++r) col[r] = b.at(r, c);
    span.insert(col);
  }
  std::vector<int> picks;
  for (int k = 0; k < b.rows; ++k) {
    std::vector<uint32_t> e(b.rows, 0);
    e[k] = 1;
    if (!span.contains(e)) {
      span.insert(e);
      picks.push_back(k);
    }
  }
  return picks;
}

std::string matrix_key(const Matrix& m) {
  std::ostringstream os;
  os << m.rows << 'x' << m.cols << ':';
  for (uint32_t v : m.a) os << v << ',';
  return os.str();
}

std::optional<std::vector<uint32_t>> SpanSolver::reduce(std::vector<uint32_t>& v,
                                                        std::vector<uint32_t>& combo) const {
  for (const Row& row : rows_) {
    uint32_t f = v[row.pivot];
    if (!f) continue;
    for (int j = 0; j < width_; ++j) v[j] = fp_.sub(v[j], fp_.mul(f, row.vec[j]));
    for (size_t j = 0; j < row.combo.size(); ++j)
      combo[j] = fp_.sub(combo[j], fp_.mul(f, row.combo[j]));
  }
  for (int j = 0; j < width_; ++j)
    if (v[j]) return std::nullopt;
  // v reduced to zero: v = -combo expressed over inserted vectors
  std::vector<uint32_t> out(combo.size());
  for (size_t j = 0; j < combo.size(); ++j) out[j] = fp_.neg(combo[j]);
  return out;
}

std::optional<std::vector<uint32_t>> SpanSolver::insert(const std::vector<uint32_t>& vin) {
  if (static_cast<int>(vin.size()) != width_) throw Error("SpanSolver width mismatch");
  std::vector<uint32_t> v = vin;
  std::vector<uint32_t> combo(n_inserted_ + 1, 0);
  combo[n_inserted_] = fp_.p > 1 ? 1 : 0;
  // reduce with combo tracking over the would-be inserted list
  for (const Row& row : rows_) {
    uint32_t f = v[row.pivot];
    if (!f) continue;
    for (int j = 0; j < width_; ++j) v[j] = fp_.sub(v[j], fp_.mul(f, row.vec[j]));
    for (size_t j = 0; j < row.combo.size(); ++j)
      combo[j] = fp_.sub(combo[j], fp_.mul(f, row.combo[j]));
  }
  int pivot = -1;
  for (int j = 0; j < width_; ++j)
    if (v[j]) {
      pivot = j;
      break;
    }
  if (pivot < 0) {
    // dependent: vin = sum(-combo_i * inserted_i); the vector is not added
    std::vector<uint32_t> out(n_inserted_);
    for (int j = 0; j < n_inserted_; ++j) out[j] = fp_.neg(combo[j]);
    return out;
  }
  uint32_t inv = fp_.inv(v[pivot]);
  for (int j = 0; j < width_; ++j) v[j] = fp_.mul(v[j], inv);
  for (auto& c : combo) c = fp_.mul(c, inv);
  ++n_inserted_;
  for (Row& row : rows_) row.combo.resize(n_inserted_, 0);
  combo.resize(n_inserted_, 0);
  rows_.push_back(Row{std::move(v), std::move(combo), pivot});
  return std::nullopt;
}

bool SpanSolver::contains(const std::vector<uint32_t>& vin) const {
  std::vector<uint32_t> v = vin;
  for (const Row& row : rows_) {
    uint32_t f = v[row.pivot];
    if (!f) continue;
    for (int j = 0; j < width_; ++j) v[j] = fp_.sub(v[j], fp_.mul(f, row.vec[j]));
  }
  for (uint32_t x : v)
    if (x) return false;
  return true;
}

std::optional<std::vector<uint32_t>> SpanSolver::express(const std::vector<uint32_t>& vin) const {
  std::vector<uint32_t> v = vin;
  std::vector<uint32_t> combo(n_inserted_, 0);
  auto r = reduce(v, combo);
  return r;
}

std::vector<std::vector<uint32_t>> SpanSolver::basis_rows() const {
  std::vector<std::vector<uint32_t>> out;
  for (const Row& row : rows_) out.push_back(row.vec);
  return out;
}

}  // namespace qpres
