#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpres/fp.hpp"

namespace qpres {

/* Dense row-major matrix over F_p.  Everything here is pure: operations return
   fresh matrices.  Sizes in this project stay small (a few hundred rows at the
   very worst), so dense Gaussian elimination is the right tool. */
struct Matrix {
  int rows = 0, cols = 0;
  uint32_t p = 2;
  std::vector<uint32_t> a;

  Matrix() = default;
  Matrix(int r, int c, uint32_t prime) : rows(r), cols(c), p(prime), a(size_t(r) * c, 0) {}

  uint32_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
  uint32_t at(int r, int c) const { return a[size_t(r) * cols + c]; }

  static Matrix identity(int n, uint32_t p);
  static Matrix random(int r, int c, const Fp& fp, Rng& rng);

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && p == o.p && a == o.a; }
};

Matrix mat_add(const Matrix& x, const Matrix& y);
Matrix mat_sub(const Matrix& x, const Matrix& y);
Matrix mat_mul(const Matrix& x, const Matrix& y);
Matrix mat_scale(const Matrix& x, uint32_t c);
Matrix transpose(const Matrix& x);
Matrix hstack(const Matrix& x, const Matrix& y);
Matrix vstack(const Matrix& x, const Matrix& y);

struct RrefResult {
  int rank = 0;
  std::vector<int> pivots;  // strictly increasing column indices
  Matrix reduced;
};

RrefResult rref_rank(const Matrix& m);
int rank_of(const Matrix& m);

// columns span the right null space {x : m x = 0}; column count == cols - rank
Matrix kernel_basis(const Matrix& m);

// solves m * X = b exactly; nullopt if inconsistent
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

// invertible square matrix test plus inverse
std::optional<Matrix> inverse(const Matrix& m);

/* Canonical basis of the column space: RREF of the transpose with zero rows
   dropped, returned as rows.  Equal column spaces yield identical canons, which
   makes this usable as a dedup key. */
Matrix column_space_canon(const Matrix& m);
// same canon with the basis vectors as columns
Matrix column_space_canon_cols(const Matrix& m);
std::string matrix_key(const Matrix& m);

// indices of standard basis vectors completing the column span of b
std::vector<int> standard_complement(const Matrix& b);

/* Incremental echelon span with expression tracking.  insert() either extends
   the span or reports the dependency of v on previously inserted vectors. */
class SpanSolver {
 public:
  SpanSolver(uint32_t p, int width) : fp_(p), width_(width) {}

  // returns coefficients c over *inserted* vectors with v = sum c_i inserted_i
  // when v is dependent; otherwise extends the span and returns nullopt
  std::optional<std::vector<uint32_t>> insert(const std::vector<uint32_t>& v);
  bool contains(const std::vector<uint32_t>& v) const;
  // expresses v over the inserted vectors without inserting; nullopt if outside
  std::optional<std::vector<uint32_t>> express(const std::vector<uint32_t>& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return n_inserted_; }
  // echelon basis of the current span
  std::vector<std::vector<uint32_t>> basis_rows() const;

 private:
  struct Row {
    std::vector<uint32_t> vec;    // echelonized
    std::vector<uint32_t> combo;  // coefficients over inserted vectors
    int pivot;
  };
  Fp fp_;
  int width_;
  int n_inserted_ = 0;
  std::vector<Row> rows_;

  std::optional<std::vector<uint32_t>> reduce(std::vector<uint32_t>& v,
                                              std::vector<uint32_t>& combo) const;
};

}  // namespace qpres
