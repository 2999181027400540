#pragma once

#include <cstddef>
#include <vector>

#include "ehzkit/gf.hpp"

namespace ehzkit {

/// Coordinate vector over F_q as packed values; the owning context supplies
/// the field.
using FqVec = std::vector<u64>;

/// Dense exact matrix over F_q. Entries are stored packed, row-major; every
/// operation is deterministic (leftmost pivot column, topmost nonzero row).
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(FieldPtr f, size_t rows, size_t cols);
  static FqMatrix identity(FieldPtr f, size_t n);
  static FqMatrix from_rows(FieldPtr f, const std::vector<FqVec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldPtr& field_ptr() const { return f_; }
  const Field& field() const { return *f_; }

  u64 get(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  void set(size_t r, size_t c, u64 v) { data_[r * cols_ + c] = v; }
  FieldElement at(size_t r, size_t c) const { return FieldElement(*f_, get(r, c)); }

  FqVec row(size_t r) const;
  FqVec col(size_t c) const;
  FqMatrix columns(const std::vector<size_t>& idx) const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b);
  friend bool operator!=(const FqMatrix& a, const FqMatrix& b) { return !(a == b); }

 private:
  FieldPtr f_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<u64> data_;
};

struct RrefResult {
  FqMatrix R;
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
};

RrefResult rref(const FqMatrix& M);
size_t rank(const FqMatrix& M);

FqMatrix matmul(const FqMatrix& a, const FqMatrix& b);
FqMatrix transpose(const FqMatrix& a);
FqMatrix hstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix diag(FieldPtr f, const FqVec& v);

FieldElement det(const FqMatrix& M);

/// Rows form the canonical basis of the right kernel {x : Mx = 0}, one basis
/// vector per RREF free column in ascending column order.
FqMatrix null_space(const FqMatrix& M);

struct SolveResult {
  enum Kind { Unique, Affine, Inconsistent } kind = Inconsistent;
  FqVec x0;           // a solution (free variables zero), valid unless Inconsistent
  FqMatrix null_basis;  // rows span the solution space offset, valid for Affine
};

/// Exact classification of A x = b.
SolveResult solve(const FqMatrix& A, const FqVec& b);

bool same_row_space(const FqMatrix& a, const FqMatrix& b);
/// True iff every row of inner lies in the row space of outer.
bool row_space_contains(const FqMatrix& outer, const FqMatrix& inner);

// small vector helpers (field given explicitly)
FqVec vec_add(const Field& f, const FqVec& a, const FqVec& b);
FqVec vec_sub(const Field& f, const FqVec& a, const FqVec& b);
FqVec vec_scale(const Field& f, u64 c, const FqVec& a);
FqVec vec_schur(const Field& f, const FqVec& a, const FqVec& b);
FqVec vec_matmul(const Field& f, const FqVec& row, const FqMatrix& M);  // row * M
FqVec mat_vecmul(const FqMatrix& M, const FqVec& x);                    // M * x
size_t vec_weight(const FqVec& a);
bool vec_is_zero(const FqVec& a);

}  // namespace ehzkit
