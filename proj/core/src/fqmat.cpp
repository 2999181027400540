#include "ehzkit/fqmat.hpp"

#include <algorithm>

namespace ehzkit {

namespace {
void require_same_field(const FqMatrix& a, const FqMatrix& b) {
  if (!a.field().same_as(b.field()))
    fail(Err::FieldMismatch, "matrices belong to different fields");
}
}  // namespace

FqMatrix::FqMatrix(FieldPtr f, size_t rows, size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(FieldPtr f, size_t n) {
  FqMatrix m(std::move(f), n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::from_rows(FieldPtr f, const std::vector<FqVec>& rows) {
  size_t r = rows.size();
  size_t c = r ? rows[0].size() : 0;
  FqMatrix m(std::move(f), r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(Err::DimensionMismatch, "ragged row list");
    for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

FqVec FqMatrix::row(size_t r) const {
  return FqVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

FqVec FqMatrix::col(size_t c) const {
  FqVec out(rows_);
  for (size_t i = 0; i < rows_; ++i) out[i] = get(i, c);
  return out;
}

FqMatrix FqMatrix::columns(const std::vector<size_t>& idx) const {
  FqMatrix out(f_, rows_, idx.size());
  for (size_t j = 0; j < idx.size(); ++j)
    for (size_t i = 0; i < rows_; ++i) out.set(i, j, get(i, idx[j]));
  return out;
}

bool operator==(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.f_ && b.f_ && !a.f_->same_as(*b.f_)) return false;
  return a.data_ == b.data_;
}

RrefResult rref(const FqMatrix& M) {
  RrefResult res{M, 0, {}};
  FqMatrix& R = res.R;
  const Field& f = M.field();
  size_t pr = 0;  // next pivot row
  for (size_t c = 0; c < M.cols() && pr < M.rows(); ++c) {
    size_t sel = pr;
    while (sel < M.rows() && R.get(sel, c) == 0) ++sel;
    if (sel == M.rows()) continue;
    if (sel != pr)
      for (size_t j = 0; j < M.cols(); ++j) {
        u64 t = R.get(pr, j);
        R.set(pr, j, R.get(sel, j));
        R.set(sel, j, t);
      }
    u64 piv_inv = f.inv(R.get(pr, c));
    for (size_t j = c; j < M.cols(); ++j) R.set(pr, j, f.mul(piv_inv, R.get(pr, j)));
    for (size_t i = 0; i < M.rows(); ++i) {
      if (i == pr) continue;
      u64 factor = R.get(i, c);
      if (factor == 0) continue;
      for (size_t j = c; j < M.cols(); ++j)
        R.set(i, j, f.sub(R.get(i, j), f.mul(factor, R.get(pr, j))));
    }
    res.pivot_cols.push_back(c);
    ++pr;
  }
  res.rank = pr;
  return res;
}

size_t rank(const FqMatrix& M) { return rref(M).rank; }

FqMatrix matmul(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) fail(Err::DimensionMismatch, "matmul inner dimensions");
  const Field& f = a.field();
  FqMatrix out(a.field_ptr(), a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      u64 aik = a.get(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        out.set(i, j, f.add(out.get(i, j), f.mul(aik, b.get(k, j))));
    }
  return out;
}

FqMatrix transpose(const FqMatrix& a) {
  FqMatrix out(a.field_ptr(), a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.set(j, i, a.get(i, j));
  return out;
}

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) fail(Err::DimensionMismatch, "hstack row counts differ");
  FqMatrix out(a.field_ptr(), a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.get(i, j));
    for (size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.get(i, j));
  }
  return out;
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) fail(Err::DimensionMismatch, "vstack column counts differ");
  FqMatrix out(a.field_ptr(), a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.get(i, j));
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.get(i, j));
  return out;
}

FqMatrix diag(FieldPtr f, const FqVec& v) {
  FqMatrix out(std::move(f), v.size(), v.size());
  for (size_t i = 0; i < v.size(); ++i) out.set(i, i, v[i]);
  return out;
}

FieldElement det(const FqMatrix& M) {
  if (M.rows() != M.cols()) fail(Err::NotSquare, "determinant of a non-square matrix");
  const Field& f = M.field();
  FqMatrix A = M;
  size_t n = M.rows();
  u64 d = 1;
  bool negate = false;
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && A.get(sel, c) == 0) ++sel;
    if (sel == n) return f.zero();
    if (sel != c) {
      negate = !negate;
      for (size_t j = 0; j < n; ++j) {
        u64 t = A.get(c, j);
        A.set(c, j, A.get(sel, j));
        A.set(sel, j, t);
      }
    }
    u64 piv = A.get(c, c);
    d = f.mul(d, piv);
    u64 piv_inv = f.inv(piv);
    for (size_t i = c + 1; i < n; ++i) {
      u64 factor = f.mul(A.get(i, c), piv_inv);
      if (factor == 0) continue;
      for (size_t j = c; j < n; ++j)
        A.set(i, j, f.sub(A.get(i, j), f.mul(factor, A.get(c, j))));
    }
  }
  if (negate) d = f.neg(d);
  return FieldElement(f, d);
}

FqMatrix null_space(const FqMatrix& M) {
  const Field& f = M.field();
  RrefResult rr = rref(M);
  std::vector<size_t> free_cols;
  {
    size_t pi = 0;
    for (size_t c = 0; c < M.cols(); ++c) {
      if (pi < rr.pivot_cols.size() && rr.pivot_cols[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  FqMatrix basis(M.field_ptr(), free_cols.size(), M.cols());
  for (size_t b = 0; b < free_cols.size(); ++b) {
    size_t fc = free_cols[b];
    basis.set(b, fc, 1);
    for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
      basis.set(b, rr.pivot_cols[pi], f.neg(rr.R.get(pi, fc)));
  }
  return basis;
}

SolveResult solve(const FqMatrix& A, const FqVec& b) {
  if (A.rows() != b.size()) fail(Err::DimensionMismatch, "solve rhs length");
  FqMatrix aug(A.field_ptr(), A.rows(), A.cols() + 1);
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) aug.set(i, j, A.get(i, j));
    aug.set(i, A.cols(), b[i]);
  }
  RrefResult rr = rref(aug);
  SolveResult out;
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == A.cols()) {
    out.kind = SolveResult::Inconsistent;
    return out;
  }
  out.x0.assign(A.cols(), 0);
  for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
    out.x0[rr.pivot_cols[pi]] = rr.R.get(pi, A.cols());
  out.null_basis = null_space(A);
  out.kind = out.null_basis.rows() == 0 ? SolveResult::Unique : SolveResult::Affine;
  return out;
}

namespace {
FqMatrix nonzero_rows(const FqMatrix& R, size_t rank) {
  FqMatrix out(R.field_ptr(), rank, R.cols());
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < R.cols(); ++j) out.set(i, j, R.get(i, j));
  return out;
}
}  // namespace

bool same_row_space(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) fail(Err::DimensionMismatch, "row-space comparison widths differ");
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  return nonzero_rows(ra.R, ra.rank) == nonzero_rows(rb.R, rb.rank);
}

bool row_space_contains(const FqMatrix& outer, const FqMatrix& inner) {
  require_same_field(outer, inner);
  if (outer.cols() != inner.cols())
    fail(Err::DimensionMismatch, "row-space comparison widths differ");
  return rank(outer) == rank(vstack(outer, inner));
}

FqVec vec_add(const Field& f, const FqVec& a, const FqVec& b) {
  if (a.size() != b.size()) fail(Err::DimensionMismatch, "vector lengths differ");
  FqVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

FqVec vec_sub(const Field& f, const FqVec& a, const FqVec& b) {
  if (a.size() != b.size()) fail(Err::DimensionMismatch, "vector lengths differ");
  FqVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

FqVec vec_scale(const Field& f, u64 c, const FqVec& a) {
  FqVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

FqVec vec_schur(const Field& f, const FqVec& a, const FqVec& b) {
  if (a.size() != b.size()) fail(Err::DimensionMismatch, "vector lengths differ");
  FqVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
  return out;
}

FqVec vec_matmul(const Field& f, const FqVec& row, const FqMatrix& M) {
  if (row.size() != M.rows()) fail(Err::DimensionMismatch, "row-vector times matrix");
  FqVec out(M.cols(), 0);
  for (size_t i = 0; i < M.rows(); ++i) {
    if (row[i] == 0) continue;
    for (size_t j = 0; j < M.cols(); ++j)
      out[j] = f.add(out[j], f.mul(row[i], M.get(i, j)));
  }
  return out;
}

FqVec mat_vecmul(const FqMatrix& M, const FqVec& x) {
  if (x.size() != M.cols()) fail(Err::DimensionMismatch, "matrix times column vector");
  const Field& f = M.field();
  FqVec out(M.rows(), 0);
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j)
      out[i] = f.add(out[i], f.mul(M.get(i, j), x[j]));
  return out;
}

size_t vec_weight(const FqVec& a) {
  size_t w = 0;
  for (u64 v : a) w += (v != 0);
  return w;
}

bool vec_is_zero(const FqVec& a) {
  for (u64 v : a)
    if (v) return false;
  return true;
}

}  // namespace ehzkit
