#include "algint/kernels.hpp"

#include <algorithm>

#include "algint/algebra.hpp"
#include "algint/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace algint::kernels {

namespace {

// row -= coeff * pivot
void eliminate(Row& row, const Row& pivot, const Scalar& coeff) {
  for (size_t c = 0; c < row.size(); ++c) {
    if (pivot[c].is_zero()) continue;
    row[c].submul(coeff, pivot[c]);
  }
}

// Full reduction of one row against the current pivot set. Pivot rows carry
// a 1 in their own pivot column and 0 in every other pivot column, so a
// single ascending pass is complete.
void reduce_row(Row& row, const std::vector<Row>& rows,
                const std::vector<int>& pivot_cols) {
  for (size_t p = 0; p < rows.size(); ++p) {
    const Scalar& c = row[static_cast<size_t>(pivot_cols[p])];
    if (c.is_zero()) continue;
    Scalar coeff = c;
    eliminate(row, rows[p], coeff);
  }
}

int leading_col(const Row& row) {
  for (size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) return static_cast<int>(c);
  return -1;
}

// Fold one fully reduced nonzero row into the pivot set, keeping the
// canonical invariants (sorted pivots, unit pivots, Jordan-eliminated
// columns).
void insert_pivot(RrefResult& r, Row row, int lead) {
  Scalar inv = row[static_cast<size_t>(lead)].inverse();
  for (auto& s : row) {
    if (s.is_zero()) continue;
    s *= inv;
  }
  for (size_t p = 0; p < r.rows.size(); ++p) {
    const Scalar& c = r.rows[p][static_cast<size_t>(lead)];
    if (c.is_zero()) continue;
    Scalar coeff = c;
    eliminate(r.rows[p], row, coeff);
  }
  auto pos = std::upper_bound(r.pivot_cols.begin(), r.pivot_cols.end(), lead);
  size_t at = static_cast<size_t>(pos - r.pivot_cols.begin());
  r.pivot_cols.insert(pos, lead);
  r.rows.insert(r.rows.begin() + static_cast<long>(at), std::move(row));
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: shape mismatch");
  if (a.field() != b.field()) throw FieldMismatchError("matmul: field mismatch");
  const int n = a.rows(), m = b.cols(), kk = a.cols();
  Matrix out(n, m, a.field());
#pragma omp parallel for schedule(static) if (n * m * kk > 4096)
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) {
      Scalar& acc = out.at(r, c);
      for (int k = 0; k < kk; ++k) acc.addmul(a.at(r, k), b.at(k, c));
    }
  }
  return out;
}

RrefResult rref(std::vector<Row> rows, int ncols, const FieldDesc& f) {
  (void)f;
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != ncols)
      throw DimensionError("rref: row width mismatch");
  RrefResult r;
  const size_t block = 32;
  for (size_t start = 0; start < rows.size(); start += block) {
    size_t end = std::min(rows.size(), start + block);
    // parallel pre-reduction against the pivot snapshot; no inserts happen
    // here, so the pivot rows are read-only
#pragma omp parallel for schedule(dynamic) if (r.rows.size() > 8)
    for (size_t i = start; i < end; ++i)
      reduce_row(rows[i], r.rows, r.pivot_cols);
    // serial fold-in; rows may need another pass against pivots added
    // within this block
    for (size_t i = start; i < end; ++i) {
      reduce_row(rows[i], r.rows, r.pivot_cols);
      int lead = leading_col(rows[i]);
      if (lead < 0) continue;
      insert_pivot(r, std::move(rows[i]), lead);
    }
  }
  return r;
}

std::vector<Row> nullspace(const std::vector<Row>& rows, int ncols,
                           const FieldDesc& f) {
  RrefResult r = rref(rows, ncols, f);
  std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
  for (int pc : r.pivot_cols) is_pivot[static_cast<size_t>(pc)] = true;
  std::vector<Row> basis;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[static_cast<size_t>(fc)]) continue;
    Row v(static_cast<size_t>(ncols), Scalar::zero(f));
    v[static_cast<size_t>(fc)] = Scalar::one(f);
    for (size_t p = 0; p < r.rows.size(); ++p)
      v[static_cast<size_t>(r.pivot_cols[p])] = -r.rows[p][static_cast<size_t>(fc)];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// R_i R_j == sum_k f_ijk R_k, entrywise with early exit
bool rep_product_ok(const Algebra& a, const std::vector<Matrix>& reps, int i,
                    int j) {
  const int n = a.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Scalar lhs = Scalar::zero(a.field());
      for (int m = 0; m < n; ++m)
        lhs.addmul(reps[static_cast<size_t>(i)].at(r, m),
                   reps[static_cast<size_t>(j)].at(m, c));
      for (int k = 0; k < n; ++k)
        lhs.submul(a.f(i, j, k), reps[static_cast<size_t>(k)].at(r, c));
      if (!lhs.is_zero()) return false;
    }
  return true;
}

// R_i commutes with L_j^T
bool commutant_ok(const std::vector<Matrix>& right,
                  const std::vector<Matrix>& left, int i, int j) {
  const Matrix& r = right[static_cast<size_t>(i)];
  const Matrix& l = left[static_cast<size_t>(j)];
  const int n = r.rows();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (R_i L_j^T - L_j^T R_i)_(a,b) = sum_m R_am (L^T)_mb - (L^T)_am R_mb
      Scalar acc = Scalar::zero(r.field());
      for (int m = 0; m < n; ++m) {
        acc.addmul(r.at(a, m), l.at(b, m));
        acc.submul(l.at(m, a), r.at(m, b));
      }
      if (!acc.is_zero()) return false;
    }
  return true;
}

// x_i (x_j x_k) == (x_i x_j) x_k on raw structure constants
bool triple_ok(const Algebra& alg, int i, int j, int k) {
  const int n = alg.dim();
  for (int q = 0; q < n; ++q) {
    Scalar acc = Scalar::zero(alg.field());
    for (int m = 0; m < n; ++m) {
      acc.addmul(alg.f(j, k, m), alg.f(i, m, q));
      acc.submul(alg.f(i, j, m), alg.f(m, k, q));
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

AssocViolations associativity_scan(const Algebra& a,
                                   const std::vector<Matrix>& right,
                                   const std::vector<Matrix>& left) {
  const int n = a.dim();
  AssocViolations v;
  if (n == 0) return v;
  std::vector<unsigned char> rflag(static_cast<size_t>(n) * n, 0);
  std::vector<unsigned char> lflag(static_cast<size_t>(n) * n, 0);
  std::vector<unsigned char> cflag(static_cast<size_t>(n) * n, 0);
#pragma omp parallel for schedule(dynamic) if (n > 2)
  for (int ij = 0; ij < n * n; ++ij) {
    const int i = ij / n, j = ij % n;
    if (!rep_product_ok(a, right, i, j)) rflag[static_cast<size_t>(ij)] = 1;
    if (!rep_product_ok(a, left, i, j)) lflag[static_cast<size_t>(ij)] = 1;
    if (!commutant_ok(right, left, i, j)) cflag[static_cast<size_t>(ij)] = 1;
  }
  std::vector<unsigned char> tflag(static_cast<size_t>(n) * n * n, 0);
#pragma omp parallel for schedule(dynamic) if (n > 2)
  for (int ij = 0; ij < n * n; ++ij) {
    const int i = ij / n, j = ij % n;
    for (int k = 0; k < n; ++k)
      if (!triple_ok(a, i, j, k))
        tflag[static_cast<size_t>(ij) * n + k] = 1;
  }
  for (int ij = 0; ij < n * n; ++ij) {
    const int i = ij / n, j = ij % n;
    if (rflag[static_cast<size_t>(ij)]) v.right_rep.push_back({i, j});
    if (lflag[static_cast<size_t>(ij)]) v.left_rep.push_back({i, j});
    if (cflag[static_cast<size_t>(ij)]) v.commutant.push_back({i, j});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (tflag[(static_cast<size_t>(i) * n + j) * n + k])
          v.triples.push_back({i, j, k});
  return v;
}

std::vector<std::array<int, 2>> completeness_violations(
    const Algebra& a, const Matrix& c, const std::vector<Scalar>& values,
    CompletenessOrder order) {
  const int n = a.dim();
  if (c.rows() != n || c.cols() != n)
    throw DimensionError("completeness: C shape mismatch");
  if (static_cast<int>(values.size()) != n)
    throw DimensionError("completeness: values length mismatch");
  std::vector<unsigned char> flag(static_cast<size_t>(n) * n, 0);
#pragma omp parallel for schedule(dynamic) if (n > 2)
  for (int ij = 0; ij < n * n; ++ij) {
    const int i = ij / n, j = ij % n;
    Scalar acc = Scalar::zero(a.field());
    if (order == CompletenessOrder::ket_bra) {
      // sum_kp f_ikp C_kj values_p
      for (int k = 0; k < n; ++k) {
        if (c.at(k, j).is_zero()) continue;
        Scalar inner = Scalar::zero(a.field());
        for (int p = 0; p < n; ++p)
          inner.addmul(a.f(i, k, p), values[static_cast<size_t>(p)]);
        acc.addmul(c.at(k, j), inner);
      }
    } else {
      // sum_kp C_ki f_kjp values_p
      for (int k = 0; k < n; ++k) {
        if (c.at(k, i).is_zero()) continue;
        Scalar inner = Scalar::zero(a.field());
        for (int p = 0; p < n; ++p)
          inner.addmul(a.f(k, j, p), values[static_cast<size_t>(p)]);
        acc.addmul(c.at(k, i), inner);
      }
    }
    if (i == j) acc -= Scalar::one(a.field());
    if (!acc.is_zero()) flag[static_cast<size_t>(ij)] = 1;
  }
  std::vector<std::array<int, 2>> out;
  for (int ij = 0; ij < n * n; ++ij)
    if (flag[static_cast<size_t>(ij)]) out.push_back({ij / n, ij % n});
  return out;
}

}  // namespace algint::kernels
