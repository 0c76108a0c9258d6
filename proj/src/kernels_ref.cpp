#include "algint/algebra.hpp"
#include "algint/errors.hpp"
#include "algint/kernels.hpp"

// Serial reference implementations of the kernels, written as plainly as
// possible: one row at a time, full matrices materialized, no flags, no
// early exits. These exist to be obviously correct and to cross-check the
// parallel kernels; the benchmark target times the two families against
// each other.

namespace algint::ref {

using kernels::AssocViolations;
using kernels::CompletenessOrder;
using kernels::Row;
using kernels::RrefResult;

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: shape mismatch");
  if (a.field() != b.field()) throw FieldMismatchError("matmul: field mismatch");
  Matrix out(a.rows(), b.cols(), a.field());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      Scalar acc = Scalar::zero(a.field());
      for (int k = 0; k < a.cols(); ++k) acc += a.at(r, k) * b.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

RrefResult rref(std::vector<Row> rows, int ncols, const FieldDesc& f) {
  (void)f;
  RrefResult r;
  for (Row& row : rows) {
    if (static_cast<int>(row.size()) != ncols)
      throw DimensionError("rref: row width mismatch");
    // reduce against every pivot
    for (size_t p = 0; p < r.rows.size(); ++p) {
      Scalar c = row[static_cast<size_t>(r.pivot_cols[p])];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < row.size(); ++j) row[j] -= c * r.rows[p][j];
    }
    int lead = -1;
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) {
        lead = static_cast<int>(j);
        break;
      }
    if (lead < 0) continue;
    Scalar inv = row[static_cast<size_t>(lead)].inverse();
    for (auto& s : row) s *= inv;
    for (size_t p = 0; p < r.rows.size(); ++p) {
      Scalar c = r.rows[p][static_cast<size_t>(lead)];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < row.size(); ++j) r.rows[p][j] -= c * row[j];
    }
    size_t at = 0;
    while (at < r.pivot_cols.size() && r.pivot_cols[at] < lead) ++at;
    r.pivot_cols.insert(r.pivot_cols.begin() + static_cast<long>(at), lead);
    r.rows.insert(r.rows.begin() + static_cast<long>(at), std::move(row));
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

AssocViolations associativity_scan(const Algebra& a,
                                   const std::vector<Matrix>& right,
                                   const std::vector<Matrix>& left) {
  const int n = a.dim();
  AssocViolations v;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix rprod = matmul(right[static_cast<size_t>(i)], right[static_cast<size_t>(j)]);
      Matrix lprod = matmul(left[static_cast<size_t>(i)], left[static_cast<size_t>(j)]);
      Matrix rsum(n, n, a.field()), lsum(n, n, a.field());
      for (int k = 0; k < n; ++k) {
        rsum += a.f(i, j, k) * right[static_cast<size_t>(k)];
        lsum += a.f(i, j, k) * left[static_cast<size_t>(k)];
      }
      if (rprod != rsum) v.right_rep.push_back({i, j});
      if (lprod != lsum) v.left_rep.push_back({i, j});
      Matrix lt = left[static_cast<size_t>(j)].transpose();
      if (matmul(right[static_cast<size_t>(i)], lt) !=
          matmul(lt, right[static_cast<size_t>(i)]))
        v.commutant.push_back({i, j});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        bool bad = false;
        for (int q = 0; q < n && !bad; ++q) {
          Scalar lhs = Scalar::zero(a.field());
          Scalar rhs = Scalar::zero(a.field());
          for (int m = 0; m < n; ++m) {
            lhs += a.f(j, k, m) * a.f(i, m, q);
            rhs += a.f(i, j, m) * a.f(m, k, q);
          }
          bad = lhs != rhs;
        }
        if (bad) v.triples.push_back({i, j, k});
      }
  return v;
}

std::vector<std::array<int, 2>> completeness_violations(
    const Algebra& a, const Matrix& c, const std::vector<Scalar>& values,
    CompletenessOrder order) {
  const int n = a.dim();
  std::vector<std::array<int, 2>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(a.field());
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) {
          if (order == CompletenessOrder::ket_bra)
            acc += a.f(i, k, p) * c.at(k, j) * values[static_cast<size_t>(p)];
          else
            acc += c.at(k, i) * a.f(k, j, p) * values[static_cast<size_t>(p)];
        }
      if (i == j) acc -= Scalar::one(a.field());
      if (!acc.is_zero()) out.push_back({i, j});
    }
  return out;
}

}  // namespace algint::ref
