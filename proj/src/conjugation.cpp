#include "algint/conjugation.hpp"

#include "algint/errors.hpp"

namespace algint {

namespace {

size_t cell(int dim, int j, int k) {
  return static_cast<size_t>(j) * dim + k;
}

}  // namespace

std::vector<Matrix> solve_c_space(const Algebra& a) {
  const int n = a.dim();
  const FieldDesc& fd = a.field();
  const Scalar zero = Scalar::zero(fd);
  RegularReps reps = regular_reps(a);
  std::vector<kernels::Row> rows;
  // intertwining: for each i and cell (j,l):
  //   sum_k (L_i)_jk C_kl - sum_k C_jk (R_i)_kl = 0
  for (int i = 0; i < n; ++i) {
    const Matrix& l = reps.left[static_cast<size_t>(i)];
    const Matrix& r = reps.right[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j)
      for (int ll = 0; ll < n; ++ll) {
        kernels::Row row(static_cast<size_t>(n) * n, zero);
        bool nonzero = false;
        for (int k = 0; k < n; ++k) {
          if (!l.at(j, k).is_zero()) {
            row[cell(n, k, ll)] += l.at(j, k);
            nonzero = true;
          }
          if (!r.at(k, ll).is_zero()) {
            row[cell(n, j, k)] -= r.at(k, ll);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  // symmetry: C_jk = C_kj
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      kernels::Row row(static_cast<size_t>(n) * n, zero);
      row[cell(n, j, k)] = Scalar::one(fd);
      row[cell(n, k, j)] = -Scalar::one(fd);
      rows.push_back(std::move(row));
    }
  auto basis = kernels::nullspace(rows, n * n, fd);
  std::vector<Matrix> out;
  out.reserve(basis.size());
  for (const auto& v : basis) {
    Matrix m(n, n, fd);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m.at(j, k) = v[cell(n, j, k)];
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Scale C so the first nonzero integral value (C^-1 applied to the identity
// coefficients) becomes 1. When the identity is the basis element at index
// t, this is exactly "first nonzero entry of row t of C^-1 equals 1".
CMatrix canonicalize(const Algebra& a, Matrix c, Matrix inv, int rank) {
  auto e = find_identity(a);
  if (e) {
    std::vector<Scalar> values = inv.apply(e->coeffs);
    for (const auto& v : values) {
      if (v.is_zero()) continue;
      Scalar lambda = v;
      c = lambda * c;
      inv = lambda.inverse() * inv;
      break;
    }
  }
  return CMatrix{std::move(c), std::move(inv), rank};
}

}  // namespace

std::optional<CMatrix> pick_invertible_c(const Algebra& a,
                                         const std::vector<Matrix>& space,
                                         const PickPolicy& policy) {
  if (space.empty()) return std::nullopt;
  const int rank = static_cast<int>(space.size());
  for (const Matrix& m : space) {
    if (auto inv = m.inverse())
      return canonicalize(a, m, std::move(*inv), rank);
  }
  SmallIntRng rng(policy.seed);
  const int n = a.dim();
  for (int attempt = 0; attempt < policy.attempts; ++attempt) {
    Matrix m(n, n, a.field());
    bool nonzero = false;
    for (const Matrix& b : space) {
      long coeff = rng.next(policy.coeff_bound);
      if (coeff == 0) continue;
      Scalar s(a.field(), coeff);
      for (int r = 0; r < n; ++r)
        for (int cidx = 0; cidx < n; ++cidx)
          m.at(r, cidx).addmul(s, b.at(r, cidx));
      nonzero = true;
    }
    if (!nonzero) continue;
    if (auto inv = m.inverse())
      return canonicalize(a, m, std::move(*inv), rank);
  }
  return std::nullopt;
}

CMatrix make_cmatrix(const Algebra& a, const Matrix& c, int space_rank) {
  if (c.rows() != a.dim() || c.cols() != a.dim())
    throw DimensionError("make_cmatrix: C shape != algebra dimension");
  if (c.field() != a.field())
    throw FieldMismatchError("make_cmatrix: C field != algebra field");
  auto inv = c.inverse();
  if (!inv) throw Error("make_cmatrix: C is singular");
  return CMatrix{c, std::move(*inv), space_rank};
}

SelfConjReport verify_self_conjugated(const Algebra& a, const Matrix& c) {
  SelfConjReport rep;
  if (c.rows() != a.dim() || c.cols() != a.dim())
    throw DimensionError("verify_self_conjugated: C shape mismatch");
  rep.symmetric = c.is_symmetric();
  rep.invertible = c.inverse().has_value();
  RegularReps reps = regular_reps(a);
  for (int i = 0; i < a.dim(); ++i) {
    const Matrix& l = reps.left[static_cast<size_t>(i)];
    const Matrix& r = reps.right[static_cast<size_t>(i)];
    if (l * c != c * r) rep.intertwine_violations.push_back(i);
    // opposite algebra: R_i^D = L_i^T and L_i^D = R_i^T must satisfy the
    // same relation, i.e. R_i^T C = C L_i^T
    if (reps.left_op(i) * c != c * reps.right_op(i))
      rep.dual_violations.push_back(i);
  }
  return rep;
}

InvolutionReport involution_check(const Algebra& a, const Matrix& c) {
  const int n = a.dim();
  if (c.rows() != n || c.cols() != n)
    throw DimensionError("involution_check: C shape mismatch");
  InvolutionReport rep;
  const FieldDesc& fd = a.field();
  Matrix cstar = c.conj();
  rep.cc_star_ok = (c * cstar).is_identity();
  // double star: (x_i*)* = sum_k C*_ki C_jk x_j ... = (C C*)^T applied; do
  // it directly from the definition instead of reusing cc_star
  {
    rep.double_star_ok = true;
    for (int i = 0; i < n && rep.double_star_ok; ++i) {
      // x_i* = sum_j C_ji x_j; (x_i*)* = sum_j conj(C_ji) x_j* =
      // sum_jk conj(C_ji) C_kj x_k
      for (int k = 0; k < n; ++k) {
        Scalar acc = Scalar::zero(fd);
        for (int j = 0; j < n; ++j)
          acc.addmul(c.at(j, i).conj(), c.at(k, j));
        if (i == k) acc -= Scalar::one(fd);
        if (!acc.is_zero()) {
          rep.double_star_ok = false;
          break;
        }
      }
    }
  }
  // antihomomorphism on all basis pairs:
  // (x_i x_j)* = conj(f_ijk) C_mk x_m  must equal
  // x_j* x_i* = C_kj C_li f_klm x_m
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool bad = false;
      for (int m = 0; m < n && !bad; ++m) {
        Scalar lhs = Scalar::zero(fd);
        for (int k = 0; k < n; ++k)
          lhs.addmul(a.f(i, j, k).conj(), c.at(m, k));
        Scalar rhs = Scalar::zero(fd);
        for (int k = 0; k < n; ++k) {
          if (c.at(k, j).is_zero()) continue;
          for (int l = 0; l < n; ++l) {
            if (c.at(l, i).is_zero()) continue;
            Scalar w = c.at(k, j) * c.at(l, i);
            rhs.addmul(w, a.f(k, l, m));
          }
        }
        bad = lhs != rhs;
      }
      if (bad) rep.antihomomorphism_violations.push_back({i, j});
    }
  // star representation: R_i^dagger = sum_j C_ji R_j
  {
    RegularReps reps = regular_reps(a);
    rep.star_rep_ok = true;
    for (int i = 0; i < n && rep.star_rep_ok; ++i) {
      Matrix dagger = reps.right[static_cast<size_t>(i)].conj_transpose();
      Matrix sum(n, n, fd);
      for (int j = 0; j < n; ++j) {
        if (c.at(j, i).is_zero()) continue;
        sum += c.at(j, i) * reps.right[static_cast<size_t>(j)];
      }
      if (dagger != sum) rep.star_rep_ok = false;
    }
  }
  rep.c_unitary = (c * c.conj_transpose()).is_identity();
  rep.c_symmetric = c.is_symmetric();
  return rep;
}

}  // namespace algint
