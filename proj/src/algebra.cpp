#include "algint/algebra.hpp"

#include <algorithm>

#include "algint/errors.hpp"

namespace algint {

Algebra::Algebra(int dim, const FieldDesc& field, std::vector<Scalar> f,
                 std::vector<std::string> labels, std::string name)
    : dim_(dim),
      field_(field),
      f_(std::move(f)),
      labels_(std::move(labels)),
      name_(std::move(name)) {}

Algebra new_algebra(int dim, const FieldDesc& field, std::vector<Scalar> f,
                    std::vector<std::string> labels, std::string name) {
  if (dim < 0) throw DimensionError("new_algebra: negative dimension");
  size_t want = static_cast<size_t>(dim) * dim * dim;
  if (f.size() != want)
    throw DimensionError("new_algebra: tensor has " + std::to_string(f.size()) +
                         " entries, expected dim^3 = " + std::to_string(want));
  for (const auto& s : f)
    if (s.field() != field)
      throw FieldMismatchError("new_algebra: tensor entry in field " +
                               s.field().str() + ", algebra declared " +
                               field.str());
  if (!labels.empty() && static_cast<int>(labels.size()) != dim)
    throw DimensionError("new_algebra: need one label per basis element");
  return Algebra(dim, field, std::move(f), std::move(labels), std::move(name));
}

namespace {

void check_element(const AlgebraElement& e) {
  if (e.algebra == nullptr) throw Error("element has no algebra");
  if (static_cast<int>(e.coeffs.size()) != e.algebra->dim())
    throw DimensionError("element coefficient count != algebra dimension");
}

void check_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  check_element(a);
  check_element(b);
  if (a.algebra != b.algebra && !(*a.algebra == *b.algebra))
    throw Error("elements belong to different algebras");
}

}  // namespace

AlgebraElement element(const Algebra& a, std::vector<Scalar> coeffs) {
  AlgebraElement e{&a, std::move(coeffs)};
  check_element(e);
  for (const auto& s : e.coeffs)
    if (s.field() != a.field())
      throw FieldMismatchError("element coefficient field mismatch");
  return e;
}

AlgebraElement basis_element(const Algebra& a, int i) {
  if (i < 0 || i >= a.dim())
    throw DimensionError("basis_element: index out of range");
  std::vector<Scalar> c(static_cast<size_t>(a.dim()), Scalar::zero(a.field()));
  c[static_cast<size_t>(i)] = Scalar::one(a.field());
  return {&a, std::move(c)};
}

AlgebraElement zero_element(const Algebra& a) {
  return {&a, std::vector<Scalar>(static_cast<size_t>(a.dim()),
                                  Scalar::zero(a.field()))};
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_algebra(a, b);
  const Algebra& alg = *a.algebra;
  const int n = alg.dim();
  AlgebraElement out = zero_element(alg);
  for (int i = 0; i < n; ++i) {
    if (a.coeffs[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b.coeffs[static_cast<size_t>(j)].is_zero()) continue;
      Scalar ab = a.coeffs[static_cast<size_t>(i)] * b.coeffs[static_cast<size_t>(j)];
      for (int k = 0; k < n; ++k)
        out.coeffs[static_cast<size_t>(k)].addmul(ab, alg.f(i, j, k));
    }
  }
  return out;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_algebra(a, b);
  AlgebraElement out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_algebra(a, b);
  AlgebraElement out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

AlgebraElement scale(const Scalar& s, const AlgebraElement& a) {
  check_element(a);
  AlgebraElement out = a;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return subtract(multiply(a, b), multiply(b, a));
}

RegularReps regular_reps(const Algebra& a) {
  const int n = a.dim();
  RegularReps reps;
  reps.right.reserve(static_cast<size_t>(n));
  reps.left.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Matrix r(n, n, a.field()), l(n, n, a.field());
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        r.at(j, k) = a.f(j, i, k);
        l.at(j, k) = a.f(i, k, j);
      }
    reps.right.push_back(std::move(r));
    reps.left.push_back(std::move(l));
  }
  return reps;
}

Matrix rep_of(const std::vector<Matrix>& reps, const AlgebraElement& a) {
  check_element(a);
  if (reps.size() != a.coeffs.size())
    throw DimensionError("rep_of: representation family size mismatch");
  const int n = a.algebra->dim();
  Matrix out(n, n, a.algebra->field());
  for (size_t i = 0; i < reps.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out.at(r, c).addmul(a.coeffs[i], reps[i].at(r, c));
  }
  return out;
}

AssociativityReport is_associative(const Algebra& a) {
  RegularReps reps = regular_reps(a);
  return kernels::associativity_scan(a, reps.right, reps.left);
}

std::optional<AlgebraElement> find_identity(const Algebra& a) {
  const int n = a.dim();
  if (n == 0) return std::nullopt;
  // unknowns e_0..e_{n-1}; rows of [A | rhs] over n+1 columns
  std::vector<kernels::Row> rows;
  rows.reserve(static_cast<size_t>(2 * n * n));
  const Scalar zero = Scalar::zero(a.field());
  const Scalar one = Scalar::one(a.field());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      kernels::Row right(static_cast<size_t>(n) + 1, zero);  // x_j e = x_j
      kernels::Row left(static_cast<size_t>(n) + 1, zero);   // e x_j = x_j
      for (int i = 0; i < n; ++i) {
        right[static_cast<size_t>(i)] = a.f(j, i, k);
        left[static_cast<size_t>(i)] = a.f(i, j, k);
      }
      right[static_cast<size_t>(n)] = j == k ? one : zero;
      left[static_cast<size_t>(n)] = right[static_cast<size_t>(n)];
      rows.push_back(std::move(right));
      rows.push_back(std::move(left));
    }
  auto rr = kernels::rref(std::move(rows), n + 1, a.field());
  for (int pc : rr.pivot_cols)
    if (pc == n) return std::nullopt;  // inconsistent: no identity
  if (rr.rank() < n) return std::nullopt;  // underdetermined: cannot happen
                                           // for a genuine two-sided identity
  std::vector<Scalar> e(static_cast<size_t>(n), zero);
  for (int r = 0; r < rr.rank(); ++r)
    e[static_cast<size_t>(rr.pivot_cols[static_cast<size_t>(r)])] =
        rr.rows[static_cast<size_t>(r)][static_cast<size_t>(n)];
  // cache the basis position when the identity is a basis element
  int basis_pos = -1;
  for (int i = 0; i < n; ++i) {
    if (e[static_cast<size_t>(i)].is_zero()) continue;
    if (basis_pos == -1 && e[static_cast<size_t>(i)].is_one()) {
      basis_pos = i;
    } else {
      basis_pos = -2;
      break;
    }
  }
  if (basis_pos >= 0) a.identity_index_ = basis_pos;
  return element(a, std::move(e));
}

Algebra unitalize(const Algebra& a) {
  const int n = a.dim();
  const int m = n + 1;
  const FieldDesc& fd = a.field();
  std::vector<Scalar> f(static_cast<size_t>(m) * m * m, Scalar::zero(fd));
  auto idx = [m](int i, int j, int k) {
    return (static_cast<size_t>(i) * m + j) * m + k;
  };
  f[idx(0, 0, 0)] = Scalar::one(fd);
  for (int i = 0; i < n; ++i) {
    f[idx(0, i + 1, i + 1)] = Scalar::one(fd);
    f[idx(i + 1, 0, i + 1)] = Scalar::one(fd);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) f[idx(i + 1, j + 1, k + 1)] = a.f(i, j, k);
  }
  std::vector<std::string> labels;
  if (!a.labels().empty()) {
    labels.push_back("1");
    labels.insert(labels.end(), a.labels().begin(), a.labels().end());
  }
  std::string name = a.name().empty() ? "" : a.name() + "+1";
  return new_algebra(m, fd, std::move(f), std::move(labels), std::move(name));
}

Algebra opposite(const Algebra& a) {
  const int n = a.dim();
  std::vector<Scalar> f(static_cast<size_t>(n) * n * n, Scalar::zero(a.field()));
  auto idx = [n](int i, int j, int k) {
    return (static_cast<size_t>(i) * n + j) * n + k;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) f[idx(i, j, k)] = a.f(j, i, k);
  std::string name = a.name().empty() ? "" : a.name() + "^op";
  return new_algebra(n, a.field(), std::move(f), a.labels(), std::move(name));
}

}  // namespace algint
