#include "algint/integration.hpp"

#include <sstream>

#include "algint/errors.hpp"

namespace algint {

namespace {

std::string first_cells(const std::vector<std::array<int, 2>>& cells) {
  std::ostringstream out;
  for (size_t i = 0; i < cells.size() && i < 4; ++i)
    out << (i ? ", " : "") << "(" << cells[i][0] << "," << cells[i][1] << ")";
  if (cells.size() > 4) out << ", ...";
  return out.str();
}

// Invertible T with y = T x, y_0 = identity: the identity coefficients as
// row 0 (swapped into a position where that stays invertible).
Matrix basis_change_matrix(const Algebra& a, const std::vector<Scalar>& e) {
  const int n = a.dim();
  int t = 0;
  while (t < n && e[static_cast<size_t>(t)].is_zero()) ++t;
  Matrix m = Matrix::identity(n, a.field());
  // row t takes x_0's old role, row 0 becomes the identity
  for (int c = 0; c < n; ++c) {
    m.at(t, c) = c == 0 ? Scalar::one(a.field()) : Scalar::zero(a.field());
    m.at(0, c) = e[static_cast<size_t>(c)];
  }
  return m;
}

}  // namespace

IntegralFunctional integral_functional(const Algebra& a, const CMatrix& c) {
  auto e = find_identity(a);
  if (!e)
    throw Error("integral_functional: the algebra has no identity element");
  IntegralFunctional f;
  f.algebra = &a;
  f.source_c = c;
  f.identity_coeffs = e->coeffs;
  f.values = c.inverse.apply(e->coeffs);

  auto bad1 = kernels::completeness_violations(
      a, c.matrix, f.values, kernels::CompletenessOrder::ket_bra);
  if (!bad1.empty())
    throw CompletenessError(
        "integral_functional: completeness fails (|x><xC| order) at cells " +
        first_cells(bad1));
  auto bad2 = kernels::completeness_violations(
      a, c.matrix, f.values, kernels::CompletenessOrder::bra_ket);
  if (!bad2.empty())
    throw CompletenessError(
        "integral_functional: completeness fails (|xC><x| order) at cells " +
        first_cells(bad2));

  // record how the identity would be moved to basis index 0, and audit that
  // reading the integrals off row 0 of the transformed C^-1 agrees with the
  // values above
  bool at_zero = a.dim() > 0 && e->coeffs[0].is_one();
  for (int i = 1; at_zero && i < a.dim(); ++i)
    at_zero = e->coeffs[static_cast<size_t>(i)].is_zero();
  if (!at_zero) {
    Matrix t = basis_change_matrix(a, e->coeffs);
    if (!t.inverse())
      throw Error("integral_functional: basis change is singular");
    Matrix transformed = t * c.inverse * t.transpose();  // = (T^-T C T^-1)^-1
    std::vector<Scalar> expected = t.apply(f.values);
    for (int j = 0; j < a.dim(); ++j)
      if (transformed.at(0, j) != expected[static_cast<size_t>(j)])
        throw Error(
            "integral_functional: basis-reorder audit failed; C is "
            "inconsistent with the identity element");
    f.basis_change = std::move(t);
  }
  return f;
}

Scalar integrate(const IntegralFunctional& f, const AlgebraElement& x) {
  if (f.algebra == nullptr) throw Error("integrate: empty functional");
  if (x.algebra != f.algebra && !(*x.algebra == *f.algebra))
    throw Error("integrate: element from a different algebra");
  Scalar acc = Scalar::zero(f.algebra->field());
  for (size_t i = 0; i < f.values.size(); ++i)
    acc.addmul(x.coeffs[i], f.values[i]);
  return acc;
}

CompletenessReport verify_completeness(const IntegralFunctional& f) {
  CompletenessReport rep;
  rep.ket_bra = kernels::completeness_violations(
      *f.algebra, f.source_c.matrix, f.values,
      kernels::CompletenessOrder::ket_bra);
  rep.bra_ket = kernels::completeness_violations(
      *f.algebra, f.source_c.matrix, f.values,
      kernels::CompletenessOrder::bra_ket);
  return rep;
}

ScalarProductResult scalar_product(const IntegralFunctional& fn,
                                   const AlgebraElement& f,
                                   const AlgebraElement& g) {
  if (f.algebra != fn.algebra && !(*f.algebra == *fn.algebra))
    throw Error("scalar_product: element from a different algebra");
  if (g.algebra != fn.algebra && !(*g.algebra == *fn.algebra))
    throw Error("scalar_product: element from a different algebra");
  const Algebra& a = *fn.algebra;
  const int n = a.dim();
  const FieldDesc& fd = a.field();
  const Matrix& c = fn.source_c.matrix;
  ScalarProductResult out{Scalar::zero(fd), Scalar::zero(fd), false};
  // integral form: sum_jk (sum_i conj(f_i) C_ji) g_k integral(x_j x_k)
  for (int j = 0; j < n; ++j) {
    Scalar u = Scalar::zero(fd);
    for (int i = 0; i < n; ++i)
      u.addmul(f.coeffs[static_cast<size_t>(i)].conj(), c.at(j, i));
    if (u.is_zero()) continue;
    for (int k = 0; k < n; ++k) {
      if (g.coeffs[static_cast<size_t>(k)].is_zero()) continue;
      Scalar prod_integral = Scalar::zero(fd);
      for (int p = 0; p < n; ++p)
        prod_integral.addmul(a.f(j, k, p), fn.values[static_cast<size_t>(p)]);
      out.integral_form += u * g.coeffs[static_cast<size_t>(k)] * prod_integral;
    }
  }
  for (int i = 0; i < n; ++i)
    out.coefficient_form.addmul(f.coeffs[static_cast<size_t>(i)].conj(),
                                g.coeffs[static_cast<size_t>(i)]);
  out.agree = out.integral_form == out.coefficient_form;
  return out;
}

Scalar trace_integral_matrix_algebra(int n, const Matrix& a) {
  if (a.rows() != n || a.cols() != n)
    throw DimensionError("trace_integral_matrix_algebra: matrix is not " +
                         std::to_string(n) + "x" + std::to_string(n));
  return a.trace();
}

}  // namespace algint
