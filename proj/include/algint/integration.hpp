#pragma once

#include <array>
#include <optional>
#include <vector>

#include "algint/algebra.hpp"
#include "algint/conjugation.hpp"

namespace algint {

// The algebraic integral: the unique linear functional (given C) whose
// per-basis values make sum_kp f_ikp C_kj values_p the identity matrix.
// values[j] is the integral of x_j, always stored in the algebra's original
// basis order. When the identity element does not already sit at basis
// index 0, the reordering (or general change of basis) that puts it there is
// recorded in basis_change: values row 0 of the transformed C^-1 reproduces
// the same integrals, which construction verifies.
struct IntegralFunctional {
  const Algebra* algebra = nullptr;
  std::vector<Scalar> values;
  CMatrix source_c;
  std::vector<Scalar> identity_coeffs;
  // y = T x with y_0 the identity; empty when the identity is basis 0
  std::optional<Matrix> basis_change;
};

// Builds the functional from C and checks the completeness relation in both
// orders before returning; throws CompletenessError when C does not
// actually produce a resolution of the identity, and Error when the algebra
// has no identity element.
IntegralFunctional integral_functional(const Algebra& a, const CMatrix& c);

Scalar integrate(const IntegralFunctional& f, const AlgebraElement& x);

struct CompletenessReport {
  std::vector<std::array<int, 2>> ket_bra;  // integral |x><xC| misses 1
  std::vector<std::array<int, 2>> bra_ket;  // integral |xC><x| misses 1
  bool ok() const { return ket_bra.empty() && bra_ket.empty(); }
};

// Re-verifies both completeness orders for an already-built functional
// (useful after deliberately tampering with values in tests).
CompletenessReport verify_completeness(const IntegralFunctional& f);

struct ScalarProductResult {
  Scalar integral_form;     // integral of conj(f)(x) g(x) against the measure
  Scalar coefficient_form;  // sum_i conj(f_i) g_i
  bool agree = false;
};

// Computes the scalar product both ways. The two must agree whenever the
// functional is complete; disagreement is reported, not thrown, and the
// integral form is the value of record.
ScalarProductResult scalar_product(const IntegralFunctional& fn,
                                   const AlgebraElement& f,
                                   const AlgebraElement& g);

// Independent oracle for matrix algebras: the integral of a matrix is its
// trace. A is an n x n matrix written in the same field.
Scalar trace_integral_matrix_algebra(int n, const Matrix& a);

}  // namespace algint
