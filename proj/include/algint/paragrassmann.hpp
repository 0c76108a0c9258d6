#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algint/algebra.hpp"
#include "algint/rng.hpp"

namespace algint {

// Truncated polynomial algebra on one generator: basis 1, t, ..., t^p with
// t^(p+1) = 0, over the rationals. Everything in this module indexes basis
// elements 0-based (basis k is t^k) and matrix entries 0-based; printed
// formulas elsewhere often number matrix rows from 1, and the conversion
// happens here and only here: row i (1-based) of a (p+1) x (p+1) matrix is
// row i-1 here, and the coefficient of t^k sits in 1-based row p+1-k of the
// last column, i.e. 0-based (p-k, p).
struct ParagrassmannAlgebra {
  int p = 0;
  Algebra algebra;
};

ParagrassmannAlgebra paragrassmann_algebra(int p);

// The (p+1) x (p+1) matrix X representing the generator: ones on the
// superdiagonal. X^k has the k-th superdiagonal set, X^(p+1) = 0, and
// f(t) -> f(X) is an algebra embedding.
Matrix embed(int p);

// Splitting of an arbitrary square matrix B as f(X) + B_tilde where
// B_tilde kills the matrix units e(p, k) from the right and has a zero last
// column. f_coeffs[k] is the coefficient of X^k (equivalently of t^k),
// read off the last column of B bottom to top.
struct MatrixDecomposition {
  std::vector<Scalar> f_coeffs;
  Matrix b_tilde;
};

MatrixDecomposition decompose(int p, const Matrix& b);

// Rank-one projector e(p, k-1): trace against it picks out one coefficient.
// k is the same 1-based shift that appears in shifted trace formulas;
// k = 1 gives the plain integral.
Matrix projector(int p, int k = 1);

// Trace form of the integral: Tr[f(X) P] with P = projector(p, k), equal to
// the coefficient of t^p. Coefficients ascend in powers of t.
Scalar trace_integral(int p, const std::vector<Scalar>& f_coeffs, int k = 1);

// The pinned antidiagonal C (C_jk = 1 when j + k = p) whose normalization
// makes the functional integral of t^p equal to 1.
Matrix paragrassmann_c(int p);

struct EquivalenceReport {
  int p = 0;
  bool monomials_ok = false;  // trace path == functional path on every t^k
  bool random_ok = false;     // and on n_random random elements
  int n_random = 0;
  // doubling C halves the functional path and leaves the trace path alone;
  // the comparison only holds for the pinned normalization above
  bool normalization_dependence_flagged = false;
  std::string detail;

  bool ok() const { return monomials_ok && random_ok; }
};

// Proves trace path == functional path at one p by exhausting monomials,
// sampling random elements, and flagging how the agreement depends on the
// normalization of C.
EquivalenceReport equivalence_check(int p, int n_random = 25,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace algint
