#pragma once

#include <array>
#include <vector>

#include "algint/matrix.hpp"

namespace algint {

class Algebra;

namespace kernels {

// The data-parallel cores of the library. Each kernel has an OpenMP body
// here and a plain serial twin in algint::ref with identical output; the
// tests diff the two and the benchmark target times them against each other.
// Everything is exact arithmetic, and the reduced row echelon form of a row
// space is unique, so parallel scheduling cannot change any result.

Matrix matmul(const Matrix& a, const Matrix& b);

using Row = std::vector<Scalar>;

struct RrefResult {
  std::vector<Row> rows;        // sorted by pivot column, pivots one,
  std::vector<int> pivot_cols;  // pivot columns zero elsewhere
  int rank() const { return static_cast<int>(rows.size()); }
};

// Canonical reduced row echelon form. Incoming rows are block-reduced in
// parallel against the pivot set, then folded in serially.
RrefResult rref(std::vector<Row> rows, int ncols, const FieldDesc& f);

// Canonical basis of {x : A x = 0}, one vector per free column, ordered by
// free column index.
std::vector<Row> nullspace(const std::vector<Row>& rows, int ncols,
                           const FieldDesc& f);

struct AssocViolations {
  // (i, j) pairs breaking R_i R_j = f_ijk R_k, L_i L_j = f_ijk L_k and
  // [R_i, L_j^T] = 0, in that order.
  std::vector<std::array<int, 2>> right_rep;
  std::vector<std::array<int, 2>> left_rep;
  std::vector<std::array<int, 2>> commutant;
  // (i, j, k) with x_i (x_j x_k) != (x_i x_j) x_k, checked on raw structure
  // constants independently of the representation matrices.
  std::vector<std::array<int, 3>> triples;

  bool ok() const {
    return right_rep.empty() && left_rep.empty() && commutant.empty() &&
           triples.empty();
  }
};

AssocViolations associativity_scan(const Algebra& a,
                                   const std::vector<Matrix>& right,
                                   const std::vector<Matrix>& left);

enum class CompletenessOrder { ket_bra, bra_ket };

// Cells (i, j) where the completeness sum misses the identity matrix:
//   ket_bra:  sum_kp f_ikp C_kj values_p  != delta_ij
//   bra_ket:  sum_kp C_ki f_kjp values_p  != delta_ij
std::vector<std::array<int, 2>> completeness_violations(
    const Algebra& a, const Matrix& c, const std::vector<Scalar>& values,
    CompletenessOrder order);

}  // namespace kernels

namespace ref {

// Serial reference implementations, deliberately written as the simplest
// possible loops. Kept for cross-checking the kernels above.

Matrix matmul(const Matrix& a, const Matrix& b);
kernels::RrefResult rref(std::vector<kernels::Row> rows, int ncols,
                         const FieldDesc& f);
std::vector<kernels::Row> nullspace(const std::vector<kernels::Row>& rows,
                                    int ncols, const FieldDesc& f);
kernels::AssocViolations associativity_scan(const Algebra& a,
                                            const std::vector<Matrix>& right,
                                            const std::vector<Matrix>& left);
std::vector<std::array<int, 2>> completeness_violations(
    const Algebra& a, const Matrix& c, const std::vector<Scalar>& values,
    kernels::CompletenessOrder order);

}  // namespace ref

}  // namespace algint
