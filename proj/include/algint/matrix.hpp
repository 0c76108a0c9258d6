#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algint/scalar.hpp"

namespace algint {

// Dense exact matrix over one scalar field. Row-major. Sized for the desk
// scale this library works at (regular representations of algebras of
// dimension a few dozen), not for numerics.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const FieldDesc& f);

  static Matrix identity(int n, const FieldDesc& f);
  // Single 1 at (r, c), zero elsewhere.
  static Matrix unit(int rows, int cols, const FieldDesc& f, int r, int c);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          const FieldDesc& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldDesc& field() const { return field_; }

  Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const {
    return e_[static_cast<size_t>(r) * cols_ + c];
  }

  Matrix transpose() const;
  Matrix conj() const;  // entrywise conjugation
  Matrix conj_transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix operator-() const;
  // Exact Gauss-Jordan; nullopt when singular.
  std::optional<Matrix> inverse() const;
  int rank() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M v

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Compact row-per-line rendering for CLI output.
  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  FieldDesc field_;
  std::vector<Scalar> e_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix m);

}  // namespace algint
