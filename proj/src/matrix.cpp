#include "algint/matrix.hpp"

#include <sstream>

#include "algint/errors.hpp"
#include "algint/kernels.hpp"

namespace algint {

Matrix::Matrix(int rows, int cols, const FieldDesc& f)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw DimensionError("matrix: negative shape");
  e_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(int n, const FieldDesc& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::unit(int rows, int cols, const FieldDesc& f, int r, int c) {
  Matrix m(rows, cols, f);
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw DimensionError("matrix unit: index out of range");
  m.at(r, c) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         const FieldDesc& f) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(nr, nc, f);
  for (int r = 0; r < nr; ++r) {
    if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != nc)
      throw DimensionError("matrix from_rows: ragged rows");
    for (int c = 0; c < nc; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto& s : m.e_) s = s.conj();
  return m;
}

Matrix Matrix::conj_transpose() const { return transpose().conj(); }

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionError("trace: matrix is not square");
  Scalar t = Scalar::zero(field_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix add: shape mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix subtract: shape mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& s : m.e_) s = -s;
  return m;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw DimensionError("inverse: matrix is not square");
  const int n = rows_;
  // Gauss-Jordan on [M | I] through the canonical rref kernel
  std::vector<kernels::Row> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    kernels::Row row(static_cast<size_t>(2 * n), Scalar::zero(field_));
    for (int c = 0; c < n; ++c) row[static_cast<size_t>(c)] = at(r, c);
    row[static_cast<size_t>(n + r)] = Scalar::one(field_);
    rows.push_back(std::move(row));
  }
  auto rr = kernels::rref(std::move(rows), 2 * n, field_);
  if (rr.rank() < n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (rr.pivot_cols[static_cast<size_t>(i)] != i) return std::nullopt;
  Matrix inv(n, n, field_);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      inv.at(r, c) = rr.rows[static_cast<size_t>(r)][static_cast<size_t>(n + c)];
  return inv;
}

int Matrix::rank() const {
  std::vector<kernels::Row> rows;
  rows.reserve(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    kernels::Row row(static_cast<size_t>(cols_), Scalar::zero(field_));
    for (int c = 0; c < cols_; ++c) row[static_cast<size_t>(c)] = at(r, c);
    rows.push_back(std::move(row));
  }
  return kernels::rref(std::move(rows), cols_, field_).rank();
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionError("matrix apply: length mismatch");
  std::vector<Scalar> out(static_cast<size_t>(rows_), Scalar::zero(field_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      out[static_cast<size_t>(r)].addmul(at(r, c), v[static_cast<size_t>(c)]);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
         e_ == o.e_;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (int r = 0; r < rows_; ++r) {
    out << (r ? "\n" : "") << "[";
    for (int c = 0; c < cols_; ++c) out << (c ? ", " : "") << at(r, c).str();
    out << "]";
  }
  return out.str();
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  return kernels::matmul(a, b);
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) *= s;
  return m;
}

}  // namespace algint
