#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algint/kernels.hpp"
#include "algint/matrix.hpp"
#include "algint/scalar.hpp"

namespace algint {

// Finite-dimensional algebra given by structure constants: the product of
// basis elements is  x_i x_j = sum_k f[i][j][k] x_k. The tensor is stored
// dense in row-major order, index ((i*dim)+j)*dim+k. Nothing about
// associativity or a unit is assumed at construction; those are findings.
class Algebra {
 public:
  Algebra() = default;
  Algebra(int dim, const FieldDesc& field, std::vector<Scalar> f,
          std::vector<std::string> labels = {}, std::string name = "");

  int dim() const { return dim_; }
  const FieldDesc& field() const { return field_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Scalar>& tensor() const { return f_; }

  const Scalar& f(int i, int j, int k) const {
    return f_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  // Basis index of the two-sided identity, filled in by find_identity when
  // the identity turns out to be a basis element. Idempotent cache of a
  // derived fact; construction leaves it empty.
  const std::optional<int>& identity_index() const { return identity_index_; }

  bool operator==(const Algebra& o) const {
    return dim_ == o.dim_ && field_ == o.field_ && f_ == o.f_;
  }

 private:
  friend std::optional<struct AlgebraElement> find_identity(const Algebra&);

  int dim_ = 0;
  FieldDesc field_;
  std::vector<Scalar> f_;
  std::vector<std::string> labels_;
  std::string name_;
  mutable std::optional<int> identity_index_;
};

// Validated constructor: tensor of size dim^3, every scalar in the declared
// field, labels either empty or one per basis element. dim 0 is allowed as
// the degenerate input of unitalize.
Algebra new_algebra(int dim, const FieldDesc& field, std::vector<Scalar> f,
                    std::vector<std::string> labels = {},
                    std::string name = "");

struct AlgebraElement {
  const Algebra* algebra = nullptr;
  std::vector<Scalar> coeffs;
};

AlgebraElement element(const Algebra& a, std::vector<Scalar> coeffs);
AlgebraElement basis_element(const Algebra& a, int i);
AlgebraElement zero_element(const Algebra& a);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const Scalar& s, const AlgebraElement& a);
// a b - b a
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

// Right and left regular representations:
//   (R_i)_jk = f[j][i][k]   encodes multiplication by x_i from the right,
//   (L_i)_jk = f[i][k][j]   from the left.
// The opposite algebra's representations are the transposes, exposed as
// right_op / left_op.
struct RegularReps {
  std::vector<Matrix> right;
  std::vector<Matrix> left;
  Matrix right_op(int i) const { return left[static_cast<size_t>(i)].transpose(); }
  Matrix left_op(int i) const { return right[static_cast<size_t>(i)].transpose(); }
};

RegularReps regular_reps(const Algebra& a);

// R_a = sum_i a_i R_i for an element a (same for the left family).
Matrix rep_of(const std::vector<Matrix>& reps, const AlgebraElement& a);

using AssociativityReport = kernels::AssocViolations;

// Checks the representation identities R_i R_j = f_ijk R_k,
// L_i L_j = f_ijk L_k, [R_i, L_j^T] = 0, and independently rescans all
// element triples. A clean report is equivalent to associativity.
AssociativityReport is_associative(const Algebra& a);

// Solves the bilateral linear system e x_j = x_j e = x_j. The identity is
// unique when it exists; caches identity_index on the algebra when it turns
// out to be a basis element.
std::optional<AlgebraElement> find_identity(const Algebra& a);

// Adjoins an identity at basis index 0; input basis shifts up by one.
Algebra unitalize(const Algebra& a);

// Same space, product reversed: f'[i][j][k] = f[j][i][k].
Algebra opposite(const Algebra& a);

}  // namespace algint
