#pragma once

#include <array>
#include <optional>
#include <vector>

#include "algint/algebra.hpp"
#include "algint/integration.hpp"

namespace algint {

// A linear map D x_i = sum_j d_ij x_j satisfying the Leibniz rule.
struct Derivation {
  Matrix d;
  enum class Kind { general, inner } kind = Kind::general;
  // for inner derivations, the element a with D x = x a - a x
  std::optional<AlgebraElement> generator;
};

// Canonical basis of the space of all derivations: nullspace of the Leibniz
// constraints f_ijk d_kl = d_ik f_kjl + d_jk f_ikl over the d entries.
std::vector<Derivation> derivation_space(const Algebra& a);

struct DerivationReport {
  // (i, j, l) where the Leibniz rule fails on x_i x_j at output component l
  std::vector<std::array<int, 3>> leibniz_violations;
  // basis i where [R_i, d] != R_{D x_i}; an equivalent formulation computed
  // independently as a cross-check
  std::vector<int> commutator_violations;

  bool ok() const {
    return leibniz_violations.empty() && commutator_violations.empty();
  }
  bool routes_agree() const {
    return leibniz_violations.empty() == commutator_violations.empty();
  }
};

DerivationReport is_derivation(const Algebra& a, const Matrix& d);

// d = R_a - L_a^T, i.e. D x = x a - a x. Requires an associative algebra
// (the construction is only a derivation then); verified before returning.
Derivation inner_derivation(const Algebra& a, const AlgebraElement& gen);

// Integration by parts: integral(D x) = 0 for every x, i.e. d applied to
// the value vector vanishes.
bool ibp_holds(const IntegralFunctional& f, const Matrix& d);

// An algebra automorphism S x_i = sum_j s_ij x_j with cached inverse.
struct Automorphism {
  Matrix s;
  Matrix s_inverse;
};

// (i, j) pairs where S(x_i x_j) != S(x_i) S(x_j).
std::vector<std::array<int, 2>> automorphism_violations(const Algebra& a,
                                                        const Matrix& s);

// Validates invertibility and the product rule; throws Error otherwise.
Automorphism make_automorphism(const Algebra& a, const Matrix& s);

// Smallest k >= 1 with d^k = 0, or nothing when d is not nilpotent.
std::optional<int> nilpotency_index(const Matrix& d);

// s = exp(alpha d), exact, defined only for nilpotent d; otherwise throws
// NonNilpotentError carrying the power at which the sequence d^k revisits an
// earlier value (for idempotent-like d) or gives up past the dimension
// bound. The result is checked to be an automorphism.
Automorphism exp_automorphism(const Algebra& a, const Matrix& d,
                              const mpq_class& alpha);

// Measure invariance: C^-1 s^T C = s^-1.
bool measure_invariant(const IntegralFunctional& f, const Automorphism& s);

// The three faces of integration-by-parts for one derivation:
//   (a) integral(D x) = 0 for all x,
//   (b) d + C^-1 d^T C = 0,
//   (c) invariance of the measure under exp(alpha d).
// Leg (c) is evaluated exactly at sample points alpha = 1, 2, -1, extended
// deterministically with 3, -2, 4, ... until there are degree_bound + 1 of
// them; both sides of (c) are polynomials in alpha of degree at most
// 2 (nilpotency index - 1), so agreement at that many points decides the
// identity for every alpha. For non-nilpotent d leg (c) falls back to any
// supplied finite automorphisms and is otherwise left unevaluated.
struct TheoremReport {
  bool ibp = false;            // leg (a)
  bool infinitesimal = false;  // leg (b)
  std::optional<bool> exponentiated;
  std::vector<mpq_class> alphas;  // sample points used for leg (c)
  int degree_bound = -1;          // -1 when leg (c) did not use exponentials
  bool legs_agree = false;
};

TheoremReport theorem_roundtrip(
    const IntegralFunctional& f, const Matrix& d,
    const std::vector<Automorphism>& finite_automorphisms = {});

}  // namespace algint
