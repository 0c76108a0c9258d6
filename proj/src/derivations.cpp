#include "algint/derivations.hpp"

#include <sstream>

#include "algint/errors.hpp"

namespace algint {

namespace {

size_t cell(int dim, int i, int j) {
  return static_cast<size_t>(i) * dim + j;
}

}  // namespace

std::vector<Derivation> derivation_space(const Algebra& a) {
  const int n = a.dim();
  const FieldDesc& fd = a.field();
  const Scalar zero = Scalar::zero(fd);
  std::vector<kernels::Row> rows;
  // f_ijk d_kl - d_ik f_kjl - d_jk f_ikl = 0 for all (i, j, l)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        kernels::Row row(static_cast<size_t>(n) * n, zero);
        bool nonzero = false;
        for (int k = 0; k < n; ++k) {
          if (!a.f(i, j, k).is_zero()) {
            row[cell(n, k, l)] += a.f(i, j, k);
            nonzero = true;
          }
          if (!a.f(k, j, l).is_zero()) {
            row[cell(n, i, k)] -= a.f(k, j, l);
            nonzero = true;
          }
          if (!a.f(i, k, l).is_zero()) {
            row[cell(n, j, k)] -= a.f(i, k, l);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  auto basis = kernels::nullspace(rows, n * n, fd);
  std::vector<Derivation> out;
  out.reserve(basis.size());
  for (const auto& v : basis) {
    Matrix m(n, n, fd);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = v[cell(n, i, j)];
    out.push_back(Derivation{std::move(m), Derivation::Kind::general, {}});
  }
  return out;
}

DerivationReport is_derivation(const Algebra& a, const Matrix& d) {
  const int n = a.dim();
  if (d.rows() != n || d.cols() != n)
    throw DimensionError("is_derivation: d shape mismatch");
  if (d.field() != a.field())
    throw FieldMismatchError("is_derivation: d field mismatch");
  DerivationReport rep;
  const FieldDesc& fd = a.field();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        Scalar acc = Scalar::zero(fd);
        for (int k = 0; k < n; ++k) {
          acc.addmul(a.f(i, j, k), d.at(k, l));
          acc.submul(d.at(i, k), a.f(k, j, l));
          acc.submul(d.at(j, k), a.f(i, k, l));
        }
        if (!acc.is_zero()) rep.leibniz_violations.push_back({i, j, l});
      }
  // independent route: [R_i, d] = R_{D x_i}
  RegularReps reps = regular_reps(a);
  for (int i = 0; i < n; ++i) {
    Matrix lhs = reps.right[static_cast<size_t>(i)] * d -
                 d * reps.right[static_cast<size_t>(i)];
    Matrix rhs(n, n, fd);
    for (int j = 0; j < n; ++j) {
      if (d.at(i, j).is_zero()) continue;
      rhs += d.at(i, j) * reps.right[static_cast<size_t>(j)];
    }
    if (lhs != rhs) rep.commutator_violations.push_back(i);
  }
  return rep;
}

Derivation inner_derivation(const Algebra& a, const AlgebraElement& gen) {
  RegularReps reps = regular_reps(a);
  Matrix d = rep_of(reps.right, gen) - rep_of(reps.left, gen).transpose();
  DerivationReport rep = is_derivation(a, d);
  if (!rep.ok())
    throw Error(
        "inner_derivation: R_a - L_a^T is not a derivation here; the algebra "
        "is not associative");
  return Derivation{std::move(d), Derivation::Kind::inner, gen};
}

bool ibp_holds(const IntegralFunctional& f, const Matrix& d) {
  if (d.rows() != f.algebra->dim() || d.cols() != f.algebra->dim())
    throw DimensionError("ibp_holds: d shape mismatch");
  std::vector<Scalar> dv = d.apply(f.values);
  for (const auto& s : dv)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<std::array<int, 2>> automorphism_violations(const Algebra& a,
                                                        const Matrix& s) {
  const int n = a.dim();
  std::vector<std::array<int, 2>> out;
  const FieldDesc& fd = a.field();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool bad = false;
      // f_ijk s_km == s_ik s_jl f_klm for all m
      for (int m = 0; m < n && !bad; ++m) {
        Scalar lhs = Scalar::zero(fd);
        for (int k = 0; k < n; ++k) lhs.addmul(a.f(i, j, k), s.at(k, m));
        Scalar rhs = Scalar::zero(fd);
        for (int k = 0; k < n; ++k) {
          if (s.at(i, k).is_zero()) continue;
          for (int l = 0; l < n; ++l) {
            if (s.at(j, l).is_zero() || a.f(k, l, m).is_zero()) continue;
            rhs += s.at(i, k) * s.at(j, l) * a.f(k, l, m);
          }
        }
        bad = lhs != rhs;
      }
      if (bad) out.push_back({i, j});
    }
  return out;
}

Automorphism make_automorphism(const Algebra& a, const Matrix& s) {
  if (s.rows() != a.dim() || s.cols() != a.dim())
    throw DimensionError("make_automorphism: shape mismatch");
  auto inv = s.inverse();
  if (!inv) throw Error("make_automorphism: s is singular");
  auto bad = automorphism_violations(a, s);
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "make_automorphism: product rule fails at (" << bad[0][0] << ","
        << bad[0][1] << ")";
    if (bad.size() > 1) msg << " and " << bad.size() - 1 << " more pairs";
    throw Error(msg.str());
  }
  return Automorphism{s, std::move(*inv)};
}

std::optional<int> nilpotency_index(const Matrix& d) {
  if (d.rows() != d.cols())
    throw DimensionError("nilpotency_index: matrix is not square");
  const int n = d.rows();
  Matrix power = d;
  for (int k = 1; k <= n; ++k) {
    if (power.is_zero()) return k;
    power = power * d;
  }
  return std::nullopt;
}

Automorphism exp_automorphism(const Algebra& a, const Matrix& d,
                              const mpq_class& alpha) {
  if (d.rows() != a.dim() || d.cols() != a.dim())
    throw DimensionError("exp_automorphism: d shape mismatch");
  const int n = a.dim();
  // find the nilpotency index; diagnose repetition for the error message
  std::vector<Matrix> powers;  // d^1, d^2, ...
  Matrix power = d;
  int index = -1;
  for (int k = 1; k <= n; ++k) {
    if (power.is_zero()) {
      index = k;
      break;
    }
    powers.push_back(power);
    power = power * d;
  }
  if (index < 0) {
    for (size_t k = 0; k < powers.size(); ++k)
      if (powers[k] == power)
        throw NonNilpotentError(
            "exp_automorphism: d is not nilpotent; d^" +
                std::to_string(n + 1) + " revisits d^" + std::to_string(k + 1) +
                ", so the exponential series never terminates",
            static_cast<int>(k + 1));
    throw NonNilpotentError(
        "exp_automorphism: d is not nilpotent (d^" + std::to_string(n) +
            " != 0), so the exponential series never terminates",
        n);
  }
  const FieldDesc& fd = a.field();
  Matrix s = Matrix::identity(n, fd);
  mpq_class alpha_pow = 1;
  mpz_class factorial = 1;
  for (int k = 1; k < index; ++k) {
    alpha_pow *= alpha;
    factorial *= k;
    Scalar coeff = Scalar::from_rational(fd, alpha_pow / mpq_class(factorial));
    s += coeff * powers[static_cast<size_t>(k - 1)];
  }
  return make_automorphism(a, s);
}

bool measure_invariant(const IntegralFunctional& f, const Automorphism& s) {
  const Matrix& c = f.source_c.matrix;
  const Matrix& cinv = f.source_c.inverse;
  return cinv * s.s.transpose() * c == s.s_inverse;
}

TheoremReport theorem_roundtrip(
    const IntegralFunctional& f, const Matrix& d,
    const std::vector<Automorphism>& finite_automorphisms) {
  DerivationReport check = is_derivation(*f.algebra, d);
  if (!check.ok())
    throw Error("theorem_roundtrip: d does not satisfy the Leibniz rule");
  TheoremReport rep;
  rep.ibp = ibp_holds(f, d);
  // leg (b): d + C^-1 d^T C = 0
  {
    Matrix lhs = d + f.source_c.inverse * d.transpose() * f.source_c.matrix;
    rep.infinitesimal = lhs.is_zero();
  }
  // leg (c)
  if (auto k0 = nilpotency_index(d)) {
    rep.degree_bound = 2 * (*k0 - 1);
    std::vector<mpq_class> samples = {1, 2, -1};
    long next = 3;
    while (static_cast<int>(samples.size()) < rep.degree_bound + 1) {
      samples.push_back(next);
      samples.push_back(-(next - 1));
      ++next;
    }
    while (static_cast<int>(samples.size()) > rep.degree_bound + 1 &&
           static_cast<int>(samples.size()) > 3)
      samples.pop_back();
    bool all = true;
    for (const auto& alpha : samples)
      all = all && measure_invariant(f, exp_automorphism(*f.algebra, d, alpha));
    rep.exponentiated = all;
    rep.alphas = std::move(samples);
  } else if (!finite_automorphisms.empty()) {
    bool all = true;
    for (const auto& s : finite_automorphisms)
      all = all && measure_invariant(f, s);
    rep.exponentiated = all;
  }
  rep.legs_agree = rep.ibp == rep.infinitesimal &&
                   (!rep.exponentiated || *rep.exponentiated == rep.ibp);
  return rep;
}

}  // namespace algint
