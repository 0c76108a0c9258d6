#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algint/algebra.hpp"
#include "algint/conjugation.hpp"
#include "algint/integration.hpp"
#include "algint/paragrassmann.hpp"
#include "algint/rng.hpp"

using namespace algint;

namespace {

Matrix matrix_poly(int p, const std::vector<Scalar>& coeffs) {
  FieldDesc f = FieldDesc::rational();
  Matrix x = embed(p);
  Matrix power = Matrix::identity(p + 1, f);
  Matrix out(p + 1, p + 1, f);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    out += coeffs[k] * power;
    power = power * x;
  }
  return out;
}

Matrix random_square(SmallIntRng& rng, int n) {
  FieldDesc f = FieldDesc::rational();
  Matrix m(n, n, f);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = random_scalar(rng, f, 9);
  return m;
}

}  // namespace

TEST_CASE("generator matrix: superdiagonal powers, vanishing past the top") {
  for (int p = 1; p <= 6; ++p) {
    Matrix x = embed(p);
    Matrix power = Matrix::identity(p + 1, FieldDesc::rational());
    for (int k = 0; k <= p; ++k) {
      for (int r = 0; r <= p; ++r)
        for (int c = 0; c <= p; ++c) {
          bool on = (c == r + k);
          CHECK(power.at(r, c) == Scalar(x.field(), on ? 1 : 0));
        }
      power = power * x;
    }
    CHECK(power.is_zero());
  }
}

TEST_CASE("embedding is an algebra homomorphism") {
  SmallIntRng rng(kDefaultSeed);
  for (int p = 1; p <= 6; ++p) {
    Algebra a = paragrassmann_algebra(p).algebra;
    auto u = random_coeffs(rng, a.field(), a.dim(), 7);
    auto v = random_coeffs(rng, a.field(), a.dim(), 7);
    auto prod = multiply(element(a, u), element(a, v));
    CHECK(matrix_poly(p, u) * matrix_poly(p, v) ==
          matrix_poly(p, prod.coeffs));
  }
}

TEST_CASE("decomposing a pure power returns the power and nothing else") {
  for (int p = 1; p <= 4; ++p) {
    Matrix x = embed(p);
    Matrix power = Matrix::identity(p + 1, FieldDesc::rational());
    for (int k = 0; k <= p; ++k) {
      auto dec = decompose(p, power);
      for (int j = 0; j <= p; ++j)
        CHECK(dec.f_coeffs[static_cast<size_t>(j)] ==
              Scalar(x.field(), j == k ? 1 : 0));
      CHECK(dec.b_tilde.is_zero());
      power = power * x;
    }
  }
}

TEST_CASE("two by two splitting, entry by entry") {
  FieldDesc f = FieldDesc::rational();
  // B = 3*1 + 5*diag(1,-1) + 7*e(1,2) + 11*e(2,1), 1-based units
  Matrix b(2, 2, f);
  b.at(0, 0) = Scalar(f, 8);
  b.at(0, 1) = Scalar(f, 7);
  b.at(1, 0) = Scalar(f, 11);
  b.at(1, 1) = Scalar(f, -2);
  auto dec = decompose(1, b);
  CHECK(dec.f_coeffs[0] == Scalar(f, -2));
  CHECK(dec.f_coeffs[1] == Scalar(f, 7));
  CHECK(dec.b_tilde.at(0, 0) == Scalar(f, 10));
  CHECK(dec.b_tilde.at(0, 1) == Scalar(f, 0));
  CHECK(dec.b_tilde.at(1, 0) == Scalar(f, 11));
  CHECK(dec.b_tilde.at(1, 1) == Scalar(f, 0));
  CHECK(matrix_poly(1, dec.f_coeffs) + dec.b_tilde == b);
}

TEST_CASE("the remainder kills every projector and has a zero last column") {
  SmallIntRng rng(kDefaultSeed + 5);
  for (int p = 1; p <= 5; ++p) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix b = random_square(rng, p + 1);
      auto dec = decompose(p, b);
      CHECK(matrix_poly(p, dec.f_coeffs) + dec.b_tilde == b);
      for (int r = 0; r <= p; ++r) CHECK(dec.b_tilde.at(r, p).is_zero());
      for (int k = 1; k <= p + 1; ++k)
        CHECK((dec.b_tilde * projector(p, k)).is_zero());
    }
  }
}

TEST_CASE("decompose is linear") {
  SmallIntRng rng(kDefaultSeed + 6);
  for (int p : {1, 3}) {
    Matrix a = random_square(rng, p + 1);
    Matrix b = random_square(rng, p + 1);
    auto da = decompose(p, a);
    auto db = decompose(p, b);
    auto dsum = decompose(p, a + b);
    for (int j = 0; j <= p; ++j)
      CHECK(dsum.f_coeffs[static_cast<size_t>(j)] ==
            da.f_coeffs[static_cast<size_t>(j)] +
                db.f_coeffs[static_cast<size_t>(j)]);
    CHECK(dsum.b_tilde == da.b_tilde + db.b_tilde);
  }
}

TEST_CASE("trace form picks out the top coefficient") {
  FieldDesc f = FieldDesc::rational();
  for (int p = 1; p <= 6; ++p) {
    for (int k = 0; k <= p; ++k) {
      std::vector<Scalar> mono(static_cast<size_t>(p + 1), Scalar(f));
      mono[static_cast<size_t>(k)] = Scalar(f, 1);
      CHECK(trace_integral(p, mono) == Scalar(f, k == p ? 1 : 0));
    }
  }
  // f(t) = b + a t integrates to a
  CHECK(trace_integral(1, {Scalar(f, 5), Scalar(f, -3)}) == Scalar(f, -3));
}

TEST_CASE("projector shape and shift") {
  FieldDesc f = FieldDesc::rational();
  Matrix sigma_minus(2, 2, f);
  sigma_minus.at(1, 0) = Scalar(f, 1);
  CHECK(projector(1, 1) == sigma_minus);

  for (int p : {2, 4}) {
    Matrix base = projector(p, 1);
    Matrix power = Matrix::identity(p + 1, f);
    for (int k = 1; k <= p + 1; ++k) {
      CHECK(projector(p, k) == base * power);
      power = power * embed(p);
    }
  }
  CHECK_THROWS_AS(projector(2, 0), DimensionError);
  CHECK_THROWS_AS(projector(2, 4), DimensionError);
}

TEST_CASE("shifted trace equals the plain integral of the shifted function") {
  SmallIntRng rng(kDefaultSeed + 7);
  FieldDesc f = FieldDesc::rational();
  for (int p = 2; p <= 5; ++p) {
    Algebra a = paragrassmann_algebra(p).algebra;
    auto coeffs = random_coeffs(rng, f, p + 1, 9);
    for (int k = 1; k <= p + 1; ++k) {
      auto shifted =
          multiply(basis_element(a, k - 1), element(a, coeffs)).coeffs;
      CHECK(trace_integral(p, coeffs, k) == trace_integral(p, shifted));
    }
  }
}

TEST_CASE("trace path and functional path agree at the pinned "
          "normalization") {
  for (int p = 1; p <= 5; ++p) {
    auto rep = equivalence_check(p, 25, kDefaultSeed);
    CHECK(rep.ok());
    CHECK(rep.p == p);
    CHECK(rep.monomials_ok);
    CHECK(rep.random_ok);
    CHECK(rep.n_random == 25);
    CHECK(rep.normalization_dependence_flagged);
    CHECK_FALSE(rep.detail.empty());
  }
}

TEST_CASE("doubling the conjugation matrix halves the functional path") {
  int p = 2;
  Algebra a = paragrassmann_algebra(p).algebra;
  FieldDesc f = a.field();
  Matrix doubled = Scalar(f, 2) * paragrassmann_c(p);
  IntegralFunctional fn = integral_functional(a, make_cmatrix(a, doubled));
  std::vector<Scalar> top(3, Scalar(f));
  top[2] = Scalar(f, 1);
  CHECK(integrate(fn, element(a, top)) ==
        Scalar::from_rational(f, mpq_class(1, 2)));
  CHECK(trace_integral(p, top) == Scalar(f, 1));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(paragrassmann_algebra(0), DimensionError);
  CHECK_THROWS_AS(embed(0), DimensionError);
  CHECK_THROWS_AS(decompose(2, Matrix(2, 2, FieldDesc::rational())),
                  DimensionError);
  CHECK_THROWS_AS(
      trace_integral(2, {Scalar(FieldDesc::rational(), 1)}),
      DimensionError);
}
