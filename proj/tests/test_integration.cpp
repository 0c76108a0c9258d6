#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algint/algebra.hpp"
#include "algint/catalog.hpp"
#include "algint/conjugation.hpp"
#include "algint/integration.hpp"
#include "algint/paragrassmann.hpp"
#include "algint/rng.hpp"

using namespace algint;

namespace {

IntegralFunctional catalog_functional(const Algebra& a) {
  auto cm = pick_invertible_c(a, solve_c_space(a));
  REQUIRE(cm.has_value());
  return integral_functional(a, *cm);
}

}  // namespace

TEST_CASE("matrix algebra: basis integrals are the unit-trace pattern") {
  for (int n : {1, 2, 3}) {
    Algebra a = matrix_algebra(n);
    IntegralFunctional fn = catalog_functional(a);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const Scalar& v = fn.values[static_cast<size_t>(pair_index(n, r, c))];
        if (r == c)
          CHECK(v.is_one());
        else
          CHECK(v.is_zero());
      }
  }
}

TEST_CASE("matrix algebra: integrating an element is taking its trace") {
  for (int n : {2, 3}) {
    Algebra a = matrix_algebra(n);
    IntegralFunctional fn = catalog_functional(a);
    SmallIntRng rng(kDefaultSeed + n);
    for (int trial = 0; trial < 20; ++trial) {
      auto coeffs = random_coeffs(rng, a.field(), a.dim(), 9);
      Matrix as_matrix(n, n, a.field());
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          as_matrix.at(r, c) = coeffs[static_cast<size_t>(pair_index(n, r, c))];
      CHECK(integrate(fn, element(a, coeffs)) ==
            trace_integral_matrix_algebra(n, as_matrix));
    }
  }
}

TEST_CASE("completeness holds across the builtin families") {
  for (const char* spec : {"matrix:2", "quaternions", "cyclic:4", "torus:2",
                           "paragrassmann:3"}) {
    Algebra a = make_catalog_algebra(spec);
    IntegralFunctional fn = catalog_functional(a);
    auto rep = verify_completeness(fn);
    CHECK(rep.ok());
  }
}

TEST_CASE("tampered values break completeness and name the cells") {
  Algebra a = matrix_algebra(2);
  IntegralFunctional fn = catalog_functional(a);
  fn.values[1] += Scalar::one(a.field());
  auto rep = verify_completeness(fn);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.ket_bra.empty());
  CHECK_FALSE(rep.bra_ket.empty());
}

TEST_CASE("a C that fails the resolution of the identity is rejected") {
  Algebra a = matrix_algebra(2);
  CMatrix cm = make_cmatrix(a, Matrix::identity(4, a.field()));
  CHECK_THROWS_AS(integral_functional(a, cm), CompletenessError);
}

TEST_CASE("no identity, no functional") {
  FieldDesc f = FieldDesc::rational();
  Algebra null1(1, f, std::vector<Scalar>(1, Scalar(f)));
  CMatrix cm = make_cmatrix(null1, Matrix::identity(1, f));
  CHECK_THROWS_AS(integral_functional(null1, cm), Error);
}

TEST_CASE("off-basis identity records the basis change audit") {
  Algebra a = matrix_algebra(2);
  IntegralFunctional fn = catalog_functional(a);
  REQUIRE(fn.basis_change.has_value());
  const Matrix& t = *fn.basis_change;
  // row 0 of T C^-1 T^T reproduces the integral values transported by T
  Matrix m = t * fn.source_c.inverse * t.transpose();
  auto tv = t.apply(fn.values);
  for (int j = 0; j < m.cols(); ++j)
    CHECK(m.at(0, j) == tv[static_cast<size_t>(j)]);

  Algebra q = quaternions();
  CHECK_FALSE(catalog_functional(q).basis_change.has_value());
}

TEST_CASE("scalar product: integral form equals coefficient form") {
  for (const char* spec : {"matrix:2", "quaternions", "torus:3"}) {
    Algebra a = make_catalog_algebra(spec);
    IntegralFunctional fn = catalog_functional(a);
    SmallIntRng rng(kDefaultSeed + 5);
    for (int trial = 0; trial < 10; ++trial) {
      auto f = element(a, random_coeffs(rng, a.field(), a.dim(), 6));
      auto g = element(a, random_coeffs(rng, a.field(), a.dim(), 6));
      auto result = scalar_product(fn, f, g);
      CHECK(result.agree);
      CHECK(result.integral_form == result.coefficient_form);
    }
  }
}

TEST_CASE("functional is linear") {
  Algebra q = quaternions();
  IntegralFunctional fn = catalog_functional(q);
  SmallIntRng rng(kDefaultSeed);
  auto x = element(q, random_coeffs(rng, q.field(), 4, 9));
  auto y = element(q, random_coeffs(rng, q.field(), 4, 9));
  Scalar two(q.field(), 2);
  CHECK(integrate(fn, add(x, y)) == integrate(fn, x) + integrate(fn, y));
  CHECK(integrate(fn, scale(two, x)) == two * integrate(fn, x));
}

TEST_CASE("nilpotent family: only the top power integrates to one") {
  int p = 4;
  Algebra g = paragrassmann_algebra(p).algebra;
  CMatrix cm = make_cmatrix(g, paragrassmann_c(p));
  IntegralFunctional fn = integral_functional(g, cm);
  for (int k = 0; k <= p; ++k) {
    Scalar v = integrate(fn, basis_element(g, k));
    if (k == p)
      CHECK(v.is_one());
    else
      CHECK(v.is_zero());
  }
}

TEST_CASE("trace oracle validates its input shape") {
  Matrix wrong(2, 3, FieldDesc::rational());
  CHECK_THROWS_AS(trace_integral_matrix_algebra(2, wrong), DimensionError);
}
