#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algint/algebra.hpp"
#include "algint/catalog.hpp"
#include "algint/paragrassmann.hpp"
#include "algint/rng.hpp"

using namespace algint;

namespace {

AlgebraElement random_element(const Algebra& a, SmallIntRng& rng) {
  return element(a, random_coeffs(rng, a.field(), a.dim(), 6));
}

}  // namespace

TEST_CASE("construction validates its inputs") {
  FieldDesc f = FieldDesc::rational();
  CHECK_THROWS_AS(new_algebra(2, f, std::vector<Scalar>(7, Scalar(f))),
                  DimensionError);
  CHECK_THROWS_AS(
      new_algebra(2, f, std::vector<Scalar>(8, Scalar(f)), {"only one"}),
      DimensionError);
  std::vector<Scalar> mixed(8, Scalar(f));
  mixed[3] = Scalar(FieldDesc::gaussian(), 1);
  CHECK_THROWS_AS(new_algebra(2, f, std::move(mixed)), FieldMismatchError);
  CHECK_THROWS_AS(new_algebra(-1, f, {}), DimensionError);
  CHECK_NOTHROW(new_algebra(0, f, {}));
}

TEST_CASE("quaternion multiplication table") {
  Algebra q = quaternions();
  auto one = basis_element(q, 0);
  auto i = basis_element(q, 1);
  auto j = basis_element(q, 2);
  auto k = basis_element(q, 3);
  CHECK(multiply(i, j).coeffs == k.coeffs);
  CHECK(multiply(j, i).coeffs == scale(Scalar(q.field(), -1), k).coeffs);
  CHECK(multiply(i, i).coeffs == scale(Scalar(q.field(), -1), one).coeffs);
  CHECK(multiply(j, k).coeffs == i.coeffs);
  CHECK(multiply(k, i).coeffs == j.coeffs);
  CHECK(commutator(i, j).coeffs == scale(Scalar(q.field(), 2), k).coeffs);
}

TEST_CASE("element algebra on the nilpotent example") {
  Algebra g = paragrassmann_algebra(1).algebra;
  auto t = basis_element(g, 1);
  CHECK(multiply(t, t).coeffs == zero_element(g).coeffs);
  auto x = add(basis_element(g, 0), t);
  CHECK(multiply(x, x).coeffs ==
        add(basis_element(g, 0), scale(Scalar(g.field(), 2), t)).coeffs);
}

TEST_CASE("regular representations respect products") {
  for (const char* spec : {"matrix:2", "quaternions", "torus:2"}) {
    Algebra a = make_catalog_algebra(spec);
    RegularReps reps = regular_reps(a);
    SmallIntRng rng(kDefaultSeed);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = random_element(a, rng);
      auto y = random_element(a, rng);
      auto xy = multiply(x, y);
      CHECK(rep_of(reps.right, xy) ==
            rep_of(reps.right, x) * rep_of(reps.right, y));
      CHECK(rep_of(reps.left, xy) ==
            rep_of(reps.left, x) * rep_of(reps.left, y));
    }
  }
}

TEST_CASE("representation matrices reproduce the product") {
  Algebra q = quaternions();
  RegularReps reps = regular_reps(q);
  SmallIntRng rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_element(q, rng);
    auto y = random_element(q, rng);
    // row-vector action: coefficients of x y are x^T R_y and y^T L_x
    CHECK(multiply(x, y).coeffs ==
          rep_of(reps.right, y).transpose().apply(x.coeffs));
    CHECK(multiply(x, y).coeffs ==
          rep_of(reps.left, x).apply(y.coeffs));
  }
}

TEST_CASE("associativity holds for every builtin family") {
  for (const char* spec : {"matrix:1", "matrix:3", "quaternions", "cyclic:5",
                           "torus:2", "torus:3", "paragrassmann:4"}) {
    Algebra a = make_catalog_algebra(spec);
    CHECK(is_associative(a).ok());
  }
}

TEST_CASE("a perturbed product is flagged") {
  Algebra m2 = matrix_algebra(2);
  auto f = m2.tensor();
  f[(1 * 4 + 2) * 4 + 3] += Scalar::one(m2.field());
  Algebra bad = new_algebra(4, m2.field(), std::move(f));
  CHECK_FALSE(is_associative(bad).ok());
}

TEST_CASE("identity detection, on and off the basis") {
  Algebra q = quaternions();
  auto e = find_identity(q);
  REQUIRE(e.has_value());
  CHECK(e->coeffs == basis_element(q, 0).coeffs);
  CHECK(q.identity_index() == 0);

  Algebra m2 = matrix_algebra(2);
  auto em = find_identity(m2);
  REQUIRE(em.has_value());
  FieldDesc f = m2.field();
  std::vector<Scalar> diag = {Scalar(f, 1), Scalar(f), Scalar(f),
                              Scalar(f, 1)};
  CHECK(em->coeffs == diag);
  CHECK_FALSE(m2.identity_index().has_value());

  // x y = 0 for all x, y: no identity anywhere
  Algebra null1(1, f, std::vector<Scalar>(1, Scalar(f)));
  CHECK_FALSE(find_identity(null1).has_value());
}

TEST_CASE("unitalizing the one-dimensional null algebra gives the p = 1 "
          "nilpotent table") {
  FieldDesc f = FieldDesc::rational();
  Algebra null1(1, f, std::vector<Scalar>(1, Scalar(f)));
  Algebra u = unitalize(null1);
  Algebra g = paragrassmann_algebra(1).algebra;
  CHECK(u.dim() == 2);
  CHECK(u.tensor() == g.tensor());
  auto e = find_identity(u);
  REQUIRE(e.has_value());
  CHECK(e->coeffs == basis_element(u, 0).coeffs);
}

TEST_CASE("unitalize on dimension zero yields the field") {
  FieldDesc f = FieldDesc::rational();
  Algebra zero(0, f, {});
  Algebra u = unitalize(zero);
  CHECK(u.dim() == 1);
  CHECK(u.f(0, 0, 0).is_one());
}

TEST_CASE("opposite algebra swaps the representations") {
  Algebra q = quaternions();
  Algebra qop = opposite(q);
  RegularReps reps = regular_reps(q);
  RegularReps reps_op = regular_reps(qop);
  for (int i = 0; i < q.dim(); ++i) {
    CHECK(reps_op.right[static_cast<size_t>(i)] == reps.right_op(i));
    CHECK(reps_op.left[static_cast<size_t>(i)] == reps.left_op(i));
  }
  CHECK(opposite(qop) == q);
  CHECK(is_associative(qop).ok());
}

TEST_CASE("element operations check the algebra and the sizes") {
  Algebra q = quaternions();
  Algebra m2 = matrix_algebra(2);
  auto x = basis_element(q, 1);
  auto y = basis_element(m2, 1);
  CHECK_THROWS_AS(multiply(x, y), Error);
  CHECK_THROWS_AS(element(q, std::vector<Scalar>(3, Scalar(q.field()))),
                  DimensionError);
  CHECK_THROWS_AS(basis_element(q, 4), DimensionError);
}

TEST_CASE("commutativity of the cyclic family") {
  Algebra z5 = cyclic_group_algebra(5);
  RegularReps reps = regular_reps(z5);
  for (int i = 0; i < 5; ++i)
    CHECK(reps.right[static_cast<size_t>(i)] ==
          reps.left[static_cast<size_t>(i)].transpose());
  SmallIntRng rng(kDefaultSeed);
  auto x = random_element(z5, rng);
  auto y = random_element(z5, rng);
  CHECK(commutator(x, y).coeffs == zero_element(z5).coeffs);
}
