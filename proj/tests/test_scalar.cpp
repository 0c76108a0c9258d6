#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "algint/rng.hpp"
#include "algint/scalar.hpp"

using namespace algint;

namespace {

std::vector<long> poly(const std::vector<mpq_class>& p) {
  std::vector<long> out;
  for (const auto& c : p) out.push_back(static_cast<long>(c.get_num().get_si()));
  return out;
}

}  // namespace

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
}

TEST_CASE("cyclotomic polynomials, low orders") {
  using V = std::vector<long>;
  CHECK(poly(cyclotomic_polynomial(1)) == V{-1, 1});
  CHECK(poly(cyclotomic_polynomial(2)) == V{1, 1});
  CHECK(poly(cyclotomic_polynomial(3)) == V{1, 1, 1});
  CHECK(poly(cyclotomic_polynomial(4)) == V{1, 0, 1});
  CHECK(poly(cyclotomic_polynomial(5)) == V{1, 1, 1, 1, 1});
  CHECK(poly(cyclotomic_polynomial(6)) == V{1, -1, 1});
  CHECK(poly(cyclotomic_polynomial(8)) == V{1, 0, 0, 0, 1});
  CHECK(poly(cyclotomic_polynomial(9)) == V{1, 0, 0, 1, 0, 0, 1});
  CHECK(poly(cyclotomic_polynomial(12)) == V{1, 0, -1, 0, 1});
}

TEST_CASE("rational arithmetic and printing") {
  FieldDesc f = FieldDesc::rational();
  Scalar a = Scalar::parse(f, "1/2");
  Scalar b = Scalar::parse(f, "1/3");
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(Scalar(f, -7).str() == "-7");
  CHECK(Scalar::parse(f, "4/6").str() == "2/3");
  CHECK(Scalar::parse(f, "-0").is_zero());
  CHECK(a.inverse().str() == "2");
  CHECK(a.conj() == a);
  CHECK(Scalar::one(f).is_one());
  CHECK(Scalar::zero(f).is_zero());
}

TEST_CASE("rational parse rejects garbage") {
  FieldDesc f = FieldDesc::rational();
  CHECK_THROWS_AS(Scalar::parse(f, ""), ParseError);
  CHECK_THROWS_AS(Scalar::parse(f, "1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(f, "abc"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(f, "1.5"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(f, "1+2 i"), ParseError);
}

TEST_CASE("gaussian arithmetic") {
  FieldDesc f = FieldDesc::gaussian();
  Scalar i = Scalar::root_power(f, 1);
  CHECK((i * i).str() == "-1");
  Scalar a = Scalar::parse(f, "1+2 i");
  Scalar b = Scalar::parse(f, "3-1 i");
  CHECK((a * b).str() == "5+5 i");
  CHECK(a.conj().str() == "1-2 i");
  CHECK((a * a.inverse()).is_one());
  CHECK((a * a.conj()).str() == "5");
  CHECK(Scalar::parse(f, "2 i").str() == "2 i");
  CHECK(Scalar::parse(f, "-1/2 i").str() == "-1/2 i");
  CHECK(Scalar::parse(f, "7").str() == "7");
}

TEST_CASE("gaussian strings round-trip") {
  FieldDesc f = FieldDesc::gaussian();
  for (const char* s : {"0", "1", "-1", "1+1 i", "-2/3-4/5 i", "1 i", "-1 i",
                        "5/7", "12-7/2 i"}) {
    Scalar x = Scalar::parse(f, s);
    CHECK(Scalar::parse(f, x.str()) == x);
    CHECK(x.str() == s);
  }
}

TEST_CASE("cyclotomic basics") {
  FieldDesc f3 = FieldDesc::cyclotomic(3);
  Scalar z = Scalar::root_power(f3, 1);
  Scalar z2 = Scalar::root_power(f3, 2);
  CHECK(z * z == z2);
  CHECK((Scalar::one(f3) + z + z2).is_zero());
  CHECK(z * z2 == Scalar::one(f3));
  CHECK(z.conj() == z2);
  CHECK(Scalar::root_power(f3, 3).is_one());

  FieldDesc f6 = FieldDesc::cyclotomic(6);
  Scalar w = Scalar::root_power(f6, 1);
  Scalar acc = Scalar::one(f6);
  for (int k = 0; k < 6; ++k) acc *= w;
  CHECK(acc.is_one());
  CHECK(Scalar::root_power(f6, 3) == -Scalar::one(f6));
}

TEST_CASE("cyclotomic reduction and printing") {
  FieldDesc f4 = FieldDesc::cyclotomic(4);
  CHECK(Scalar::parse(f4, "[0,0,0,1]").str() == "[0,-1]");
  CHECK(Scalar::parse(f4, "[0,1]") == Scalar::root_power(f4, 1));
  CHECK(Scalar::parse(f4, "3/2").str() == "[3/2,0]");
  FieldDesc f5 = FieldDesc::cyclotomic(5);
  Scalar z = Scalar::root_power(f5, 1);
  Scalar sum = Scalar::one(f5) + z;
  for (int k = 2; k < 5; ++k) sum += Scalar::root_power(f5, k);
  CHECK(sum.is_zero());
}

TEST_CASE("cyclotomic inverses on random elements") {
  for (int n : {5, 8, 12}) {
    FieldDesc f = FieldDesc::cyclotomic(n);
    SmallIntRng rng(kDefaultSeed + n);
    for (int trial = 0; trial < 20; ++trial) {
      Scalar x = random_scalar(rng, f, 6);
      if (x.is_zero()) continue;
      CHECK((x * x.inverse()).is_one());
      CHECK(Scalar::parse(f, x.str()) == x);
    }
  }
}

TEST_CASE("conjugation is a field automorphism") {
  for (FieldDesc f : {FieldDesc::gaussian(), FieldDesc::cyclotomic(5),
                      FieldDesc::cyclotomic(8)}) {
    SmallIntRng rng(kDefaultSeed);
    for (int trial = 0; trial < 10; ++trial) {
      Scalar x = random_scalar(rng, f, 5);
      Scalar y = random_scalar(rng, f, 5);
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK((x + y).conj() == x.conj() + y.conj());
      CHECK(x.conj().conj() == x);
    }
  }
}

TEST_CASE("field descriptors") {
  CHECK(FieldDesc::rational().str() == "rational");
  CHECK(FieldDesc::gaussian().str() == "gaussian");
  CHECK(FieldDesc::cyclotomic(7).str() == "cyclotomic:7");
  CHECK(FieldDesc::parse("rational") == FieldDesc::rational());
  CHECK(FieldDesc::parse("gaussian") == FieldDesc::gaussian());
  CHECK(FieldDesc::parse("cyclotomic:12") == FieldDesc::cyclotomic(12));
  CHECK_THROWS_AS(FieldDesc::parse("real"), ParseError);
  CHECK_THROWS_AS(FieldDesc::parse("cyclotomic:0"), ParseError);
  CHECK(FieldDesc::rational().degree() == 1);
  CHECK(FieldDesc::gaussian().degree() == 2);
  CHECK(FieldDesc::cyclotomic(9).degree() == 6);
}

TEST_CASE("mixing fields throws") {
  Scalar a(FieldDesc::rational(), 1);
  Scalar b(FieldDesc::gaussian(), 1);
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  CHECK_THROWS_AS(a * b, FieldMismatchError);
}

TEST_CASE("division by zero throws") {
  FieldDesc f = FieldDesc::rational();
  CHECK_THROWS_AS(Scalar::one(f) / Scalar::zero(f), Error);
  CHECK_THROWS_AS(Scalar::zero(FieldDesc::cyclotomic(5)).inverse(), Error);
}

TEST_CASE("fused accumulate matches separate operations") {
  for (FieldDesc f : {FieldDesc::rational(), FieldDesc::cyclotomic(7)}) {
    SmallIntRng rng(kDefaultSeed + 9);
    for (int trial = 0; trial < 10; ++trial) {
      Scalar acc = random_scalar(rng, f, 5);
      Scalar x = random_scalar(rng, f, 5);
      Scalar y = random_scalar(rng, f, 5);
      Scalar expect_add = acc + x * y;
      Scalar expect_sub = acc - x * y;
      Scalar got = acc;
      got.addmul(x, y);
      CHECK(got == expect_add);
      got = acc;
      got.submul(x, y);
      CHECK(got == expect_sub);
    }
  }
}
