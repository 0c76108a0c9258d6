#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "algint/errors.hpp"

namespace algint {

enum class FieldKind { rational, gaussian, cyclotomic };

// The scalar field an algebra lives over. Every scalar, matrix and element
// coefficient carries one of these; mixing fields throws instead of
// promoting.
struct FieldDesc {
  FieldKind kind = FieldKind::rational;
  int order = 0;  // cyclotomic order n; 0 for the other kinds

  int degree() const;       // rationals per scalar: 1, 2, or phi(order)
  std::string str() const;  // "rational" | "gaussian" | "cyclotomic:<n>"

  static FieldDesc rational() { return {FieldKind::rational, 0}; }
  static FieldDesc gaussian() { return {FieldKind::gaussian, 0}; }
  static FieldDesc cyclotomic(int n);
  static FieldDesc parse(const std::string& text);

  bool operator==(const FieldDesc&) const = default;
};

// Exact field element. Rationals sit on GMP's mpq_class; Gaussian rationals
// are a pair (re, im); cyclotomic elements are coefficient vectors in the
// power basis 1, z, ..., z^(phi(n)-1), reduced modulo the n-th cyclotomic
// polynomial. No floating point anywhere, so equality is equality.
class Scalar {
 public:
  Scalar() : Scalar(FieldDesc::rational()) {}
  explicit Scalar(const FieldDesc& f);
  Scalar(const FieldDesc& f, long value);

  static Scalar zero(const FieldDesc& f) { return Scalar(f); }
  static Scalar one(const FieldDesc& f) { return Scalar(f, 1); }
  static Scalar from_rational(const FieldDesc& f, const mpq_class& q);
  // i^k in the Gaussian field, zeta_n^k in a cyclotomic field.
  static Scalar root_power(const FieldDesc& f, long k);
  // Inverse of str(): "p/q", "p/q+r/s i", "[c0,c1,...]".
  static Scalar parse(const FieldDesc& f, const std::string& text);

  const FieldDesc& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  // First power-basis coefficient; the whole value for rational fields.
  const mpq_class& rational_part() const { return c_[0]; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  // Fused update without temporaries on the hot rational path.
  void addmul(const Scalar& a, const Scalar& b);  // *this += a*b
  void submul(const Scalar& a, const Scalar& b);  // *this -= a*b

  Scalar inverse() const;  // throws Error on zero
  Scalar conj() const;     // complex conjugation; identity on rationals

  // Canonical string, round-trips through parse(). Rationals print as GMP
  // canonical "p" or "p/q"; Gaussian as "a", "b i" or "a+b i" / "a-b i";
  // cyclotomic as "[c0,c1,...]" with exactly phi(n) entries.
  std::string str() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  void check_same_field(const Scalar& o) const;
  void reduce();  // canonical form for cyclotomic coefficients

  FieldDesc field_;
  std::vector<mpq_class> c_;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);

int euler_phi(int n);
// n-th cyclotomic polynomial, monic, ascending coefficients, degree phi(n).
// Computed once per n by dividing x^n - 1 by the lower-order cyclotomic
// polynomials; memoized behind a mutex.
const std::vector<mpq_class>& cyclotomic_polynomial(int n);

// Strict canonical rational parser: "-?digits(/digits)?", denominator
// normalized positive, gcd reduced.
mpq_class parse_rational(const std::string& text);
std::string rational_str(const mpq_class& q);

}  // namespace algint
