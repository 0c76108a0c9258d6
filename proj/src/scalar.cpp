#include "algint/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace algint {

namespace {

// ---- dense polynomials over Q, ascending coefficients ----

using Poly = std::vector<mpq_class>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  poly_trim(out);
  return out;
}

// a mod b, b nonzero. Plain long division over Q.
Poly poly_rem(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    mpq_class q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    poly_trim(a);
  }
  return a;
}

Poly poly_quot(Poly a, const Poly& b) {
  poly_trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, mpq_class(0));
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
  }
  poly_trim(q);
  return q;
}

// u with u*a == 1 (mod m); requires gcd(a, m) constant, which holds for any
// nonzero a when m is irreducible.
Poly poly_inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = poly_rem(a, m);
  Poly t0, t1 = {mpq_class(1)};
  poly_trim(r1);
  if (r1.empty()) throw Error("scalar: division by zero");
  while (!r1.empty() && r1.size() > 1) {
    Poly q = poly_quot(r0, r1);
    Poly r2 = poly_rem(r0, r1);
    Poly qt = poly_mul(q, t1);
    Poly t2 = t0;
    t2.resize(std::max(t2.size(), qt.size()), mpq_class(0));
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    poly_trim(t2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.empty()) throw Error("scalar: inverse of a zero divisor");
  // r1 is the constant gcd; scale t1 by its inverse
  mpq_class g = r1[0];
  Poly u = poly_rem(std::move(t1), m);
  for (auto& c : u) c /= g;
  return u;
}

// ---- cyclotomic field context, one per order n ----

struct CycloCtx {
  int n = 0;
  int deg = 0;
  Poly phi;
  // x^j reduced mod phi for j = 0..n-1, padded to deg entries
  std::vector<std::vector<mpq_class>> xpow;
};

std::vector<mpq_class> pad_to(Poly p, int deg) {
  p.resize(static_cast<size_t>(deg), mpq_class(0));
  return p;
}

const CycloCtx& cyclo_ctx(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<CycloCtx>();
  ctx->n = n;
  ctx->phi = cyclotomic_polynomial(n);
  ctx->deg = static_cast<int>(ctx->phi.size()) - 1;
  Poly x = {mpq_class(0), mpq_class(1)};
  Poly cur = {mpq_class(1)};
  for (int j = 0; j < n; ++j) {
    ctx->xpow.push_back(pad_to(cur, ctx->deg));
    cur = poly_rem(poly_mul(cur, x), ctx->phi);
  }
  auto& ref = *ctx;
  cache.emplace(n, std::move(ctx));
  return ref;
}

bool all_zero_tail(const std::vector<mpq_class>& c) {
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

std::string trim_copy(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw Error("euler_phi: order must be positive");
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpq_class>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(mu);

  // iterative worklist so the lock is not re-entered
  std::vector<int> todo = {n};
  while (!todo.empty()) {
    int k = todo.back();
    if (cache.count(k)) {
      todo.pop_back();
      continue;
    }
    bool ready = true;
    for (int d = 1; d < k; ++d)
      if (k % d == 0 && !cache.count(d)) {
        todo.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    todo.pop_back();
    Poly num(static_cast<size_t>(k) + 1, mpq_class(0));
    num[0] = -1;
    num[static_cast<size_t>(k)] = 1;  // x^k - 1
    for (int d = 1; d < k; ++d)
      if (k % d == 0) num = poly_quot(std::move(num), cache[d]);
    cache.emplace(k, std::move(num));
  }
  return cache[n];
}

int FieldDesc::degree() const {
  switch (kind) {
    case FieldKind::rational:
      return 1;
    case FieldKind::gaussian:
      return 2;
    case FieldKind::cyclotomic:
      return euler_phi(order);
  }
  return 1;
}

std::string FieldDesc::str() const {
  switch (kind) {
    case FieldKind::rational:
      return "rational";
    case FieldKind::gaussian:
      return "gaussian";
    case FieldKind::cyclotomic:
      return "cyclotomic:" + std::to_string(order);
  }
  return "rational";
}

FieldDesc FieldDesc::cyclotomic(int n) {
  if (n < 1) throw ParseError("cyclotomic order must be >= 1");
  return {FieldKind::cyclotomic, n};
}

FieldDesc FieldDesc::parse(const std::string& text) {
  std::string t = trim_copy(text);
  if (t == "rational") return rational();
  if (t == "gaussian") return gaussian();
  if (t.rfind("cyclotomic:", 0) == 0) {
    std::string num = t.substr(11);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad cyclotomic order in field \"" + text + "\"");
    return cyclotomic(std::stoi(num));
  }
  throw ParseError("unknown field \"" + text + "\"");
}

mpq_class parse_rational(const std::string& text) {
  std::string t = trim_copy(text);
  if (t.empty()) throw ParseError("empty rational");
  std::string body = t[0] == '-' ? t.substr(1) : t;
  if (body.empty() || body.find_first_not_of("0123456789/") != std::string::npos)
    throw ParseError("bad rational \"" + text + "\"");
  size_t slash = body.find('/');
  if (slash != std::string::npos &&
      (slash == 0 || slash + 1 == body.size() ||
       body.find('/', slash + 1) != std::string::npos))
    throw ParseError("bad rational \"" + text + "\"");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
    throw ParseError("bad rational \"" + text + "\"");
  if (q.get_den() == 0) throw ParseError("zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

Scalar::Scalar(const FieldDesc& f) : field_(f) {
  c_.assign(static_cast<size_t>(f.degree()), mpq_class(0));
}

Scalar::Scalar(const FieldDesc& f, long value) : Scalar(f) { c_[0] = value; }

Scalar Scalar::from_rational(const FieldDesc& f, const mpq_class& q) {
  Scalar s(f);
  s.c_[0] = q;
  return s;
}

Scalar Scalar::root_power(const FieldDesc& f, long k) {
  switch (f.kind) {
    case FieldKind::rational:
      throw Error("root_power: the rational field has no distinguished root");
    case FieldKind::gaussian: {
      Scalar s(f);
      switch (((k % 4) + 4) % 4) {
        case 0: s.c_[0] = 1; break;
        case 1: s.c_[1] = 1; break;
        case 2: s.c_[0] = -1; break;
        case 3: s.c_[1] = -1; break;
      }
      return s;
    }
    case FieldKind::cyclotomic: {
      const CycloCtx& ctx = cyclo_ctx(f.order);
      long j = ((k % ctx.n) + ctx.n) % ctx.n;
      Scalar s(f);
      s.c_ = ctx.xpow[static_cast<size_t>(j)];
      return s;
    }
  }
  throw Error("root_power: unreachable");
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("scalar fields differ: " + field_.str() + " vs " +
                             o.field_.str());
}

void Scalar::reduce() {
  if (field_.kind != FieldKind::cyclotomic) return;
  const CycloCtx& ctx = cyclo_ctx(field_.order);
  if (c_.size() <= static_cast<size_t>(ctx.deg)) {
    c_.resize(static_cast<size_t>(ctx.deg), mpq_class(0));
    return;
  }
  Poly p(c_.begin(), c_.end());
  p = poly_rem(std::move(p), ctx.phi);
  c_ = pad_to(std::move(p), ctx.deg);
}

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const { return c_[0] == 1 && all_zero_tail(c_); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  switch (field_.kind) {
    case FieldKind::rational:
      c_[0] *= o.c_[0];
      return *this;
    case FieldKind::gaussian: {
      mpq_class re = c_[0] * o.c_[0] - c_[1] * o.c_[1];
      mpq_class im = c_[0] * o.c_[1] + c_[1] * o.c_[0];
      c_[0] = std::move(re);
      c_[1] = std::move(im);
      return *this;
    }
    case FieldKind::cyclotomic: {
      Poly a(c_.begin(), c_.end()), b(o.c_.begin(), o.c_.end());
      poly_trim(a);
      poly_trim(b);
      const CycloCtx& ctx = cyclo_ctx(field_.order);
      c_ = pad_to(poly_rem(poly_mul(a, b), ctx.phi), ctx.deg);
      return *this;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::addmul(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (field_.kind == FieldKind::rational) {
    check_same_field(a);
    check_same_field(b);
    static thread_local mpq_class tmp;
    tmp = a.c_[0] * b.c_[0];
    c_[0] += tmp;
    return;
  }
  *this += a * b;
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (field_.kind == FieldKind::rational) {
    check_same_field(a);
    check_same_field(b);
    static thread_local mpq_class tmp;
    tmp = a.c_[0] * b.c_[0];
    c_[0] -= tmp;
    return;
  }
  *this -= a * b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("scalar: inverse of zero");
  switch (field_.kind) {
    case FieldKind::rational: {
      Scalar r(field_);
      r.c_[0] = 1 / c_[0];
      return r;
    }
    case FieldKind::gaussian: {
      mpq_class norm = c_[0] * c_[0] + c_[1] * c_[1];
      Scalar r(field_);
      r.c_[0] = c_[0] / norm;
      r.c_[1] = -c_[1] / norm;
      return r;
    }
    case FieldKind::cyclotomic: {
      const CycloCtx& ctx = cyclo_ctx(field_.order);
      Poly a(c_.begin(), c_.end());
      poly_trim(a);
      Scalar r(field_);
      r.c_ = pad_to(poly_inverse_mod(a, ctx.phi), ctx.deg);
      return r;
    }
  }
  throw Error("inverse: unreachable");
}

Scalar Scalar::conj() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return *this;
    case FieldKind::gaussian: {
      Scalar r = *this;
      r.c_[1] = -r.c_[1];
      return r;
    }
    case FieldKind::cyclotomic: {
      // z -> z^(n-1), i.e. each basis power x^k maps to x^((n-1)k mod n)
      const CycloCtx& ctx = cyclo_ctx(field_.order);
      Scalar r(field_);
      for (int k = 0; k < ctx.deg; ++k) {
        if (c_[static_cast<size_t>(k)] == 0) continue;
        long j = (static_cast<long>(ctx.n - 1) * k) % ctx.n;
        const auto& rep = ctx.xpow[static_cast<size_t>(j)];
        for (int t = 0; t < ctx.deg; ++t)
          r.c_[static_cast<size_t>(t)] += c_[static_cast<size_t>(k)] * rep[static_cast<size_t>(t)];
      }
      return r;
    }
  }
  throw Error("conj: unreachable");
}

std::string Scalar::str() const {
  switch (field_.kind) {
    case FieldKind::rational:
      return rational_str(c_[0]);
    case FieldKind::gaussian: {
      if (c_[1] == 0) return rational_str(c_[0]);
      std::string im = rational_str(abs(c_[1])) + " i";
      if (c_[0] == 0) return (c_[1] < 0 ? "-" : "") + im;
      return rational_str(c_[0]) + (c_[1] < 0 ? "-" : "+") + im;
    }
    case FieldKind::cyclotomic: {
      std::ostringstream out;
      out << "[";
      for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out << ",";
        out << rational_str(c_[i]);
      }
      out << "]";
      return out.str();
    }
  }
  return "";
}

Scalar Scalar::parse(const FieldDesc& f, const std::string& text) {
  std::string t = trim_copy(text);
  if (t.empty()) throw ParseError("empty scalar");
  switch (f.kind) {
    case FieldKind::rational:
      return from_rational(f, parse_rational(t));
    case FieldKind::gaussian: {
      Scalar s(f);
      if (t.back() == 'i') {
        t = trim_copy(t.substr(0, t.size() - 1));
        if (t.empty()) throw ParseError("bad gaussian scalar \"" + text + "\"");
        // split at the last sign that follows a digit: "a+b", "a-b", or "b"
        size_t split = std::string::npos;
        for (size_t i = t.size(); i-- > 1;) {
          if ((t[i] == '+' || t[i] == '-') && std::isdigit(static_cast<unsigned char>(t[i - 1]))) {
            split = i;
            break;
          }
        }
        if (split == std::string::npos) {
          s.c_[1] = parse_rational(t);
        } else {
          s.c_[0] = parse_rational(t.substr(0, split));
          std::string im = t.substr(split);
          if (im[0] == '+') im = im.substr(1);
          s.c_[1] = parse_rational(im);
        }
      } else {
        s.c_[0] = parse_rational(t);
      }
      return s;
    }
    case FieldKind::cyclotomic: {
      if (t.front() != '[') return from_rational(f, parse_rational(t));
      if (t.back() != ']')
        throw ParseError("bad cyclotomic scalar \"" + text + "\"");
      std::string body = t.substr(1, t.size() - 2);
      Scalar s(f);
      s.c_.clear();
      size_t pos = 0;
      if (!trim_copy(body).empty()) {
        while (true) {
          size_t comma = body.find(',', pos);
          std::string piece = comma == std::string::npos
                                  ? body.substr(pos)
                                  : body.substr(pos, comma - pos);
          s.c_.push_back(parse_rational(piece));
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
      }
      if (s.c_.empty()) throw ParseError("empty cyclotomic scalar");
      s.reduce();
      return s;
    }
  }
  throw ParseError("parse: unreachable");
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return c_ == o.c_;
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

}  // namespace algint
