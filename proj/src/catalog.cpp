#include "algint/catalog.hpp"

#include <stdexcept>

#include "algint/errors.hpp"
#include "algint/paragrassmann.hpp"

namespace algint {

Algebra matrix_algebra(int n) {
  if (n < 1) throw ParseError("matrix algebra needs n >= 1");
  const int dim = n * n;
  FieldDesc f = FieldDesc::rational();
  std::vector<Scalar> tensor(static_cast<std::size_t>(dim) * dim * dim,
                             Scalar(f));
  auto at = [&](int i, int j, int k) -> Scalar& {
    return tensor[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  };
  for (int r = 0; r < n; ++r)
    for (int m = 0; m < n; ++m)
      for (int q = 0; q < n; ++q)
        at(pair_index(n, r, m), pair_index(n, m, q), pair_index(n, r, q)) =
            Scalar::one(f);
  std::vector<std::string> labels(dim);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      labels[pair_index(n, r, c)] =
          "e(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
  return new_algebra(dim, f, std::move(tensor), std::move(labels),
                     "matrix:" + std::to_string(n));
}

Algebra quaternions() {
  FieldDesc f = FieldDesc::rational();
  std::vector<Scalar> tensor(64, Scalar(f));
  auto set = [&](int i, int j, int k, long v) {
    tensor[(static_cast<std::size_t>(i) * 4 + j) * 4 + k] = Scalar(f, v);
  };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    if (i > 0) set(i, 0, i, 1);
  }
  for (int i = 1; i < 4; ++i) set(i, i, 0, -1);
  // i j = k, j k = i, k i = j, and the reversed products negative
  set(1, 2, 3, 1);
  set(2, 3, 1, 1);
  set(3, 1, 2, 1);
  set(2, 1, 3, -1);
  set(3, 2, 1, -1);
  set(1, 3, 2, -1);
  return new_algebra(4, f, std::move(tensor), {"1", "i", "j", "k"},
                     "quaternions");
}

Algebra cyclic_group_algebra(int n) {
  if (n < 1) throw ParseError("cyclic group algebra needs n >= 1");
  FieldDesc f = FieldDesc::rational();
  std::vector<Scalar> tensor(static_cast<std::size_t>(n) * n * n, Scalar(f));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      tensor[(static_cast<std::size_t>(a) * n + b) * n + (a + b) % n] =
          Scalar::one(f);
  std::vector<std::string> labels(n);
  labels[0] = "g^0";
  for (int a = 1; a < n; ++a) labels[a] = "g^" + std::to_string(a);
  return new_algebra(n, f, std::move(tensor), std::move(labels),
                     "cyclic:" + std::to_string(n));
}

Algebra noncommutative_torus(int n) {
  if (n < 2) throw ParseError("torus needs n >= 2");
  FieldDesc f = FieldDesc::cyclotomic(n);
  const int dim = n * n;
  std::vector<Scalar> tensor(static_cast<std::size_t>(dim) * dim * dim,
                             Scalar(f));
  // (u^a v^b)(u^c v^d) = zeta^(-b c) u^(a+c) v^(b+d)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int i = pair_index(n, a, b);
          int j = pair_index(n, c, d);
          int k = pair_index(n, (a + c) % n, (b + d) % n);
          int e = ((n - b % n) * c) % n;
          tensor[(static_cast<std::size_t>(i) * dim + j) * dim + k] =
              Scalar::root_power(f, e);
        }
  std::vector<std::string> labels(dim);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      labels[pair_index(n, a, b)] =
          "u^" + std::to_string(a) + " v^" + std::to_string(b);
  return new_algebra(dim, f, std::move(tensor), std::move(labels),
                     "torus:" + std::to_string(n));
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"matrix:n", "matrix:2",
       "full n x n matrix algebra on matrix units, over the rationals", true,
       true, true, true},
      {"quaternions", "quaternions", "the real quaternion table 1, i, j, k",
       true, true, true, true},
      {"cyclic:n", "cyclic:3",
       "group algebra of the cyclic group of order n", true, true, true,
       false},
      {"torus:n", "torus:2",
       "u, v with u^n = v^n = 1 and u v = zeta v u, over cyclotomic:n", true,
       true, true, true},
      {"paragrassmann:p", "paragrassmann:3",
       "single variable t with t^(p+1) = 0", true, true, true, false},
      {"grassmann:p", "grassmann:1",
       "alias for paragrassmann:p (p = 1 is the classical case)", true, true,
       true, false},
  };
  return entries;
}

Algebra make_catalog_algebra(const std::string& spec) {
  std::string head = spec;
  std::string arg;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    head = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }
  auto need_int = [&](int min_value) {
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("catalog spec \"" + spec +
                       "\" needs a numeric parameter");
    long v = 0;
    try {
      v = std::stol(arg);
    } catch (const std::exception&) {
      throw ParseError("catalog spec \"" + spec + "\": parameter out of range");
    }
    if (v < min_value || v > 1000)
      throw ParseError("catalog spec \"" + spec + "\": parameter out of range");
    return static_cast<int>(v);
  };
  if (head == "matrix") return matrix_algebra(need_int(1));
  if (head == "quaternions") {
    if (!arg.empty()) throw ParseError("quaternions takes no parameter");
    return quaternions();
  }
  if (head == "cyclic") return cyclic_group_algebra(need_int(1));
  if (head == "torus") return noncommutative_torus(need_int(2));
  if (head == "paragrassmann" || head == "grassmann")
    return paragrassmann_algebra(need_int(1)).algebra;
  throw ParseError("unknown catalog spec \"" + spec + "\"");
}

}  // namespace algint
