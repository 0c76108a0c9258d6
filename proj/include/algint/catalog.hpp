#pragma once

#include <string>
#include <vector>

#include "algint/algebra.hpp"

namespace algint {

// Flat index for bases labeled by an ordered pair: (r, c) -> r * n + c,
// 0-based. The one place where double indices become single ones; matrix
// units and torus monomials both use it.
inline int pair_index(int n, int r, int c) { return r * n + c; }

// Full matrix algebra on n x n matrix units e(r, c): e(n m) e(p q) =
// delta_mp e(n q), over the rationals.
Algebra matrix_algebra(int n);

// Basis 1, i, j, k with i^2 = j^2 = k^2 = -1 and i j = k cyclically, over
// the rationals.
Algebra quaternions();

// Group algebra of Z_n: basis g^0..g^(n-1), g^a g^b = g^(a+b mod n).
Algebra cyclic_group_algebra(int n);

// dim n^2 algebra over cyclotomic:n generated by u, v with u^n = v^n = 1 and
// u v = zeta v u; basis u^a v^b at pair_index(n, a, b).
Algebra noncommutative_torus(int n);

struct CatalogEntry {
  std::string spec;         // e.g. "matrix:n"
  std::string example;      // a concrete instantiation, e.g. "matrix:2"
  std::string description;
  // expected findings when the standard pipeline (associativity, identity,
  // canonical C, completeness, involution) runs on the example
  bool associative = false;
  bool unital = false;
  bool self_conjugated = false;
  bool involutive = false;
};

const std::vector<CatalogEntry>& catalog_entries();

// Parses "matrix:3", "quaternions", "cyclic:4", "torus:2",
// "paragrassmann:2", "grassmann:1" (alias for paragrassmann) and builds the
// algebra. Throws ParseError for anything else.
Algebra make_catalog_algebra(const std::string& spec);

}  // namespace algint
