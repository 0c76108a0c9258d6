#pragma once

#include <string>

#include "algint/algebra.hpp"
#include "algint/matrix.hpp"

namespace algint {

// Canonical JSON form: keys in the order name, dim, field, labels, f; the
// "f" array holds [i, j, k, "<scalar>"] quadruples sorted by (i, j, k) with
// zero entries omitted; two-space indent and a trailing newline. Loading a
// file and saving it again reproduces the canonical bytes exactly.
std::string algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const std::string& text);

Algebra load_algebra(const std::string& path);
void save_algebra(const Algebra& a, const std::string& path);

// C matrix files: { "dim": int, "entries": [[j, k, "<scalar>"]...] }, same
// sorting and omission rules. Scalars are read in the field of the algebra
// the matrix accompanies.
std::string cmatrix_to_json(const Matrix& c);
Matrix cmatrix_from_json(const std::string& text, const FieldDesc& field);

Matrix load_cmatrix(const std::string& path, const FieldDesc& field);
void save_cmatrix(const Matrix& c, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace algint
