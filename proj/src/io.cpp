#include "algint/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algint/errors.hpp"

namespace algint {

using ordered_json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

std::string algebra_to_json(const Algebra& a) {
  ordered_json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["field"] = a.field().str();
  j["labels"] = a.labels();
  ordered_json triples = ordered_json::array();
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k) {
        const Scalar& v = a.f(i, jj, k);
        if (v.is_zero()) continue;
        triples.push_back(ordered_json::array({i, jj, k, v.str()}));
      }
  j["f"] = std::move(triples);
  return j.dump(2) + "\n";
}

namespace {

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

int get_dim(const ordered_json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("missing or non-integer \"dim\"");
  long long dim = j["dim"].get<long long>();
  if (dim < 0 || dim > 4096) throw ParseError("\"dim\" out of range");
  return static_cast<int>(dim);
}

}  // namespace

Algebra algebra_from_json(const std::string& text) {
  ordered_json j = parse_json(text);
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  int dim = get_dim(j);
  if (!j.contains("field") || !j["field"].is_string())
    throw ParseError("missing or non-string \"field\"");
  FieldDesc field = FieldDesc::parse(j["field"].get<std::string>());

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw ParseError("\"labels\" must be an array");
    for (const auto& item : j["labels"]) {
      if (!item.is_string()) throw ParseError("labels must be strings");
      labels.push_back(item.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != dim)
      throw ParseError("expected " + std::to_string(dim) + " labels, got " +
                       std::to_string(labels.size()));
  } else {
    for (int i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
  }

  std::vector<Scalar> tensor(
      static_cast<std::size_t>(dim) * dim * dim, Scalar(field));
  if (!j.contains("f") || !j["f"].is_array())
    throw ParseError("missing or non-array \"f\"");
  for (const auto& item : j["f"]) {
    if (!item.is_array() || item.size() != 4 ||
        !item[0].is_number_integer() || !item[1].is_number_integer() ||
        !item[2].is_number_integer() || !item[3].is_string())
      throw ParseError("each \"f\" entry must be [i, j, k, \"scalar\"]");
    long long i = item[0].get<long long>();
    long long jj = item[1].get<long long>();
    long long k = item[2].get<long long>();
    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
      throw ParseError("structure constant index out of range");
    std::size_t pos =
        (static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(jj)) *
            dim +
        static_cast<std::size_t>(k);
    if (!tensor[pos].is_zero())
      throw ParseError("duplicate structure constant at (" +
                       std::to_string(i) + ", " + std::to_string(jj) + ", " +
                       std::to_string(k) + ")");
    tensor[pos] = Scalar::parse(field, item[3].get<std::string>());
  }
  return new_algebra(dim, field, std::move(tensor), std::move(labels),
                     std::move(name));
}

Algebra load_algebra(const std::string& path) {
  return algebra_from_json(read_text_file(path));
}

void save_algebra(const Algebra& a, const std::string& path) {
  write_text_file(path, algebra_to_json(a));
}

std::string cmatrix_to_json(const Matrix& c) {
  ordered_json j;
  j["dim"] = c.rows();
  ordered_json entries = ordered_json::array();
  for (int r = 0; r < c.rows(); ++r)
    for (int k = 0; k < c.cols(); ++k) {
      const Scalar& v = c.at(r, k);
      if (v.is_zero()) continue;
      entries.push_back(ordered_json::array({r, k, v.str()}));
    }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

Matrix cmatrix_from_json(const std::string& text, const FieldDesc& field) {
  ordered_json j = parse_json(text);
  if (!j.is_object()) throw ParseError("C matrix file must be a JSON object");
  int dim = get_dim(j);
  Matrix c(dim, dim, field);
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ParseError("missing or non-array \"entries\"");
  for (const auto& item : j["entries"]) {
    if (!item.is_array() || item.size() != 3 ||
        !item[0].is_number_integer() || !item[1].is_number_integer() ||
        !item[2].is_string())
      throw ParseError("each entry must be [j, k, \"scalar\"]");
    long long r = item[0].get<long long>();
    long long k = item[1].get<long long>();
    if (r < 0 || r >= dim || k < 0 || k >= dim)
      throw ParseError("C matrix index out of range");
    if (!c.at(static_cast<int>(r), static_cast<int>(k)).is_zero())
      throw ParseError("duplicate C matrix entry at (" + std::to_string(r) +
                       ", " + std::to_string(k) + ")");
    c.at(static_cast<int>(r), static_cast<int>(k)) =
        Scalar::parse(field, item[2].get<std::string>());
  }
  return c;
}

Matrix load_cmatrix(const std::string& path, const FieldDesc& field) {
  return cmatrix_from_json(read_text_file(path), field);
}

void save_cmatrix(const Matrix& c, const std::string& path) {
  write_text_file(path, cmatrix_to_json(c));
}

}  // namespace algint
