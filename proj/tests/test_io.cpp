#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "algint/algebra.hpp"
#include "algint/catalog.hpp"
#include "algint/io.hpp"
#include "algint/paragrassmann.hpp"

using namespace algint;

namespace {

std::string data_path(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

void check_same_algebra(const Algebra& a, const Algebra& b) {
  CHECK(a.dim() == b.dim());
  CHECK(a.field() == b.field());
  CHECK(a.labels() == b.labels());
  CHECK(a.tensor() == b.tensor());
  CHECK(a.name() == b.name());
}

}  // namespace

TEST_CASE("saving is canonical: load, save, reload, save agree byte for "
          "byte") {
  Algebra a = load_algebra(data_path("grassmann1.json"));
  check_same_algebra(a, make_catalog_algebra("grassmann:1"));

  std::string s1 = algebra_to_json(a);
  Algebra b = algebra_from_json(s1);
  std::string s2 = algebra_to_json(b);
  CHECK(s1 == s2);
  CHECK(s1.back() == '\n');

  // the fixture lists its triples out of order on purpose
  std::string raw = read_text_file(data_path("grassmann1.json"));
  CHECK(raw != s1);
  CHECK(algebra_to_json(algebra_from_json(raw)) == s1);
}

TEST_CASE("round-trips across fields") {
  for (const char* spec : {"quaternions", "torus:3", "matrix:2",
                           "cyclic:5"}) {
    Algebra a = make_catalog_algebra(spec);
    check_same_algebra(algebra_from_json(algebra_to_json(a)), a);
  }
}

TEST_CASE("save and load through a file") {
  Algebra a = make_catalog_algebra("torus:2");
  std::string path = "io_roundtrip_tmp.json";
  save_algebra(a, path);
  check_same_algebra(load_algebra(path), a);
  std::remove(path.c_str());
}

TEST_CASE("missing labels fall back to numbered placeholders") {
  Algebra a = algebra_from_json(
      R"({"dim": 2, "field": "rational", "f": [[0, 0, 0, "1"]]})");
  CHECK(a.labels()[0] == "x0");
  CHECK(a.labels()[1] == "x1");
  CHECK(a.name().empty());
}

TEST_CASE("parse failures carry a reason") {
  auto rejects = [](const std::string& text) {
    CHECK_THROWS_AS(algebra_from_json(text), ParseError);
  };
  rejects(read_text_file(data_path("malformed.json")));
  rejects("[1, 2, 3]");
  rejects(R"({"field": "rational", "f": []})");
  rejects(R"({"dim": 2, "f": []})");
  rejects(R"({"dim": 2, "field": "rational"})");
  rejects(R"({"dim": -1, "field": "rational", "f": []})");
  rejects(R"({"dim": 2, "field": "septernion", "f": []})");
  rejects(R"({"dim": 2, "field": "rational", "f": [[0, 0, "1"]]})");
  rejects(R"({"dim": 2, "field": "rational", "f": [[0, 0, 2, "1"]]})");
  rejects(R"({"dim": 2, "field": "rational", "f": [[0, 0, -1, "1"]]})");
  rejects(
      R"({"dim": 2, "field": "rational", "f": [[0, 0, 0, "1"], [0, 0, 0, "2"]]})");
  rejects(R"({"dim": 2, "field": "rational", "f": [[0, 0, 0, "x"]]})");
  rejects(R"({"dim": 2, "field": "rational", "labels": ["a"], "f": []})");
  rejects(R"({"dim": "two", "field": "rational", "f": []})");
}

TEST_CASE("c matrix files") {
  FieldDesc f = FieldDesc::rational();
  Matrix c = paragrassmann_c(3);
  std::string s1 = cmatrix_to_json(c);
  Matrix back = cmatrix_from_json(s1, f);
  CHECK(back == c);
  CHECK(cmatrix_to_json(back) == s1);

  std::string path = "io_cmatrix_tmp.json";
  save_cmatrix(c, path);
  CHECK(load_cmatrix(path, f) == c);
  std::remove(path.c_str());

  Matrix g = cmatrix_from_json(
      R"({"dim": 1, "entries": [[0, 0, "1/2+1/3 i"]]})", FieldDesc::gaussian());
  CHECK(g.at(0, 0).str() == "1/2+1/3 i");
}

TEST_CASE("c matrix parse failures") {
  FieldDesc f = FieldDesc::rational();
  auto rejects = [&](const std::string& text) {
    CHECK_THROWS_AS(cmatrix_from_json(text, f), ParseError);
  };
  rejects("{");
  rejects(R"({"entries": []})");
  rejects(R"({"dim": 2})");
  rejects(R"({"dim": 2, "entries": [[0, 2, "1"]]})");
  rejects(R"({"dim": 2, "entries": [[0, 0, "1"], [0, 0, "1"]]})");
  rejects(R"({"dim": 2, "entries": [[0, "1"]]})");
  rejects(R"({"dim": 5000, "entries": []})");
}
