#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algint/algebra.hpp"
#include "algint/catalog.hpp"
#include "algint/conjugation.hpp"
#include "algint/derivations.hpp"
#include "algint/errors.hpp"
#include "algint/integration.hpp"
#include "algint/io.hpp"
#include "algint/kernels.hpp"
#include "algint/paragrassmann.hpp"
#include "algint/report.hpp"
#include "algint/rng.hpp"

namespace {

using namespace algint;

struct Options {
  std::string catalog_spec;
  std::string algebra_file;
  std::string positional_file;
  std::string c_file;
  std::string coeffs;
  std::string element;
  std::string generator;
  std::string d_file;
  std::string out_file;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  int p = 0;
  int shift = 1;
};

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

// Splits on commas outside brackets, so cyclotomic coefficient lists like
// [1,2] survive as single tokens.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') {
      --depth;
      if (depth < 0) throw ParseError("unbalanced ']' in coefficient list");
    }
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '[' in coefficient list");
  parts.push_back(cur);
  return parts;
}

std::vector<Scalar> parse_coeff_list(const std::string& text,
                                     const FieldDesc& field, int expected) {
  if (text.empty()) throw ParseError("empty coefficient list");
  std::vector<Scalar> out;
  for (const auto& part : split_top_level(text))
    out.push_back(Scalar::parse(field, trim(part)));
  if (static_cast<int>(out.size()) != expected)
    throw ParseError("expected " + std::to_string(expected) +
                     " coefficients, got " + std::to_string(out.size()));
  return out;
}

std::string coeff_string(const std::vector<Scalar>& coeffs) {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ", ";
    s += coeffs[i].str();
  }
  return s + "]";
}

std::vector<std::string> scalar_strings(const std::vector<Scalar>& coeffs) {
  std::vector<std::string> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.str());
  return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

Algebra resolve_algebra(const Options& o) {
  int sources = (!o.catalog_spec.empty() ? 1 : 0) +
                (!o.algebra_file.empty() ? 1 : 0) +
                (!o.positional_file.empty() ? 1 : 0);
  if (sources == 0)
    throw ParseError("no algebra given: use --catalog or --algebra");
  if (sources > 1) throw ParseError("give exactly one algebra source");
  if (!o.catalog_spec.empty()) return make_catalog_algebra(o.catalog_spec);
  return load_algebra(!o.algebra_file.empty() ? o.algebra_file
                                              : o.positional_file);
}

std::string assoc_detail(const AssociativityReport& rep) {
  if (rep.ok()) return "";
  std::string s;
  auto add = [&](const char* what, std::size_t count, const std::string& at) {
    if (count == 0) return;
    if (!s.empty()) s += "; ";
    s += std::string(what) + ": " + std::to_string(count) + ", first at " + at;
  };
  auto pair_at = [](const std::array<int, 2>& v) {
    return "(" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ")";
  };
  if (!rep.right_rep.empty())
    add("right rep products", rep.right_rep.size(), pair_at(rep.right_rep[0]));
  if (!rep.left_rep.empty())
    add("left rep products", rep.left_rep.size(), pair_at(rep.left_rep[0]));
  if (!rep.commutant.empty())
    add("right/left commutators", rep.commutant.size(),
        pair_at(rep.commutant[0]));
  if (!rep.triples.empty())
    add("basis triples", rep.triples.size(),
        "(" + std::to_string(rep.triples[0][0]) + ", " +
            std::to_string(rep.triples[0][1]) + ", " +
            std::to_string(rep.triples[0][2]) + ")");
  return s;
}

// Solves for the intertwiner space, records its rank, and returns the C to
// use: the user's file if given, otherwise the canonical deterministic pick.
std::optional<CMatrix> resolve_c(const Algebra& a, const Options& o,
                                 Report& r) {
  std::vector<Matrix> space = solve_c_space(a);
  r.c_rank = static_cast<int>(space.size());
  if (!o.c_file.empty())
    return make_cmatrix(a, load_cmatrix(o.c_file, a.field()),
                        static_cast<int>(space.size()));
  if (space.size() > 1)
    r.note("intertwiner space has rank " + std::to_string(space.size()) +
           "; proceeding with the canonical deterministic choice "
           "(override with --c)");
  PickPolicy policy;
  policy.seed = o.seed;
  return pick_invertible_c(a, space, policy);
}

std::optional<IntegralFunctional> build_functional(const Algebra& a,
                                                   const CMatrix& cm,
                                                   Report& r) {
  try {
    IntegralFunctional fn = integral_functional(a, cm);
    r.check("completeness", true, "both orders verified");
    return fn;
  } catch (const CompletenessError& e) {
    r.check("completeness", false, e.what());
    return std::nullopt;
  }
}

int finish(const Options& o, const Report& r) {
  std::cout << (o.json ? r.json() : r.text());
  return r.all_pass() ? 0 : 1;
}

int cmd_check(const Options& o) {
  Algebra a = resolve_algebra(o);
  Report r;
  auto assoc = is_associative(a);
  r.check("associative", assoc.ok(), assoc_detail(assoc));
  auto e = find_identity(a);
  r.check("unital", e.has_value(),
          e ? "identity coefficients " + coeff_string(e->coeffs)
            : "no identity element");

  std::optional<CMatrix> cm;
  std::string cdetail;
  try {
    cm = resolve_c(a, o, r);
    if (!cm) cdetail = "no invertible symmetric intertwiner found";
  } catch (const ParseError&) {
    throw;
  } catch (const DimensionError&) {
    throw;
  } catch (const FieldMismatchError&) {
    throw;
  } catch (const Error& err) {
    cdetail = err.what();
  }
  if (cm) {
    auto sc = verify_self_conjugated(a, cm->matrix);
    std::string detail;
    if (!sc.ok()) {
      if (!sc.symmetric) detail += "C not symmetric; ";
      if (!sc.invertible) detail += "C not invertible; ";
      if (!sc.intertwine_violations.empty())
        detail += "L_i C != C R_i at " +
                  std::to_string(sc.intertwine_violations.size()) +
                  " basis indices, first i = " +
                  std::to_string(sc.intertwine_violations[0]) + "; ";
      if (!sc.dual_violations.empty())
        detail += "opposite-algebra audit fails at " +
                  std::to_string(sc.dual_violations.size()) +
                  " basis indices; ";
      if (detail.size() >= 2) detail.erase(detail.size() - 2);
    }
    r.check("self-conjugated", sc.ok(), detail);
  } else {
    r.check("self-conjugated", false, cdetail);
  }

  if (e && cm) {
    try {
      IntegralFunctional fn = integral_functional(a, *cm);
      r.integral = scalar_strings(fn.values);
      auto comp = verify_completeness(fn);
      r.check("completeness (ket-bra)", comp.ket_bra.empty(), "");
      r.check("completeness (bra-ket)", comp.bra_ket.empty(), "");
    } catch (const CompletenessError& err) {
      r.check("completeness", false, err.what());
    }
  }
  return finish(o, r);
}

int cmd_cmatrix(const Options& o) {
  Algebra a = resolve_algebra(o);
  Report r;
  std::optional<CMatrix> cm = resolve_c(a, o, r);
  if (!cm) {
    r.check("self-conjugated", false,
            "no invertible symmetric intertwiner found");
    return finish(o, r);
  }
  auto sc = verify_self_conjugated(a, cm->matrix);
  r.check("self-conjugated", sc.ok(), "");
  auto inv = involution_check(a, cm->matrix);
  r.check("star-rep theorem", inv.star_rep_theorem_ok(),
          "star representation, when it holds, forces C unitary and "
          "symmetric");
  r.extra("involution", bool_str(inv.is_involution()));
  r.extra("cc_star", bool_str(inv.cc_star_ok));
  r.extra("double_star", bool_str(inv.double_star_ok));
  r.extra("antihomomorphism_violations",
          std::to_string(inv.antihomomorphism_violations.size()));
  r.extra("star_rep", bool_str(inv.star_rep_ok));
  r.extra("c_unitary", bool_str(inv.c_unitary));
  r.extra("c_symmetric", bool_str(inv.c_symmetric));
  r.extra("c", cm->matrix.str());
  if (!o.out_file.empty()) save_cmatrix(cm->matrix, o.out_file);
  return finish(o, r);
}

int cmd_integrate(const Options& o) {
  Algebra a = resolve_algebra(o);
  Report r;
  std::optional<CMatrix> cm = resolve_c(a, o, r);
  if (!cm)
    throw Error("no invertible symmetric intertwiner found; cannot integrate");
  auto fn = build_functional(a, *cm, r);
  if (!fn) return finish(o, r);
  r.integral = scalar_strings(fn->values);
  auto coeffs = parse_coeff_list(o.coeffs, a.field(), a.dim());
  Scalar result = integrate(*fn, element(a, std::move(coeffs)));
  r.extra("result", result.str());
  if (o.json) return finish(o, r);
  for (const auto& n : r.notes) std::cerr << "note: " << n << "\n";
  std::cout << result.str() << "\n";
  return 0;
}

int cmd_derivations(const Options& o) {
  Algebra a = resolve_algebra(o);
  Report r;
  auto ders = derivation_space(a);
  const int n = a.dim();
  r.extra("space_dim", std::to_string(ders.size()));
  auto flatten = [&](const Matrix& m) {
    kernels::Row row;
    row.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) row.push_back(m.at(i, j));
    return row;
  };
  bool assoc = is_associative(a).ok();
  std::vector<kernels::Row> inner_rows;
  int inner_dim = 0;
  if (assoc) {
    for (int i = 0; i < n; ++i)
      inner_rows.push_back(flatten(inner_derivation(a, basis_element(a, i)).d));
    auto rr = kernels::rref(inner_rows, n * n, a.field());
    inner_rows = rr.rows;
    inner_dim = rr.rank();
    r.extra("inner_dim", std::to_string(inner_dim));
    r.extra("outer_dim",
            std::to_string(static_cast<int>(ders.size()) - inner_dim));
  } else {
    r.note("inner/outer classification needs an associative algebra; "
           "skipped");
  }
  std::vector<std::string> kinds;
  for (std::size_t k = 0; k < ders.size(); ++k) {
    std::string key = "d" + std::to_string(k);
    if (assoc) {
      auto rows = inner_rows;
      rows.push_back(flatten(ders[k].d));
      bool inner = kernels::rref(rows, n * n, a.field()).rank() == inner_dim;
      kinds.push_back(key + " " + (inner ? "inner" : "outer"));
    }
    r.extra(key, ders[k].d.str());
  }
  if (assoc) r.extra_list("classification", kinds);
  return finish(o, r);
}

Matrix resolve_derivation_matrix(const Algebra& a, const std::string& coeffs,
                                 const std::string& d_file,
                                 const char* coeff_flag) {
  int given = (!coeffs.empty() ? 1 : 0) + (!d_file.empty() ? 1 : 0);
  if (given != 1)
    throw ParseError(std::string("give exactly one of ") + coeff_flag +
                     " or --d");
  if (!d_file.empty()) {
    Matrix d = load_cmatrix(d_file, a.field());
    if (d.rows() != a.dim())
      throw DimensionError("derivation matrix is " + std::to_string(d.rows()) +
                           "x" + std::to_string(d.cols()) + ", algebra has " +
                           "dimension " + std::to_string(a.dim()));
    return d;
  }
  auto c = parse_coeff_list(coeffs, a.field(), a.dim());
  return inner_derivation(a, element(a, std::move(c))).d;
}

int cmd_ibp(const Options& o) {
  Algebra a = resolve_algebra(o);
  Report r;
  Matrix d = resolve_derivation_matrix(a, o.element, o.d_file, "--element");
  auto rep = is_derivation(a, d);
  r.check("derivation", rep.ok(),
          rep.ok() ? ""
                   : std::to_string(rep.leibniz_violations.size()) +
                         " Leibniz violations");
  std::optional<CMatrix> cm = resolve_c(a, o, r);
  if (!cm) throw Error("no invertible symmetric intertwiner found");
  auto fn = build_functional(a, *cm, r);
  if (fn && rep.ok())
    r.check("integration by parts", ibp_holds(*fn, d),
            "the integral of every D x vanishes");
  return finish(o, r);
}

int cmd_theorem(const Options& o) {
  Algebra a = resolve_algebra(o);
  Report r;
  Matrix d = resolve_derivation_matrix(a, o.generator, o.d_file,
                                       "--generator");
  auto rep = is_derivation(a, d);
  r.check("derivation", rep.ok(),
          rep.ok() ? ""
                   : std::to_string(rep.leibniz_violations.size()) +
                         " Leibniz violations");
  if (!rep.ok()) return finish(o, r);
  std::optional<CMatrix> cm = resolve_c(a, o, r);
  if (!cm) throw Error("no invertible symmetric intertwiner found");
  auto fn = build_functional(a, *cm, r);
  if (!fn) return finish(o, r);
  auto th = theorem_roundtrip(*fn, d);
  r.check("legs agree", th.legs_agree,
          "integration by parts, the C-transpose condition, and measure "
          "invariance of the exponential answer alike");
  r.extra("ibp", bool_str(th.ibp));
  r.extra("infinitesimal", bool_str(th.infinitesimal));
  if (th.exponentiated)
    r.extra("exponentiated", bool_str(*th.exponentiated));
  else
    r.extra("exponentiated", "skipped (not nilpotent)");
  if (th.degree_bound >= 0) {
    r.extra("degree_bound", std::to_string(th.degree_bound));
    std::vector<std::string> alphas;
    for (const auto& al : th.alphas) alphas.push_back(rational_str(al));
    r.extra_list("alphas", alphas);
  }
  return finish(o, r);
}

int cmd_paragrassmann(const Options& o) {
  if (o.p < 1) throw ParseError("--p must be at least 1");
  ParagrassmannAlgebra pg = paragrassmann_algebra(o.p);
  Report r;
  auto coeffs =
      parse_coeff_list(o.coeffs, FieldDesc::rational(), o.p + 1);
  Scalar traced = trace_integral(o.p, coeffs, o.shift);
  CMatrix cm = make_cmatrix(pg.algebra, paragrassmann_c(o.p));
  IntegralFunctional fn = integral_functional(pg.algebra, cm);
  AlgebraElement f = element(pg.algebra, coeffs);
  AlgebraElement arg =
      o.shift > 1 ? multiply(basis_element(pg.algebra, o.shift - 1), f) : f;
  Scalar direct = integrate(fn, arg);
  r.extra("trace_path", traced.str());
  r.extra("direct_path", direct.str());
  r.check("paths agree", traced == direct, "");
  return finish(o, r);
}

int cmd_catalog(const Options& o) {
  Report r;
  auto props = [](const CatalogEntry& e) {
    std::string s = "associative ";
    s += e.associative ? "yes" : "no";
    s += ", unital ";
    s += e.unital ? "yes" : "no";
    s += ", self-conjugated ";
    s += e.self_conjugated ? "yes" : "no";
    s += ", involution ";
    s += e.involutive ? "yes" : "no";
    return s;
  };
  for (const auto& e : catalog_entries())
    r.extra(e.spec,
            e.description + " (e.g. " + e.example + "; " + props(e) + ")");
  return finish(o, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact integration over finite-dimensional algebras given by "
      "structure constants"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* cmd, bool with_positional) {
    cmd->add_option("--catalog", o.catalog_spec,
                    "builtin algebra, e.g. matrix:2, quaternions, cyclic:3, "
                    "torus:2, paragrassmann:2, grassmann:1");
    cmd->add_option("--algebra", o.algebra_file,
                    "algebra definition file (JSON)");
    if (with_positional)
      cmd->add_option("file", o.positional_file,
                      "algebra definition file (JSON)");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "emit the report as JSON");
    cmd->add_option("--seed", o.seed, "seed for the invertible-C search");
  };
  auto add_cfile = [&](CLI::App* cmd) {
    cmd->add_option("--c", o.c_file, "C matrix file (JSON)");
  };

  auto* c_check = app.add_subcommand(
      "check",
      "associativity, identity, self-conjugation and completeness checks");
  add_source(c_check, true);
  add_cfile(c_check);
  add_common(c_check);

  auto* c_cmatrix = app.add_subcommand(
      "cmatrix",
      "solve for the intertwiner space and report the chosen C with an "
      "involution analysis");
  add_source(c_cmatrix, false);
  add_cfile(c_cmatrix);
  add_common(c_cmatrix);
  c_cmatrix->add_option("--out", o.out_file, "write the chosen C to a file");

  auto* c_integrate = app.add_subcommand(
      "integrate", "integrate an element given by its coefficient list");
  add_source(c_integrate, false);
  add_cfile(c_integrate);
  add_common(c_integrate);
  c_integrate->add_option("--coeffs", o.coeffs, "element coefficients")
      ->required();

  auto* c_derivations = app.add_subcommand(
      "derivations",
      "basis of the derivation space with inner/outer classification");
  add_source(c_derivations, false);
  add_common(c_derivations);

  auto* c_ibp = app.add_subcommand(
      "ibp", "integration-by-parts check for one derivation");
  add_source(c_ibp, false);
  add_cfile(c_ibp);
  add_common(c_ibp);
  c_ibp->add_option("--element", o.element,
                    "generator coefficients for an inner derivation");
  c_ibp->add_option("--d", o.d_file,
                    "derivation matrix file (same JSON shape as a C matrix)");

  auto* c_theorem = app.add_subcommand(
      "theorem",
      "three-way equivalence: integration by parts, the C-transpose "
      "condition, and measure invariance of exp(alpha d)");
  add_source(c_theorem, false);
  add_cfile(c_theorem);
  add_common(c_theorem);
  c_theorem->add_option("--generator", o.generator,
                        "generator coefficients for an inner derivation");
  c_theorem->add_option(
      "--d", o.d_file,
      "derivation matrix file (same JSON shape as a C matrix)");

  auto* c_para = app.add_subcommand(
      "paragrassmann",
      "integrate a single-variable nilpotent polynomial by the trace path "
      "and the C-matrix path");
  add_common(c_para);
  c_para->add_option("--p", o.p, "nilpotency order (t^(p+1) = 0)")
      ->required();
  c_para->add_option("--coeffs", o.coeffs, "p + 1 coefficients, constant first")
      ->required();
  c_para->add_option("--shift", o.shift,
                     "projector column k; integrates t^(k-1) f(t)");

  auto* c_catalog =
      app.add_subcommand("catalog", "list the builtin algebra families");
  add_common(c_catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_check)) return cmd_check(o);
    if (app.got_subcommand(c_cmatrix)) return cmd_cmatrix(o);
    if (app.got_subcommand(c_integrate)) return cmd_integrate(o);
    if (app.got_subcommand(c_derivations)) return cmd_derivations(o);
    if (app.got_subcommand(c_ibp)) return cmd_ibp(o);
    if (app.got_subcommand(c_theorem)) return cmd_theorem(o);
    if (app.got_subcommand(c_para)) return cmd_paragrassmann(o);
    if (app.got_subcommand(c_catalog)) return cmd_catalog(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FieldMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
