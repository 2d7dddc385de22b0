#pragma once

// Registry of worked examples and displayed identities, stored as JSON files
// (one per topic) and executed by run_corpus.
//
// File schema:
//   {
//     "topic": "basics",
//     "cases": [
//       { "id": "ex-1.4",
//         "radicand": 6,                          // optional, default 1
//         "equation": ["1", "A", "B"],            // optional, a_n ... a_0
//         "solution": "expr",                     // optional
//         "exp_solution_log": "expr",             // optional, E in f = e^E
//         "checks": [ { "kind": "residual-zero" }, ... ],
//         "annotations": ["..."] } ],
//     "excluded": [ { "id": "...", "reason": "..." } ]
//   }
//
// Check kinds and their fields:
//   residual-zero, residual-nonzero, riccati, duality-report
//   search-recovery   w, q, jmin (default 0), jmax, deg, expected_dim
//   growth-leading    quantity "T" | "N" with expr, or "m" with num/den;
//                     expected = rational k meaning k/pi
//   dual, strong-duality     f, g, expected (bool)
//   common-factor     expr, expected (scalar text or null)
//   identity          lhs, rhs
//   derivative-frequencies   expr
//   antiderivative    expr, expected (order <= 1 primitive with zero constant)
//   normalize         expr, q, f0, bands [[w, F], ...]
//   family            generator, args (strings)

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "expoly/construct.hpp"
#include "expoly/duality.hpp"
#include "expoly/growth.hpp"
#include "expoly/textio.hpp"

namespace expoly {

struct CorpusCase {
  std::string id;
  std::string source_file;
  std::int64_t radicand = 1;
  std::vector<std::string> equation_text;
  std::optional<LinearODE> equation;
  std::optional<ExpPoly> solution;
  std::optional<ExpPoly> exp_solution_log;
  std::vector<nlohmann::json> checks;
  std::vector<std::string> annotations;
};

struct CorpusExclusion {
  std::string id;
  std::string reason;
};

struct Corpus {
  std::vector<CorpusCase> cases;  // sorted by id
  std::vector<CorpusExclusion> excluded;
};

struct CheckResult {
  std::string kind;
  bool passed = false;
  std::string detail;
};

struct CaseResult {
  std::string id;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

struct CorpusReport {
  std::vector<CaseResult> cases;
  [[nodiscard]] std::size_t check_count() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.checks.size();
    return n;
  }
  [[nodiscard]] std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& c : cases) {
      for (const auto& k : c.checks) n += k.passed ? 0 : 1;
    }
    return n;
  }
  [[nodiscard]] bool passed() const { return failure_count() == 0; }
};

namespace corpus_detail {

inline const std::set<std::string>& known_kinds() {
  static const std::set<std::string> kinds{
      "residual-zero", "residual-nonzero", "riccati",  "duality-report",
      "search-recovery", "growth-leading", "dual",     "strong-duality",
      "common-factor", "identity",         "derivative-frequencies", "normalize",
      "family",        "antiderivative"};
  return kinds;
}

inline std::string str_field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw CorpusFormatError(where + ": missing string field '" + key + "'");
  }
  return j.at(key).get<std::string>();
}

inline int int_field(const nlohmann::json& j, const char* key, const std::string& where,
                     std::optional<int> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw CorpusFormatError(where + ": missing integer field '" + key + "'");
  }
  if (!j.at(key).is_number_integer()) throw CorpusFormatError(where + ": field '" + key + "' must be an integer");
  return j.at(key).get<int>();
}

inline bool bool_field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_boolean()) {
    throw CorpusFormatError(where + ": missing boolean field '" + key + "'");
  }
  return j.at(key).get<bool>();
}

inline ExpPoly parse_field(const std::string& text, const ScalarContext& ctx, const std::string& where) {
  try {
    return parse_expoly(text, ctx);
  } catch (const Error& e) {
    throw CorpusFormatError(where + ": cannot parse '" + text + "': " + e.what());
  }
}

inline Rational parse_rational(const std::string& text, const std::string& where) {
  const QScalar x = parse_scalar(text);
  if (!x.is_rational()) throw CorpusFormatError(where + ": expected a rational, got '" + text + "'");
  return x.a_re();
}

/// Fields each check kind needs, validated at load time.
inline void validate_check(const nlohmann::json& check, const CorpusCase& c, const std::string& where) {
  const std::string kind = str_field(check, "kind", where);
  if (!known_kinds().count(kind)) throw CorpusFormatError(where + ": unknown check kind '" + kind + "'");
  const ScalarContext ctx(c.radicand);
  auto need_eq_sol = [&] {
    if (!c.equation || !c.solution) throw CorpusFormatError(where + ": " + kind + " needs equation and solution");
  };
  auto need_expr = [&](const char* key) { parse_field(str_field(check, key, where), ctx, where); };
  if (kind == "residual-zero" || kind == "residual-nonzero") {
    need_eq_sol();
  } else if (kind == "riccati") {
    if (!c.equation || !c.exp_solution_log) {
      throw CorpusFormatError(where + ": riccati needs equation and exp_solution_log");
    }
  } else if (kind == "duality-report") {
    need_eq_sol();
    if (c.equation->order() != 2 || !(c.equation->coeff(2) == ExpPoly(1L))) {
      throw CorpusFormatError(where + ": duality-report needs a monic second-order equation");
    }
  } else if (kind == "search-recovery") {
    if (!c.equation) throw CorpusFormatError(where + ": search-recovery needs an equation");
    need_expr("w");
    int_field(check, "q", where);
    int_field(check, "jmax", where);
    int_field(check, "deg", where);
    const int dim = int_field(check, "expected_dim", where);
    if (dim > 0 && !c.solution) throw CorpusFormatError(where + ": search-recovery with solutions needs a solution");
  } else if (kind == "growth-leading") {
    const std::string q = str_field(check, "quantity", where);
    if (q == "m") {
      need_expr("num");
      need_expr("den");
    } else if (q == "T" || q == "N") {
      need_expr("expr");
    } else {
      throw CorpusFormatError(where + ": growth quantity must be T, m or N");
    }
    parse_rational(str_field(check, "expected", where), where);
  } else if (kind == "dual" || kind == "strong-duality") {
    need_expr("f");
    need_expr("g");
    bool_field(check, "expected", where);
  } else if (kind == "common-factor") {
    need_expr("expr");
    if (!check.contains("expected")) throw CorpusFormatError(where + ": common-factor needs 'expected'");
  } else if (kind == "identity") {
    need_expr("lhs");
    need_expr("rhs");
  } else if (kind == "derivative-frequencies") {
    need_expr("expr");
  } else if (kind == "antiderivative") {
    need_expr("expr");
    need_expr("expected");
  } else if (kind == "normalize") {
    need_expr("expr");
    need_expr("f0");
    int_field(check, "q", where);
    if (!check.contains("bands") || !check.at("bands").is_array()) {
      throw CorpusFormatError(where + ": normalize needs 'bands'");
    }
  } else if (kind == "family") {
    str_field(check, "generator", where);
    if (!check.contains("args") || !check.at("args").is_array()) {
      throw CorpusFormatError(where + ": family needs 'args'");
    }
  }
}

inline CorpusCase parse_case(const nlohmann::json& j, const std::string& file) {
  CorpusCase c;
  c.source_file = file;
  c.id = str_field(j, "id", file);
  const std::string where = file + ":" + c.id;
  if (j.contains("radicand")) {
    if (!j.at("radicand").is_number_integer()) throw CorpusFormatError(where + ": radicand must be an integer");
    c.radicand = j.at("radicand").get<std::int64_t>();
    if (!is_square_free(c.radicand)) throw CorpusFormatError(where + ": radicand must be square-free");
  }
  const ScalarContext ctx(c.radicand);
  if (j.contains("equation")) {
    std::vector<ExpPoly> coeffs;
    for (const auto& t : j.at("equation")) {
      if (!t.is_string()) throw CorpusFormatError(where + ": equation entries must be strings");
      c.equation_text.push_back(t.get<std::string>());
      coeffs.push_back(parse_field(c.equation_text.back(), ctx, where));
    }
    try {
      c.equation = LinearODE::from_highest_first(std::move(coeffs));
    } catch (const Error& e) {
      throw CorpusFormatError(where + ": " + e.what());
    }
  }
  if (j.contains("solution")) c.solution = parse_field(str_field(j, "solution", where), ctx, where);
  if (j.contains("exp_solution_log")) {
    c.exp_solution_log = parse_field(str_field(j, "exp_solution_log", where), ctx, where);
  }
  if (!j.contains("checks") || !j.at("checks").is_array() || j.at("checks").empty()) {
    throw CorpusFormatError(where + ": a case needs at least one check");
  }
  for (const auto& check : j.at("checks")) {
    validate_check(check, c, where);
    c.checks.push_back(check);
  }
  if (j.contains("annotations")) {
    for (const auto& a : j.at("annotations")) c.annotations.push_back(a.get<std::string>());
  }
  return c;
}

/// Coefficient coordinates keyed by (exponent, monomial degree).
inline std::map<std::pair<std::string, int>, QScalar> coordinates(const ExpPoly& f) {
  std::map<std::pair<std::string, int>, QScalar> out;
  for (const auto& [e, m] : f.terms()) {
    const std::string key = to_string(e, true);
    for (int d = 0; d <= m.degree(); ++d) {
      if (!m.coeff(d).is_zero()) out[{key, d}] = m.coeff(d);
    }
  }
  return out;
}

/// Rank of the coefficient vectors of `fs`.
inline std::size_t span_rank(const std::vector<ExpPoly>& fs) {
  std::map<std::pair<std::string, int>, std::size_t> rows;
  std::vector<std::map<std::pair<std::string, int>, QScalar>> coords;
  for (const auto& f : fs) {
    coords.push_back(coordinates(f));
    for (const auto& [k, v] : coords.back()) rows.try_emplace(k, rows.size());
  }
  Matrix m(rows.size(), fs.size());
  for (std::size_t col = 0; col < fs.size(); ++col) {
    for (const auto& [k, v] : coords[col]) m(rows.at(k), col) = v;
  }
  return rank(m);
}

inline std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

inline CheckResult run_family(const nlohmann::json& check, const CorpusCase& c, const ScalarContext& ctx) {
  const std::string gen = check.at("generator").get<std::string>();
  std::vector<std::string> args;
  for (const auto& a : check.at("args")) args.push_back(a.get<std::string>());
  auto arg_int = [&](std::size_t k) { return std::stoi(args.at(k)); };
  auto arg_expr = [&](std::size_t k) { return parse_expoly(args.at(k), ctx); };
  auto arg_scalar = [&](std::size_t k) { return parse_scalar(args.at(k), ctx); };
  auto compare = [&](const LinearODE& eq, const std::optional<ExpPoly>& sol) -> CheckResult {
    if (c.equation && !(*c.equation == eq)) {
      return {"family", false, gen + ": generated equation differs: " + print_equation(eq)};
    }
    if (c.solution && sol && !(*c.solution == *sol)) {
      return {"family", false, gen + ": generated solution differs: " + print_expoly(*sol)};
    }
    return {"family", true, gen + " reproduces the stored pair"};
  };
  if (gen == "frei") {
    const auto fam = frei(arg_int(0));
    if (frei_coefficients_recursive(fam.m) != frei_coefficients_closed(fam.m)) {
      return {"family", false, "frei: recursion and closed form differ"};
    }
    for (const auto& cj : fam.coefficients) {
      if (cj.is_zero()) return {"family", false, "frei: zero coefficient C_j"};
    }
    return compare(fam.equation, fam.solution);
  }
  if (gen == "one-term") {
    const auto fam = one_term_family(arg_scalar(0), arg_scalar(1), arg_scalar(2), arg_expr(3).as_poly());
    return compare(fam.equation, fam.solution);
  }
  if (gen == "intro-one-term") {
    const QScalar b = arg_scalar(0), w = arg_scalar(1);
    const auto eq = intro_one_term_family(b, w, arg_expr(2).as_poly());
    return compare(eq, ExpPoly(1L) + b * ExpPoly::exp(Poly::monomial(w, 1)));
  }
  if (gen == "tohge-tables") {
    const auto t = tohge_tables(arg_int(0));
    std::string zeros;
    for (const auto& [j, k] : t.zero_entries) zeros += " P_{" + std::to_string(j) + "," + std::to_string(k) + "}";
    return {"family", true, "identities (i) for j = 0.." + std::to_string(t.q) + " and (ii) hold; zero entries:" + zeros};
  }
  if (gen == "tohge-equation") {
    const int q = arg_int(0);
    const auto eq = tohge_equation(q, arg_int(1), arg_expr(2));
    return compare(eq, ExpPoly::exp(Poly::monomial(QScalar(1L), q)) + ExpPoly(1L));
  }
  if (gen == "single-band") {
    const auto fam = single_band_family(arg_int(0), arg_expr(1));
    return compare(fam.equation, fam.solution);
  }
  if (gen == "cosh-band") {
    const auto fam = cosh_band_family(arg_int(0), arg_expr(1));
    return compare(fam.equation, fam.solution);
  }
  throw CorpusFormatError(c.id + ": unknown generator '" + gen + "'");
}

inline CheckResult run_check(const nlohmann::json& check, const CorpusCase& c) {
  const ScalarContext ctx(c.radicand);
  const std::string kind = check.at("kind").get<std::string>();
  auto expr = [&](const char* key) { return parse_expoly(check.at(key).get<std::string>(), ctx); };

  if (kind == "residual-zero" || kind == "residual-nonzero") {
    const ExpPoly r = residual(*c.equation, *c.solution);
    const bool want_zero = kind == "residual-zero";
    if (want_zero) is_solution(*c.equation, *c.solution, ctx.float_tolerance);
    return {kind, r.is_zero() == want_zero, "residual = " + print_expoly(r)};
  }
  if (kind == "riccati") {
    const ExpPoly r = exp_solution_residual(*c.equation, *c.exp_solution_log);
    return {kind, r.is_zero(), "sum a_k u_k = " + print_expoly(r)};
  }
  if (kind == "duality-report") {
    const ExpPoly& a = c.equation->coeff(1);
    const ExpPoly& b = c.equation->coeff(0);
    const DualityReport rep = duality_structure_report(a, b, *c.solution);
    bool borel_ok = true;
    for (const auto& e : rep.borel_classification) borel_ok = borel_ok && e.tag != BorelCase::Neither;
    bool strong_ok = true;
    std::string strong_note;
    if (auto simple = is_simple(*c.solution); simple && common_factor(*c.solution)) {
      strong_ok = are_strongly_dual(*c.solution, a);
      strong_note = strong_ok ? "; strongly dual with A" : "; NOT strongly dual with A";
    }
    std::ostringstream os;
    os << "ordering=" << rep.ordering_ok << " b_relation=" << rep.b_relation_ok << " top=" << rep.top_identity_ok
       << " fm=" << rep.fm_equation_ok << " borel_tagged=" << borel_ok << strong_note;
    return {kind, rep.all_ok() && borel_ok && strong_ok, os.str()};
  }
  if (kind == "search-recovery") {
    SearchSpec spec;
    spec.w = parse_scalar(check.at("w").get<std::string>(), ctx);
    spec.q = check.at("q").get<int>();
    spec.j_min = check.value("jmin", 0);
    spec.j_max = check.at("jmax").get<int>();
    spec.deg_bound = check.at("deg").get<int>();
    const auto found = search_solutions(*c.equation, spec);
    const auto want = static_cast<std::size_t>(check.at("expected_dim").get<int>());
    bool ok = found.size() == want;
    for (const auto& f : found) ok = ok && residual(*c.equation, f).is_zero();
    if (ok && want > 0) {
      auto with = found;
      with.push_back(*c.solution);
      ok = span_rank(with) == want;
    }
    std::string detail = "dimension " + std::to_string(found.size());
    for (const auto& f : found) detail += "; " + print_expoly(f);
    return {kind, ok, detail};
  }
  if (kind == "growth-leading") {
    const std::string q = check.at("quantity").get<std::string>();
    GrowthAsymptotic g;
    if (q == "T") {
      g = characteristic_asymptotic(expr("expr"));
    } else if (q == "N") {
      g = zero_counting_asymptotic(expr("expr"));
    } else {
      g = proximity_quotient_asymptotic(expr("num"), expr("den"));
    }
    const Rational k = parse_rational(check.at("expected").get<std::string>(), c.id);
    const double expected = k.get_d() / std::numbers::pi;
    const double delta = std::abs(g.leading - expected);
    return {kind, delta <= 1e-9,
            q + " leading " + fmt_double(g.leading) + " vs " + k.get_str() + "/pi (delta " + fmt_double(delta) + ")"};
  }
  if (kind == "dual" || kind == "strong-duality") {
    const ExpPoly f = expr("f");
    const ExpPoly g = expr("g");
    const bool got = kind == "dual" ? are_dual(f, g) : are_strongly_dual(f, g);
    const bool symmetric = kind == "dual" ? are_dual(g, f) == got : are_strongly_dual(g, f) == got;
    const bool expected = check.at("expected").get<bool>();
    return {kind, got == expected && symmetric,
            std::string(got ? "true" : "false") + (symmetric ? "" : " (asymmetric!)")};
  }
  if (kind == "common-factor") {
    const auto w = common_factor(expr("expr"));
    const auto& e = check.at("expected");
    if (e.is_null()) return {kind, !w.has_value(), w ? "got " + to_string(*w) : "none"};
    const QScalar want = parse_scalar(e.get<std::string>(), ctx);
    return {kind, w && *w == want, w ? "got " + to_string(*w) : "none"};
  }
  if (kind == "identity") {
    const ExpPoly diff = expr("lhs") - expr("rhs");
    return {kind, diff.is_zero(), "lhs - rhs = " + print_expoly(diff)};
  }
  if (kind == "derivative-frequencies") {
    const ExpPoly f = expr("expr");
    auto freqs = [](const ExpPoly& h) {
      std::set<QScalar, QScalarLess> s;
      for (const auto& b : normalize(h).bands) s.insert(b.w);
      return s;
    };
    const bool ok = freqs(f) == freqs(f.derivative());
    return {kind, ok, ok ? "W_{f'} = W_f" : "frequency sets differ"};
  }
  if (kind == "antiderivative") {
    const ExpPoly f = expr("expr");
    const ExpPoly got = antiderivative_exp1(f);
    const bool ok = got == expr("expected") && got.derivative() == f;
    return {kind, ok, "primitive " + print_expoly(got)};
  }
  if (kind == "normalize") {
    const NormalizedView v = normalize(expr("expr"));
    NormalizedView want;
    want.q = check.at("q").get<int>();
    want.f0 = expr("f0");
    for (const auto& pair : check.at("bands")) {
      want.bands.push_back({parse_scalar(pair.at(0).get<std::string>(), ctx),
                            parse_expoly(pair.at(1).get<std::string>(), ctx)});
    }
    std::string got = "q=" + std::to_string(v.q) + " f0=" + print_expoly(v.f0);
    for (const auto& b : v.bands) got += " (" + to_string(b.w) + ", " + print_expoly(b.multiplier) + ")";
    return {kind, v == want, got};
  }
  return run_family(check, c, ctx);
}

}  // namespace corpus_detail

inline Corpus load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw CorpusFormatError("corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Corpus corpus;
  std::set<std::string> ids;
  for (const auto& path : files) {
    std::ifstream in(path);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const nlohmann::json::exception& e) {
      throw CorpusFormatError(path.filename().string() + ": " + e.what());
    }
    const std::string file = path.filename().string();
    if (!doc.contains("cases") || !doc.at("cases").is_array()) throw CorpusFormatError(file + ": missing 'cases'");
    for (const auto& j : doc.at("cases")) {
      CorpusCase c = corpus_detail::parse_case(j, file);
      if (!ids.insert(c.id).second) throw CorpusFormatError(file + ": duplicate case id '" + c.id + "'");
      corpus.cases.push_back(std::move(c));
    }
    if (doc.contains("excluded")) {
      for (const auto& j : doc.at("excluded")) {
        corpus.excluded.push_back({corpus_detail::str_field(j, "id", file), corpus_detail::str_field(j, "reason", file)});
      }
    }
  }
  std::sort(corpus.cases.begin(), corpus.cases.end(),
            [](const CorpusCase& a, const CorpusCase& b) { return a.id < b.id; });
  return corpus;
}

/// Runs every check of every case whose id starts with `prefix`.
inline CorpusReport run_corpus(const Corpus& corpus, const std::string& prefix = "") {
  CorpusReport report;
  for (const auto& c : corpus.cases) {
    if (c.id.rfind(prefix, 0) != 0) continue;
    CaseResult result{c.id, {}};
    for (const auto& check : c.checks) {
      try {
        result.checks.push_back(corpus_detail::run_check(check, c));
      } catch (const Error& e) {
        result.checks.push_back({check.at("kind").get<std::string>(), false, std::string("error: ") + e.what()});
      }
    }
    report.cases.push_back(std::move(result));
  }
  return report;
}

inline std::string format_report_text(const CorpusReport& report) {
  std::ostringstream os;
  for (const auto& c : report.cases) {
    for (const auto& k : c.checks) {
      os << (k.passed ? "PASS " : "FAIL ") << c.id << " [" << k.kind << "] " << k.detail << "\n";
    }
  }
  os << report.cases.size() << " cases, " << report.check_count() << " checks, " << report.failure_count()
     << " failed\n";
  return os.str();
}

inline nlohmann::json report_to_json(const CorpusReport& report) {
  nlohmann::json out;
  out["cases"] = nlohmann::json::array();
  for (const auto& c : report.cases) {
    nlohmann::json jc{{"id", c.id}, {"passed", c.passed()}, {"checks", nlohmann::json::array()}};
    for (const auto& k : c.checks) jc["checks"].push_back({{"kind", k.kind}, {"passed", k.passed}, {"detail", k.detail}});
    out["cases"].push_back(std::move(jc));
  }
  out["checks"] = report.check_count();
  out["failures"] = report.failure_count();
  out["passed"] = report.passed();
  return out;
}

}  // namespace expoly
