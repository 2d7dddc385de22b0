#pragma once

// Command-line front end. run_cli is separate from main so tests can drive it
// with captured streams.
//
// Exit status: 0 success, 1 a check failed (not a solution, failed report,
// failed corpus case, internal inconsistency), 2 usage, parse or domain error.
//
// With --format json every subcommand prints one JSON object. Expressions in it
// use the same text grammar as the input.
//   normalize  {"q", "f0", "bands": [{"w", "multiplier"}]}
//   char/mq/zeros  {"quantity", "q", "leading", "over_pi" (string or null), "log_degree" (int or null)}
//   duality    {"dual", "strongly_dual" (only with --strong)}
//   verify     {"equation", "residual", "solution"}
//   riccati    {"equation", "residual", "solution"}
//   report     {"q", "c", "w", "lambda", "ordering_ok", "b_relation_ok", "top_identity_ok",
//               "fm_equation_ok", "borel": [{"j", "i", "frequency", "case"}], "ok"}
//   search     {"equation", "solutions": [...]}
//   construct  {"equation", "solution", ...generator extras}
//   corpus     {"cases": [...], "checks", "failures", "passed", "excluded": [...]}

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expoly/corpus.hpp"
#include "expoly/expoly.hpp"

#ifndef EXPOLY_CORPUS_DIR
#define EXPOLY_CORPUS_DIR "corpus"
#endif

namespace expoly::cli {

using nlohmann::json;

struct CliConfig {
  std::int64_t radicand = 1;
  double tolerance = 1e-9;
  std::string format = "text";
};

namespace detail {

/// Tokens starting with '-' that are not our options are expressions such as "-2" or "-z^2".
inline std::vector<std::string> protect_negative_values(int argc, const char* const* argv) {
  std::vector<std::string> out;
  for (int k = 0; k < argc; ++k) {
    std::string a = argv[k];
    const bool option = a == "-h" || a.rfind("--", 0) == 0;
    if (k > 0 && !option && !a.empty() && a[0] == '-') a = " " + a;
    out.push_back(std::move(a));
  }
  return out;
}

/// k with x = k/pi for a small-denominator rational k, as text.
inline std::optional<std::string> over_pi(double x) {
  const double k = x * std::numbers::pi;
  for (long den = 1; den <= 64; ++den) {
    const double num = std::round(k * static_cast<double>(den));
    if (std::abs(num / static_cast<double>(den) - k) < 1e-9) {
      return make_rational(static_cast<long>(num), den).get_str();
    }
  }
  return std::nullopt;
}

inline std::string r_power(int q) { return q == 1 ? "r" : "r^" + std::to_string(q); }

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(7);
  os << x;
  return os.str();
}

inline LinearODE equation_from(const std::vector<std::string>& eq, const std::vector<std::string>& coeffs,
                               const ScalarContext& ctx) {
  if (!eq.empty() && !coeffs.empty()) throw CLI::ValidationError("--eq and --coeffs are mutually exclusive");
  if (!eq.empty()) return LinearODE::second_order(parse_expoly(eq.at(0), ctx), parse_expoly(eq.at(1), ctx));
  if (coeffs.size() < 2) throw CLI::ValidationError("give --eq A B or --coeffs a_n ... a_0");
  std::vector<ExpPoly> c;
  for (const auto& s : coeffs) c.push_back(parse_expoly(s, ctx));
  return LinearODE::from_highest_first(std::move(c));
}

struct Printer {
  std::ostream& out;
  bool as_json;

  void emit(const json& j, const std::string& text) const {
    if (as_json) {
      out << j.dump(2) << "\n";
    } else {
      out << text;
    }
  }
};

inline json growth_json(const std::string& name, const GrowthAsymptotic& g) {
  json j{{"quantity", name}, {"q", g.q}, {"leading", g.leading}};
  const auto k = over_pi(g.leading);
  j["over_pi"] = k ? json(*k) : json(nullptr);
  j["log_degree"] = g.degenerate_log ? json(*g.degenerate_log) : json(nullptr);
  return j;
}

inline std::string growth_text(const std::string& name, const GrowthAsymptotic& g) {
  std::ostringstream os;
  if (g.degenerate_log) {
    os << name << " ~ " << *g.degenerate_log << " log r\n";
    return os.str();
  }
  if (g.leading == 0.0) {
    os << name << " = o(" << r_power(std::max(g.q, 1)) << ")\n";
    return os.str();
  }
  if (const auto k = over_pi(g.leading)) {
    os << name << " ~ (" << *k << "/pi) " << r_power(g.q) << "\n";
  } else {
    os << name << " ~ " << fmt(g.leading) << " " << r_power(g.q) << "\n";
  }
  os << "leading coefficient " << fmt(g.leading) << "\n";
  return os.str();
}

inline std::string report_text(const DualityReport& rep) {
  std::ostringstream os;
  auto list = [](const std::vector<QScalar>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + to_string(v[k]);
    return s;
  };
  auto yes = [](bool b) { return b ? "yes" : "NO"; };
  os << "q = " << rep.q << ", c = " << to_string(rep.c) << "\n";
  os << "frequencies of f: " << list(rep.w_list) << "\n";
  os << "lambda of A:      " << list(rep.lambda_list) << "\n";
  os << "ordering lambda_k = w_1:         " << yes(rep.ordering_ok) << "\n";
  os << "-A_k G_1 = c B:                  " << yes(rep.b_relation_ok) << "\n";
  os << "A_0 G_m + B F_m + H_m = 0:       " << yes(rep.top_identity_ok) << "\n";
  os << "F_m'' + P F_m' + Q F_m = 0:      " << yes(rep.fm_equation_ok) << "\n";
  for (const auto& e : rep.borel_classification) {
    os << "  (j=" << e.j << ", i=" << e.i << ") w_j - lambda_i = " << to_string(e.frequency) << ": case "
       << to_string(e.tag) << "\n";
  }
  return os.str();
}

inline json report_json(const DualityReport& rep) {
  json j{{"q", rep.q},
         {"c", to_string(rep.c)},
         {"ordering_ok", rep.ordering_ok},
         {"b_relation_ok", rep.b_relation_ok},
         {"top_identity_ok", rep.top_identity_ok},
         {"fm_equation_ok", rep.fm_equation_ok},
         {"ok", rep.all_ok()}};
  j["w"] = json::array();
  for (const auto& w : rep.w_list) j["w"].push_back(to_string(w));
  j["lambda"] = json::array();
  for (const auto& l : rep.lambda_list) j["lambda"].push_back(to_string(l));
  j["borel"] = json::array();
  for (const auto& e : rep.borel_classification) {
    j["borel"].push_back({{"j", e.j}, {"i", e.i}, {"frequency", to_string(e.frequency)}, {"case", to_string(e.tag)}});
  }
  return j;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with exponential polynomials and linear ODEs", "expoly"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_option("--radicand", cfg.radicand, "square-free r for sqrt(r) in expressions")
      ->envname("EXPOLY_RADICAND")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", cfg.tolerance, "relative tolerance of numeric spot checks")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string expr_a, expr_b;
  std::vector<std::string> eq_pair, coeffs;
  std::string f_text, logf_text;
  bool strong = false;

  auto* normalize_cmd = app.add_subcommand("normalize", "normalized form of an exponential polynomial");
  normalize_cmd->add_option("EXPR", expr_a)->required();
  auto* char_cmd = app.add_subcommand("char", "leading term of the characteristic function T(r,f)");
  char_cmd->add_option("EXPR", expr_a)->required();
  auto* mq_cmd = app.add_subcommand("mq", "leading term of the proximity function m(r,f/g)");
  mq_cmd->add_option("NUM", expr_a)->required();
  mq_cmd->add_option("DEN", expr_b)->required();
  auto* zeros_cmd = app.add_subcommand("zeros", "leading term of the zero-counting function N(r,0,f)");
  zeros_cmd->add_option("EXPR", expr_a)->required();
  auto* duality_cmd = app.add_subcommand("duality", "test whether F and G are dual");
  duality_cmd->add_option("F", expr_a)->required();
  duality_cmd->add_option("G", expr_b)->required();
  duality_cmd->add_flag("--strong", strong, "also test strong duality");

  auto add_eq = [&](CLI::App* cmd) {
    cmd->add_option("--eq", eq_pair, "A B for f'' + A f' + B f = 0")->expected(2);
    cmd->add_option("--coeffs", coeffs, "a_n ... a_0, highest derivative first")->expected(2, 64);
  };
  auto* verify_cmd = app.add_subcommand("verify", "check that f solves the equation exactly");
  add_eq(verify_cmd);
  verify_cmd->add_option("--f", f_text, "candidate solution")->required();
  auto* riccati_cmd = app.add_subcommand("riccati", "check that exp(E) solves the equation");
  add_eq(riccati_cmd);
  riccati_cmd->add_option("--logf", logf_text, "E with f = exp(E)")->required();
  auto* report_cmd = app.add_subcommand("report", "duality structure report for f'' + A f' + B f = 0");
  report_cmd->add_option("--eq", eq_pair, "A B")->expected(2)->required();
  report_cmd->add_option("--f", f_text, "transcendental solution")->required();

  std::string w_text = "1";
  int q = 1, jmin = 0, jmax = 0, deg = 0;
  auto* search_cmd = app.add_subcommand("search", "exponential polynomial solutions in an ansatz box");
  add_eq(search_cmd);
  search_cmd->add_option("--w", w_text, "lattice generator");
  search_cmd->add_option("--q", q, "exponent degree");
  search_cmd->add_option("--jmin", jmin, "lowest multiple of w z^q");
  search_cmd->add_option("--jmax", jmax, "highest multiple of w z^q")->required();
  search_cmd->add_option("--deg", deg, "degree bound for the multipliers")->required();

  auto* construct_cmd = app.add_subcommand("construct", "named equation families");
  construct_cmd->require_subcommand(1);
  int m = 0, tq = 0, tj = 0;
  std::string c_text, b_text, p_text, h_text;
  auto* frei_cmd = construct_cmd->add_subcommand("frei", "f'' + exp(-z) f' - m^2 f = 0");
  frei_cmd->add_option("M", m)->required()->check(CLI::Range(1, 64));
  auto* oneterm_cmd = construct_cmd->add_subcommand("oneterm", "solution c + b exp(w z)");
  oneterm_cmd->add_option("C", c_text)->required();
  oneterm_cmd->add_option("B", b_text)->required();
  oneterm_cmd->add_option("W", w_text)->required();
  oneterm_cmd->add_option("P", p_text)->required();
  auto* tohge_cmd = construct_cmd->add_subcommand("tohge", "order q+1 equation solved by exp(z^q) + 1");
  tohge_cmd->add_option("Q", tq)->required()->check(CLI::Range(1, 12));
  tohge_cmd->add_option("J", tj)->required()->check(CLI::PositiveNumber);
  tohge_cmd->add_option("H", h_text)->required();
  auto* band_cmd = construct_cmd->add_subcommand("band", "solution exp(z^q)");
  band_cmd->add_option("Q", tq)->required()->check(CLI::Range(1, 64));
  band_cmd->add_option("H", h_text)->required();
  auto* cosh_cmd = construct_cmd->add_subcommand("cosh", "solution (exp(z) + exp(-z)) exp(z^q)");
  cosh_cmd->add_option("Q", tq)->required()->check(CLI::Range(1, 64));
  cosh_cmd->add_option("H", h_text)->required();

  std::string prefix;
  std::string corpus_dir = EXPOLY_CORPUS_DIR;
  auto* corpus_cmd = app.add_subcommand("corpus", "run the worked-example corpus");
  corpus_cmd->add_option("PREFIX", prefix, "only cases whose id starts with PREFIX");
  corpus_cmd->add_option("--dir", corpus_dir, "corpus directory")->envname("EXPOLY_CORPUS_DIR");

  const auto args = detail::protect_negative_values(argc, argv);
  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const detail::Printer print{out, cfg.format == "json"};
  try {
    const ScalarContext ctx(cfg.radicand, cfg.tolerance);
    auto parse = [&](const std::string& s) { return parse_expoly(s, ctx); };

    if (normalize_cmd->parsed()) {
      const NormalizedView v = normalize(parse(expr_a));
      json j{{"q", v.q}, {"f0", print_expoly(v.f0)}, {"bands", json::array()}};
      std::ostringstream os;
      os << "q = " << v.q << "\nF_0 = " << print_expoly(v.f0) << "\n";
      for (std::size_t k = 0; k < v.bands.size(); ++k) {
        j["bands"].push_back({{"w", to_string(v.bands[k].w)}, {"multiplier", print_expoly(v.bands[k].multiplier)}});
        os << "w_" << k + 1 << " = " << to_string(v.bands[k].w) << ", F_" << k + 1 << " = "
           << print_expoly(v.bands[k].multiplier) << "\n";
      }
      print.emit(j, os.str());
      return 0;
    }
    if (char_cmd->parsed()) {
      const auto g = characteristic_asymptotic(parse(expr_a));
      print.emit(detail::growth_json("T", g), detail::growth_text("T(r,f)", g));
      return 0;
    }
    if (mq_cmd->parsed()) {
      const auto g = proximity_quotient_asymptotic(parse(expr_a), parse(expr_b));
      print.emit(detail::growth_json("m", g), detail::growth_text("m(r,f/g)", g));
      return 0;
    }
    if (zeros_cmd->parsed()) {
      const auto g = zero_counting_asymptotic(parse(expr_a));
      print.emit(detail::growth_json("N", g), detail::growth_text("N(r,0,f)", g));
      return 0;
    }
    if (duality_cmd->parsed()) {
      const ExpPoly f = parse(expr_a), g = parse(expr_b);
      const bool dual = are_dual(f, g);
      json j{{"dual", dual}};
      std::string text = std::string("dual: ") + (dual ? "true" : "false") + "\n";
      if (strong) {
        const bool s = are_strongly_dual(f, g);
        j["strongly_dual"] = s;
        text += std::string("strongly dual: ") + (s ? "true" : "false") + "\n";
      }
      print.emit(j, text);
      return 0;
    }
    if (verify_cmd->parsed()) {
      const LinearODE eq = detail::equation_from(eq_pair, coeffs, ctx);
      const ExpPoly f = parse(f_text);
      const bool ok = is_solution(eq, f, cfg.tolerance);
      const ExpPoly r = residual(eq, f);
      print.emit({{"equation", print_equation(eq)}, {"residual", print_expoly(r)}, {"solution", ok}},
                 print_equation(eq) + "\nresidual: " + print_expoly(r) + "\n" + (ok ? "solution\n" : "not a solution\n"));
      return ok ? 0 : 1;
    }
    if (riccati_cmd->parsed()) {
      const LinearODE eq = detail::equation_from(eq_pair, coeffs, ctx);
      const ExpPoly r = exp_solution_residual(eq, parse(logf_text));
      const bool ok = r.is_zero();
      print.emit({{"equation", print_equation(eq)}, {"residual", print_expoly(r)}, {"solution", ok}},
                 print_equation(eq) + "\nsum a_k u_k: " + print_expoly(r) + "\n" +
                     (ok ? "exp(E) is a solution\n" : "exp(E) is not a solution\n"));
      return ok ? 0 : 1;
    }
    if (report_cmd->parsed()) {
      const DualityReport rep = duality_structure_report(parse(eq_pair.at(0)), parse(eq_pair.at(1)), parse(f_text));
      print.emit(detail::report_json(rep), detail::report_text(rep));
      return rep.all_ok() ? 0 : 1;
    }
    if (search_cmd->parsed()) {
      const LinearODE eq = detail::equation_from(eq_pair, coeffs, ctx);
      SearchSpec spec{parse_scalar(w_text, ctx), q, jmin, jmax, deg};
      const auto found = search_solutions(eq, spec);
      json j{{"equation", print_equation(eq)}, {"solutions", json::array()}};
      std::string text;
      for (const auto& f : found) {
        j["solutions"].push_back(print_expoly(f));
        text += print_expoly(f) + "\n";
      }
      if (found.empty()) text = "no solutions\n";
      print.emit(j, text);
      return 0;
    }
    if (construct_cmd->parsed()) {
      json j;
      std::string text;
      auto pair = [&](const LinearODE& eq, const ExpPoly& f) {
        j["equation"] = print_equation(eq);
        j["solution"] = print_expoly(f);
        text += print_equation(eq) + "\nf = " + print_expoly(f) + "\n";
      };
      if (frei_cmd->parsed()) {
        const auto fam = frei(m);
        pair(fam.equation, fam.solution);
        j["coefficients"] = json::array();
        for (const auto& c : fam.coefficients) j["coefficients"].push_back(to_string(c));
        // Plain text prints the solution on its own line for piping.
        text = print_equation(fam.equation) + "\n" + print_expoly(fam.solution) + "\n";
      } else if (oneterm_cmd->parsed()) {
        const auto fam = one_term_family(parse_scalar(c_text, ctx), parse_scalar(b_text, ctx),
                                         parse_scalar(w_text, ctx), parse_poly(p_text, ctx));
        pair(fam.equation, fam.solution);
      } else if (tohge_cmd->parsed()) {
        const LinearODE eq = tohge_equation(tq, tj, parse(h_text));
        pair(eq, ExpPoly::exp(Poly::monomial(QScalar(1L), tq)) + ExpPoly(1L));
      } else if (band_cmd->parsed()) {
        const auto fam = single_band_family(tq, parse(h_text));
        pair(fam.equation, fam.solution);
      } else {
        const auto fam = cosh_band_family(tq, parse(h_text));
        pair(fam.equation, fam.solution);
      }
      print.emit(j, text);
      return 0;
    }
    // corpus
    const Corpus corpus = load_corpus(corpus_dir);
    const CorpusReport rep = run_corpus(corpus, prefix);
    json j = report_to_json(rep);
    j["excluded"] = json::array();
    for (const auto& e : corpus.excluded) j["excluded"].push_back({{"id", e.id}, {"reason", e.reason}});
    print.emit(j, format_report_text(rep));
    return rep.passed() ? 0 : 1;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace expoly::cli
