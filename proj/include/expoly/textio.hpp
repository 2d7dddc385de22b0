#pragma once

// ASCII text format for scalars, polynomials, exponential polynomials and
// equations.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := primary ('^' uint)?
//   primary := uint | 'i' | 'z' | 'sqrt' '(' uint ')' | 'exp' '(' expr ')' | '(' expr ')'
//
// Division is only by nonzero constants, so "3/2" is a fraction. The argument
// of exp must be a polynomial with zero constant term.

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "expoly/normalize.hpp"
#include "expoly/ode.hpp"

namespace expoly {

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, const ScalarContext& ctx) : text_(text), ctx_(ctx) {}

  ExpPoly parse_all() {
    ExpPoly f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_, text_.size());
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t start, std::size_t end) const {
    throw SyntaxError(msg, SourceSpan{start, end});
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", pos_, std::min(pos_ + 1, text_.size()));
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t after = pos_ + w.size();
    if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) return false;
    pos_ = after;
    return true;
  }

  Integer uint_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer", start, std::min(start + 1, text_.size()));
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  ExpPoly expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    ExpPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ExpPoly term() {
    ExpPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t start = pos_;
        const ExpPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division is only by nonzero constants", start, pos_);
        acc = d.polynomial_part().coeff(0).inverse() * acc;
      } else {
        return acc;
      }
    }
  }

  ExpPoly factor() {
    ExpPoly base = primary();
    if (accept('^')) {
      const Integer n = uint_literal();
      if (n > 64) fail("exponent too large", pos_, pos_);
      base = base.pow(static_cast<unsigned>(n.get_ui()));
    }
    return base;
  }

  ExpPoly primary() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input", pos_, pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return ExpPoly(QScalar(Rational(uint_literal())));
    if (accept('(')) {
      ExpPoly inner = expr();
      expect(')');
      return inner;
    }
    if (accept_word("exp")) {
      expect('(');
      const std::size_t arg_start = pos_;
      const ExpPoly arg = expr();
      const std::size_t arg_end = pos_;
      expect(')');
      if (!arg.is_polynomial()) fail("exp argument must be a polynomial", arg_start, arg_end);
      const Poly e = arg.polynomial_part();
      if (!e.coeff(0).is_zero()) fail("exp argument must have zero constant term", arg_start, arg_end);
      return ExpPoly::exp(e);
    }
    if (accept_word("sqrt")) {
      expect('(');
      const std::size_t arg_start = pos_;
      const Integer r = uint_literal();
      expect(')');
      if (r == 1) return ExpPoly(1L);
      if (r != ctx_.radicand) {
        throw RadicandMismatch("sqrt(" + r.get_str() + ") at offset " + std::to_string(arg_start) +
                               " does not match the context radicand " + std::to_string(ctx_.radicand));
      }
      return ExpPoly(QScalar::sqrt_of(ctx_.radicand));
    }
    if (accept_word("i")) return ExpPoly(QScalar::imag_unit());
    if (accept_word("z")) return ExpPoly::z();
    fail(std::string("unexpected character '") + c + "'", start, start + 1);
  }

  std::string_view text_;
  ScalarContext ctx_;
  std::size_t pos_ = 0;
};

/// One printed summand: sign kept apart so sums can join with " + " / " - ".
struct Piece {
  bool negative = false;
  std::string body;
};

inline std::string join_pieces(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k == 0) {
      out += pieces[k].negative ? "-" : "";
    } else {
      out += pieces[k].negative ? " - " : " + ";
    }
    out += pieces[k].body;
  }
  return out;
}

inline std::vector<Piece> scalar_pieces(const QScalar& x) {
  std::vector<Piece> out;
  const std::string root = "sqrt(" + std::to_string(x.radicand()) + ")";
  auto push = [&](const Rational& c, const std::string& unit) {
    if (sgn(c) == 0) return;
    const Rational mag = abs(c);
    std::string body;
    if (unit.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = unit;
    } else {
      body = mag.get_str() + "*" + unit;
    }
    out.push_back({sgn(c) < 0, body});
  };
  push(x.a_re(), "");
  push(x.a_im(), "i");
  push(x.b_re(), root);
  push(x.b_im(), root + "*i");
  return out;
}

/// coefficient * rest, where rest is a product of non-scalar factors (may be empty).
inline Piece scaled_piece(const QScalar& c, const std::string& rest) {
  const auto parts = scalar_pieces(c);
  if (parts.size() == 1) {
    const Piece& p = parts.front();
    if (rest.empty()) return p;
    if (p.body == "1") return {p.negative, rest};
    return {p.negative, p.body + "*" + rest};
  }
  const std::string s = "(" + join_pieces(parts) + ")";
  return {false, rest.empty() ? s : s + "*" + rest};
}

inline std::string power_of_z(int k) {
  if (k == 0) return "";
  if (k == 1) return "z";
  return "z^" + std::to_string(k);
}

inline std::vector<Piece> poly_pieces(const Poly& p, bool descending) {
  std::vector<Piece> out;
  const int n = static_cast<int>(p.coefficients().size());
  for (int t = 0; t < n; ++t) {
    const int k = descending ? n - 1 - t : t;
    const QScalar& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    out.push_back(scaled_piece(c, power_of_z(k)));
  }
  return out;
}

/// Terms in canonical print order, following the normalized-view band order recursively.
inline void ordered_terms(const ExpPoly& f, const Poly& shift, std::vector<ExpTerm>& out) {
  if (f.is_zero()) return;
  if (f.is_polynomial()) {
    out.push_back({f.polynomial_part(), shift});
    return;
  }
  const NormalizedView view = normalize(f);
  ordered_terms(view.f0, shift, out);
  for (const auto& b : view.bands) ordered_terms(b.multiplier, shift + Poly::monomial(b.w, view.q), out);
}

}  // namespace detail

inline ExpPoly parse_expoly(std::string_view text, const ScalarContext& ctx = {}) {
  return detail::Parser(text, ctx).parse_all();
}

inline QScalar parse_scalar(std::string_view text, const ScalarContext& ctx = {}) {
  const ExpPoly f = parse_expoly(text, ctx);
  if (!f.is_constant()) throw SyntaxError("expected a constant", SourceSpan{0, text.size()});
  return f.polynomial_part().coeff(0);
}

inline Poly parse_poly(std::string_view text, const ScalarContext& ctx = {}) {
  const ExpPoly f = parse_expoly(text, ctx);
  if (!f.is_polynomial()) throw SyntaxError("expected a polynomial", SourceSpan{0, text.size()});
  return f.polynomial_part();
}

inline std::string to_string(const QScalar& x) { return detail::join_pieces(detail::scalar_pieces(x)); }

/// Ascending powers by default; exponents inside exp(...) print descending.
inline std::string to_string(const Poly& p, bool descending = false) {
  return detail::join_pieces(detail::poly_pieces(p, descending));
}

namespace detail {

inline std::vector<Piece> expoly_pieces(const ExpPoly& f) {
  std::vector<ExpTerm> terms;
  ordered_terms(f, Poly{}, terms);
  std::vector<Piece> pieces;
  for (const auto& t : terms) {
    if (t.exponent.is_zero()) {
      for (auto& p : poly_pieces(t.multiplier, false)) pieces.push_back(std::move(p));
      continue;
    }
    const std::string e = "exp(" + to_string(t.exponent, true) + ")";
    if (t.multiplier.term_count() == 1) {
      const int k = t.multiplier.degree();
      const std::string z = power_of_z(k);
      pieces.push_back(scaled_piece(t.multiplier.coeff(k), z.empty() ? e : z + "*" + e));
    } else {
      pieces.push_back({false, "(" + to_string(t.multiplier) + ")*" + e});
    }
  }
  return pieces;
}

}  // namespace detail

inline std::string print_expoly(const ExpPoly& f) { return detail::join_pieces(detail::expoly_pieces(f)); }

inline std::string to_string(const ExpPoly& f) { return print_expoly(f); }

inline std::string derivative_symbol(int k) {
  if (k == 0) return "f";
  if (k <= 3) return "f" + std::string(static_cast<std::size_t>(k), '\'');
  return "f^(" + std::to_string(k) + ")";
}

/// "f'' + (A)*f' + (B)*f = 0", highest derivative first, zero coefficients omitted.
inline std::string print_equation(const LinearODE& eq) {
  std::vector<detail::Piece> pieces;
  for (int k = eq.order(); k >= 0; --k) {
    const ExpPoly& a = eq.coeff(k);
    if (a.is_zero()) continue;
    const std::string d = derivative_symbol(k);
    auto parts = detail::expoly_pieces(a);
    if (parts.size() == 1) {
      const auto& p = parts.front();
      pieces.push_back({p.negative, p.body == "1" ? d : p.body + "*" + d});
    } else {
      pieces.push_back({false, "(" + detail::join_pieces(parts) + ")*" + d});
    }
  }
  return detail::join_pieces(pieces) + " = 0";
}

}  // namespace expoly
