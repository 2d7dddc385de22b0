#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "expoly/poly.hpp"

namespace expoly {

/// One summand multiplier * e^{exponent}; the exponent has zero constant term.
struct ExpTerm {
  Poly multiplier;
  Poly exponent;
};

/// Canonical finite sum of ExpTerms with pairwise distinct exponents.
///
/// Terms are keyed by their full exponent polynomial. A constant e^{c} cannot
/// be represented exactly, so exponents must have zero constant term; the
/// zero function is the empty sum.
class ExpPoly {
 public:
  using TermMap = std::map<Poly, Poly, PolyLess>;

  ExpPoly() = default;
  ExpPoly(const Poly& p) { add_term(p, Poly{}); }          // NOLINT(google-explicit-constructor)
  ExpPoly(const QScalar& c) : ExpPoly(Poly(c)) {}          // NOLINT(google-explicit-constructor)
  ExpPoly(long c) : ExpPoly(Poly(c)) {}                    // NOLINT(google-explicit-constructor)

  static ExpPoly z() { return ExpPoly(Poly::z()); }

  /// multiplier * e^{exponent}. Throws InvalidParameter if exponent(0) != 0.
  static ExpPoly term(const Poly& multiplier, const Poly& exponent) {
    ExpPoly f;
    f.add_term(multiplier, exponent);
    return f;
  }
  static ExpPoly exp(const Poly& exponent) { return term(Poly(1), exponent); }

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }

  [[nodiscard]] std::vector<ExpTerm> term_list() const {
    std::vector<ExpTerm> out;
    out.reserve(terms_.size());
    for (const auto& [e, m] : terms_) out.push_back({m, e});
    return out;
  }

  /// Multiplier of e^{exponent}; zero if absent.
  [[nodiscard]] Poly multiplier_of(const Poly& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Poly{} : it->second;
  }

  /// Max exponent degree; 0 for polynomials and the zero function.
  [[nodiscard]] int order() const {
    int q = 0;
    for (const auto& [e, m] : terms_) q = std::max(q, e.is_zero() ? 0 : e.degree());
    return q;
  }

  [[nodiscard]] bool is_polynomial() const { return order() == 0; }
  [[nodiscard]] bool is_transcendental() const { return order() > 0; }

  /// The polynomial part (multiplier of e^0).
  [[nodiscard]] Poly polynomial_part() const { return multiplier_of(Poly{}); }

  /// Throws InvalidParameter unless this is a polynomial.
  [[nodiscard]] Poly as_poly() const {
    if (!is_polynomial()) throw InvalidParameter("expected a polynomial");
    return polynomial_part();
  }

  [[nodiscard]] bool is_constant() const { return is_polynomial() && polynomial_part().is_constant(); }

  friend ExpPoly operator+(const ExpPoly& f, const ExpPoly& g) {
    ExpPoly h = f;
    for (const auto& [e, m] : g.terms_) h.add_term(m, e);
    return h;
  }
  friend ExpPoly operator-(const ExpPoly& f) {
    ExpPoly h;
    for (const auto& [e, m] : f.terms_) h.terms_.emplace(e, -m);
    return h;
  }
  friend ExpPoly operator-(const ExpPoly& f, const ExpPoly& g) { return f + (-g); }
  friend ExpPoly operator*(const ExpPoly& f, const ExpPoly& g) {
    ExpPoly h;
    for (const auto& [e1, m1] : f.terms_) {
      for (const auto& [e2, m2] : g.terms_) h.add_term(m1 * m2, e1 + e2);
    }
    return h;
  }
  friend ExpPoly operator*(const QScalar& c, const ExpPoly& f) {
    ExpPoly h;
    if (c.is_zero()) return h;
    for (const auto& [e, m] : f.terms_) h.terms_.emplace(e, c * m);
    return h;
  }

  ExpPoly& operator+=(const ExpPoly& g) {
    for (const auto& [e, m] : g.terms_) add_term(m, e);
    return *this;
  }
  ExpPoly& operator-=(const ExpPoly& g) { return *this += -g; }
  ExpPoly& operator*=(const ExpPoly& g) { return *this = *this * g; }

  friend bool operator==(const ExpPoly& f, const ExpPoly& g) {
    if (f.terms_.size() != g.terms_.size()) return false;
    auto it = g.terms_.begin();
    for (const auto& [e, m] : f.terms_) {
      if (!(e == it->first) || !(m == it->second)) return false;
      ++it;
    }
    return true;
  }

  [[nodiscard]] ExpPoly pow(unsigned n) const {
    ExpPoly acc(1L);
    for (unsigned k = 0; k < n; ++k) acc *= *this;
    return acc;
  }

  /// Term-wise (P e^Q)' = (P' + P Q') e^Q; vanishing multipliers are dropped.
  [[nodiscard]] ExpPoly derivative() const {
    ExpPoly h;
    for (const auto& [e, m] : terms_) h.add_term(m.derivative() + m * e.derivative(), e);
    return h;
  }

  [[nodiscard]] ExpPoly derivative(int k) const {
    ExpPoly h = *this;
    for (int i = 0; i < k; ++i) h = h.derivative();
    return h;
  }

  /// Sum of P_i(z0) exp(Q_i(z0)) in double precision.
  [[nodiscard]] std::complex<double> evaluate(std::complex<double> z0) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, m] : terms_) acc += m.evaluate(z0) * std::exp(e.evaluate(z0));
    return acc;
  }

  /// Merges multiplier * e^{exponent} into the sum.
  void add_term(const Poly& multiplier, const Poly& exponent) {
    if (!exponent.coeff(0).is_zero()) {
      throw InvalidParameter("exponent polynomial must have zero constant term");
    }
    if (multiplier.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, multiplier);
    if (!inserted) {
      it->second += multiplier;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  TermMap terms_;
};

inline ExpPoly differentiate(const ExpPoly& f) { return f.derivative(); }
inline int order(const ExpPoly& f) { return f.order(); }
inline std::complex<double> evaluate(const ExpPoly& f, std::complex<double> z0) { return f.evaluate(z0); }

/// Primitive of an order <= 1 exponential polynomial, integration constant 0.
///
/// For w != 0:  int z^n e^{wz} dz = ( z^n / w + sum_{v<n} (-1)^{n-v} n! / (w^{n-v+1} v!) z^v ) e^{wz}.
inline ExpPoly antiderivative_exp1(const ExpPoly& f) {
  if (f.order() > 1) {
    throw OrderTooHigh("antiderivative is only available in Exp_1; order is " + std::to_string(f.order()));
  }
  ExpPoly out;
  for (const auto& [e, m] : f.terms()) {
    if (e.is_zero()) {
      out.add_term(m.integral(), Poly{});
      continue;
    }
    const QScalar w = e.coeff(1);
    const QScalar w_inv = w.inverse();
    Poly prim;
    const auto& cs = m.coefficients();
    for (int n = 0; n < static_cast<int>(cs.size()); ++n) {
      const QScalar& c = cs[static_cast<std::size_t>(n)];
      if (c.is_zero()) continue;
      std::vector<QScalar> v(static_cast<std::size_t>(n) + 1);
      v[static_cast<std::size_t>(n)] = c * w_inv;
      // (-1)^{n-v} n!/v! / w^{n-v+1}, built downwards from v = n-1.
      QScalar factor = w_inv;
      for (int nu = n - 1; nu >= 0; --nu) {
        factor = -factor * QScalar(static_cast<long>(nu + 1)) * w_inv;
        v[static_cast<std::size_t>(nu)] = c * factor;
      }
      prim += Poly(std::move(v));
    }
    out.add_term(prim, e);
  }
  return out;
}

}  // namespace expoly
