#pragma once

// Generators for named equation families. Every generator verifies its
// (equation, solution) pair exactly before returning it.

#include <string>
#include <utility>
#include <vector>

#include "expoly/ode.hpp"

namespace expoly {

struct EquationWithSolution {
  LinearODE equation;
  ExpPoly solution;
};

namespace detail {

inline void require_solution(const LinearODE& eq, const ExpPoly& f, const std::string& family) {
  if (!residual(eq, f).is_zero()) {
    throw InternalInconsistency(family + ": generated solution has a nonzero residual");
  }
}

inline Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline ExpPoly exp_zq(const QScalar& w, int q) { return ExpPoly::exp(Poly::monomial(w, q)); }

inline ExpPoly z_pow(const QScalar& c, int k) { return k < 0 ? ExpPoly{} : ExpPoly(Poly::monomial(c, k)); }

}  // namespace detail

/// f'' + e^{-z} f' - m^2 f = 0 with solution 1 + sum_j C_j e^{jz}.
struct FreiFamily {
  int m = 0;
  QScalar alpha;
  std::vector<QScalar> coefficients;  // C_1 .. C_m
  LinearODE equation;
  ExpPoly solution;
};

/// C_1 = m^2, (m^2 - j^2) C_j = (j + 1) C_{j+1}.
inline std::vector<QScalar> frei_coefficients_recursive(int m) {
  std::vector<QScalar> c;
  const long m2 = static_cast<long>(m) * m;
  c.emplace_back(m2);
  for (long j = 1; j < m; ++j) {
    c.push_back(QScalar(m2 - j * j) * c.back() / QScalar(j + 1));
  }
  return c;
}

/// C_j = (1/j!) prod_{k=0}^{j-1} (m^2 - k^2).
inline std::vector<QScalar> frei_coefficients_closed(int m) {
  std::vector<QScalar> c;
  const long m2 = static_cast<long>(m) * m;
  for (long j = 1; j <= m; ++j) {
    Integer prod = 1;
    Integer fact = 1;
    for (long k = 0; k < j; ++k) {
      prod *= Integer(m2 - k * k);
      fact *= Integer(k + 1);
    }
    c.emplace_back(make_rational(prod, fact));
  }
  return c;
}

inline FreiFamily frei(int m) {
  if (m < 1) throw InvalidParameter("frei: m must be a positive integer");
  auto coeffs = frei_coefficients_recursive(m);
  if (coeffs != frei_coefficients_closed(m)) {
    throw InternalInconsistency("frei: recursion and closed form disagree");
  }
  const QScalar alpha(-static_cast<long>(m) * m);
  ExpPoly f(1L);
  for (int j = 1; j <= m; ++j) f += coeffs[static_cast<std::size_t>(j - 1)] * detail::exp_zq(QScalar(static_cast<long>(j)), 1);
  LinearODE eq = LinearODE::second_order(detail::exp_zq(QScalar(-1L), 1), ExpPoly(alpha));
  detail::require_solution(eq, f, "frei");
  return {m, alpha, std::move(coeffs), std::move(eq), std::move(f)};
}

/// A = (b/c) P - w + P e^{-wz}, B = -(wb/c) P, f = c + b e^{wz}.
inline EquationWithSolution one_term_family(const QScalar& c, const QScalar& b, const QScalar& w, const Poly& p) {
  if (c.is_zero() || b.is_zero() || w.is_zero()) throw InvalidParameter("one_term_family: c, b, w must be nonzero");
  if (p.is_zero()) throw InvalidParameter("one_term_family: P must be a nonzero polynomial");
  const ExpPoly pe(p);
  ExpPoly a = (b / c) * pe - ExpPoly(w) + pe * detail::exp_zq(-w, 1);
  ExpPoly bb = (-(w * b) / c) * pe;
  ExpPoly f = ExpPoly(c) + b * detail::exp_zq(w, 1);
  LinearODE eq = LinearODE::second_order(std::move(a), std::move(bb));
  detail::require_solution(eq, f, "one_term_family");
  return {std::move(eq), std::move(f)};
}

/// f'' + (P_1 + P_2 e^{-wz}) f' - P f = 0 solved by 1 + b e^{wz}, with P_1 = P/w - w and P_2 = P/(bw).
inline LinearODE intro_one_term_family(const QScalar& b, const QScalar& w, const Poly& p) {
  if (b.is_zero() || w.is_zero()) throw InvalidParameter("intro_one_term_family: b, w must be nonzero");
  if (p.is_zero()) throw InvalidParameter("intro_one_term_family: P must be a nonzero polynomial");
  const ExpPoly pe(p);
  const ExpPoly p1 = w.inverse() * pe - ExpPoly(w);
  const ExpPoly p2 = (b * w).inverse() * pe;
  LinearODE eq = LinearODE::second_order(p1 + p2 * detail::exp_zq(-w, 1), -pe);
  detail::require_solution(eq, ExpPoly(1L) + b * detail::exp_zq(w, 1), "intro_one_term_family");
  return eq;
}

/// Polynomial tables for f = e^{z^q} + 1:
///   (i)  (1 + e^{-z^q}) f^{(j+1)} = sum_{k=0}^{j} P_{j,k} f^{(k)}
///   (ii) f^{(q+1)} = sum_{l=1}^{q} Q_l f^{(l)}
struct TohgeTables {
  int q = 0;
  std::vector<std::vector<Poly>> p;  // p[j][k], 0 <= k <= j <= q
  std::vector<Poly> q_list;          // q_list[l - 1] = Q_l
  std::vector<std::pair<int, int>> zero_entries;

  [[nodiscard]] const Poly& P(int j, int k) const {
    return p.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k));
  }
  [[nodiscard]] const Poly& Q(int l) const { return q_list.at(static_cast<std::size_t>(l - 1)); }
};

/// Identity (i) residual: (1 + e^{-z^q}) f^{(j+1)} - sum_k P_{j,k} f^{(k)}.
inline ExpPoly tohge_identity_i(const TohgeTables& t, int j) {
  const ExpPoly f = detail::exp_zq(QScalar(1L), t.q) + ExpPoly(1L);
  const ExpPoly weight = ExpPoly(1L) + detail::exp_zq(QScalar(-1L), t.q);
  ExpPoly acc = weight * f.derivative(j + 1);
  for (int k = 0; k <= j; ++k) acc -= ExpPoly(t.P(j, k)) * f.derivative(k);
  return acc;
}

/// Identity (ii) residual: f^{(q+1)} - sum_l Q_l f^{(l)}.
inline ExpPoly tohge_identity_ii(const TohgeTables& t) {
  const ExpPoly f = detail::exp_zq(QScalar(1L), t.q) + ExpPoly(1L);
  ExpPoly acc = f.derivative(t.q + 1);
  for (int l = 1; l <= t.q; ++l) acc -= ExpPoly(t.Q(l)) * f.derivative(l);
  return acc;
}

inline TohgeTables tohge_tables(int q) {
  if (q < 1) throw InvalidParameter("tohge_tables: q must be >= 1");
  TohgeTables t;
  t.q = q;
  const Poly lin = Poly::monomial(QScalar(static_cast<long>(q)), q - 1);  // q z^{q-1}
  t.p.push_back({lin});
  for (int j = 0; j < q; ++j) {
    const auto& prev = t.p.back();
    std::vector<Poly> next(static_cast<std::size_t>(j) + 2);
    next[0] = prev[0].derivative() + lin * prev[0];
    for (int k = 1; k <= j; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      next[ku] = prev[ku].derivative() + lin * prev[ku] + prev[ku - 1];
    }
    next[static_cast<std::size_t>(j) + 1] = prev[static_cast<std::size_t>(j)] - lin;
    t.p.push_back(std::move(next));
  }
  // Q_l = -C(q, l-1) (e^{-z^q})^{(q-l+1)} e^{z^q}.
  const ExpPoly decay = detail::exp_zq(QScalar(-1L), q);
  const ExpPoly grow = detail::exp_zq(QScalar(1L), q);
  for (int l = 1; l <= q; ++l) {
    const ExpPoly ql = QScalar(-Rational(detail::binomial(q, l - 1))) * (decay.derivative(q - l + 1) * grow);
    t.q_list.push_back(ql.as_poly());
  }
  for (int j = 0; j <= q; ++j) {
    for (int k = 0; k <= j; ++k) {
      if (t.P(j, k).is_zero()) t.zero_entries.emplace_back(j, k);
    }
  }
  for (int j = 0; j <= q; ++j) {
    if (!tohge_identity_i(t, j).is_zero()) {
      throw InternalInconsistency("tohge_tables: identity (i) fails at j = " + std::to_string(j));
    }
  }
  if (!tohge_identity_ii(t).is_zero()) throw InternalInconsistency("tohge_tables: identity (ii) fails");
  return t;
}

/// Order q+1 equation solved by e^{z^q} + 1, coupling identity (ii) to H times identity (i) at j - 1:
///   f^{(q+1)} - sum_{l>j} Q_l f^{(l)} - ((1 + e^{-z^q}) H + Q_j) f^{(j)}
///     + sum_{l=1}^{j-1} (P_{j-1,l} H - Q_l) f^{(l)} + P_{j-1,0} H f = 0.
inline LinearODE tohge_equation(int q, int j, const ExpPoly& h) {
  if (q < 1 || j < 1 || j > q) throw InvalidParameter("tohge_equation: need 1 <= j <= q");
  if (h.is_zero()) throw InvalidParameter("tohge_equation: H must be nonzero");
  const TohgeTables t = tohge_tables(q);
  std::vector<ExpPoly> by_order(static_cast<std::size_t>(q) + 2);
  by_order[static_cast<std::size_t>(q) + 1] = ExpPoly(1L);
  for (int l = j + 1; l <= q; ++l) by_order[static_cast<std::size_t>(l)] = -ExpPoly(t.Q(l));
  by_order[static_cast<std::size_t>(j)] =
      -((ExpPoly(1L) + detail::exp_zq(QScalar(-1L), q)) * h + ExpPoly(t.Q(j)));
  for (int l = 1; l < j; ++l) {
    by_order[static_cast<std::size_t>(l)] = ExpPoly(t.P(j - 1, l)) * h - ExpPoly(t.Q(l));
  }
  by_order[0] = ExpPoly(t.P(j - 1, 0)) * h;
  LinearODE eq(std::move(by_order));
  detail::require_solution(eq, detail::exp_zq(QScalar(1L), q) + ExpPoly(1L), "tohge_equation");
  return eq;
}

/// f'' + (H - q z^{q-1}) f' - (q(q-1) z^{q-2} + q z^{q-1} H) f = 0 with f = e^{z^q}.
inline EquationWithSolution single_band_family(int q, const ExpPoly& h) {
  if (q < 1) throw InvalidParameter("single_band_family: q must be >= 1");
  const QScalar qs(static_cast<long>(q));
  const ExpPoly lin = detail::z_pow(qs, q - 1);
  const ExpPoly a = h - lin;
  const ExpPoly b = -(detail::z_pow(qs * QScalar(static_cast<long>(q - 1)), q - 2) + lin * h);
  LinearODE eq = LinearODE::second_order(a, b);
  ExpPoly f = detail::exp_zq(QScalar(1L), q);
  detail::require_solution(eq, f, "single_band_family");
  return {std::move(eq), std::move(f)};
}

/// f = (e^z + e^{-z}) e^{z^q} with
///   A = H e^z + H e^{-z} - 2q z^{q-1},
///   B = -((q z^{q-1} + 1) H e^z + (q z^{q-1} - 1) H e^{-z} - q^2 z^{2(q-1)} + q(q-1) z^{q-2} + 1).
inline EquationWithSolution cosh_band_family(int q, const ExpPoly& h) {
  if (q < 1) throw InvalidParameter("cosh_band_family: q must be >= 1");
  const QScalar qs(static_cast<long>(q));
  const ExpPoly ez = detail::exp_zq(QScalar(1L), 1);
  const ExpPoly emz = detail::exp_zq(QScalar(-1L), 1);
  const ExpPoly lin = detail::z_pow(qs, q - 1);
  const ExpPoly a = h * ez + h * emz - QScalar(2L) * lin;
  const ExpPoly b = -((lin + ExpPoly(1L)) * h * ez + (lin - ExpPoly(1L)) * h * emz -
                      detail::z_pow(qs * qs, 2 * (q - 1)) +
                      detail::z_pow(qs * QScalar(static_cast<long>(q - 1)), q - 2) + ExpPoly(1L));
  LinearODE eq = LinearODE::second_order(a, b);
  ExpPoly f = (ez + emz) * detail::exp_zq(QScalar(1L), q);
  detail::require_solution(eq, f, "cosh_band_family");
  return {std::move(eq), std::move(f)};
}

}  // namespace expoly
