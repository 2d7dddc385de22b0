#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "expoly/normalize.hpp"
#include "expoly/ode.hpp"

namespace expoly {

/// A simple exponential polynomial's ray, witnessed by its first band frequency.
struct RayInfo {
  QScalar direction;
  double theta_float = 0.0;
};

namespace detail {

inline std::vector<QScalar> band_frequencies(const ExpPoly& f) {
  const NormalizedView view = normalize(f);
  std::vector<QScalar> w;
  w.reserve(view.bands.size());
  for (const auto& b : view.bands) w.push_back(b.w);
  return w;
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Largest w with every frequency a positive-integer multiple of w, if the
/// ratios to `base` are all positive rationals.
inline std::optional<QScalar> canonical_factor(const QScalar& base, const std::vector<QScalar>& freqs) {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& w : freqs) {
    const QScalar ratio = w / base;
    if (!ratio.is_rational() || sgn(ratio.a_re()) <= 0) return std::nullopt;
    num_gcd = gcd_int(num_gcd, ratio.a_re().get_num());
    den_lcm = lcm_int(den_lcm, ratio.a_re().get_den());
  }
  return base * QScalar(make_rational(num_gcd, den_lcm));
}

}  // namespace detail

inline std::optional<RayInfo> is_simple(const ExpPoly& f) {
  const auto w = detail::band_frequencies(f);
  for (const auto& wj : w) {
    if (!is_positive_real(wj / w.front())) return std::nullopt;
  }
  return RayInfo{w.front(), frequency_angle(w.front())};
}

/// Canonical (largest) common factor of a simple exponential polynomial; absent if not commensurable.
inline std::optional<QScalar> common_factor(const ExpPoly& f) {
  if (!is_simple(f)) throw NotSimple();
  const auto w = detail::band_frequencies(f);
  return detail::canonical_factor(w.front(), w);
}

inline bool are_dual(const ExpPoly& f, const ExpPoly& g) {
  if (!f.is_transcendental() || !g.is_transcendental()) throw NotTranscendental();
  if (f.order() != g.order()) return false;
  const auto rf = is_simple(f);
  const auto rg = is_simple(g);
  if (!rf || !rg) return false;
  for (const auto& lam : detail::band_frequencies(g)) {
    if (!is_positive_real(-lam / rf->direction)) return false;
  }
  return true;
}

/// Dual, commensurable with one shared factor w (f on w, g on -w), and the sums
/// w_j + lambda_i all on one closed ray through the origin.
inline bool are_strongly_dual(const ExpPoly& f, const ExpPoly& g) {
  if (!are_dual(f, g)) return false;
  const auto wf = detail::band_frequencies(f);
  const auto wg = detail::band_frequencies(g);
  std::vector<QScalar> all = wf;
  for (const auto& lam : wg) all.push_back(-lam);
  const auto w = detail::canonical_factor(wf.front(), all);
  if (!w) return false;
  auto index = [&](const QScalar& x) { return (x / *w).a_re(); };
  Rational min_a = index(wf.front()), max_a = min_a;
  for (const auto& x : wf) {
    min_a = std::min(min_a, index(x));
    max_a = std::max(max_a, index(x));
  }
  Rational min_b = index(-wg.front()), max_b = min_b;
  for (const auto& x : wg) {
    min_b = std::min(min_b, index(-x));
    max_b = std::max(max_b, index(-x));
  }
  return min_a >= max_b || max_a <= min_b;
}

enum class BorelCase { CaseI, CaseII, Both, Neither };

inline std::string to_string(BorelCase c) {
  switch (c) {
    case BorelCase::CaseI: return "I";
    case BorelCase::CaseII: return "II";
    case BorelCase::Both: return "I+II";
    case BorelCase::Neither: return "none";
  }
  return "?";
}

/// Classification of one product frequency w_j - lambda_i.
struct BorelEntry {
  std::size_t j = 0;  // 1-based, into w_list
  std::size_t i = 0;  // 1-based, into lambda_list
  QScalar frequency;  // w_j - lambda_i
  BorelCase tag = BorelCase::Neither;
};

/// Structural facts about a solution f of f'' + A f' + B f = 0 with f, A transcendental.
struct DualityReport {
  int q = 0;
  std::vector<QScalar> w_list;       // frequencies of f, increasing along the ray
  std::vector<QScalar> lambda_list;  // lambda_i with A = A_0 + sum A_i e^{-lambda_i z^q}, increasing
  QScalar c;
  bool ordering_ok = false;
  bool b_relation_ok = false;
  bool top_identity_ok = false;
  bool fm_equation_ok = false;
  std::vector<BorelEntry> borel_classification;

  [[nodiscard]] bool all_ok() const { return ordering_ok && b_relation_ok && top_identity_ok && fm_equation_ok; }
};

inline DualityReport duality_structure_report(const ExpPoly& a, const ExpPoly& b, const ExpPoly& f) {
  if (!f.is_transcendental() || !a.is_transcendental()) throw NotTranscendental();
  const LinearODE eq = LinearODE::second_order(a, b);
  if (!residual(eq, f).is_zero()) throw NotASolution("f does not solve f'' + A f' + B f = 0");

  const NormalizedView vf = normalize(f);
  if (!vf.f0.is_constant() || vf.f0.is_zero()) {
    throw ConstantTermMissing("the order < q part of f must be a nonzero constant");
  }
  DualityReport rep;
  rep.q = vf.q;
  rep.c = vf.f0.polynomial_part().coeff(0);

  // Rotate by the witness direction so the frequencies of f become positive reals.
  const QScalar dir = vf.bands.front().w;
  auto rotated = [&](const QScalar& x) { return x / dir; };
  auto real_before = [&](const QScalar& x, const QScalar& y) {
    const QScalar rx = rotated(x), ry = rotated(y);
    if (rx.is_real() && ry.is_real()) return compare_real(rx, ry) < 0;
    return band_before(rx, ry);
  };

  std::vector<Band> f_bands = vf.bands;
  std::sort(f_bands.begin(), f_bands.end(), [&](const Band& x, const Band& y) { return real_before(x.w, y.w); });

  const NormalizedView va = normalize(a);
  std::vector<Band> a_bands;  // stored with lambda = -frequency
  for (const auto& band : va.bands) a_bands.push_back({-band.w, band.multiplier});
  std::sort(a_bands.begin(), a_bands.end(), [&](const Band& x, const Band& y) { return real_before(x.w, y.w); });

  for (const auto& band : f_bands) rep.w_list.push_back(band.w);
  for (const auto& band : a_bands) rep.lambda_list.push_back(band.w);

  bool ordering = va.q == vf.q;
  for (const auto& w : rep.w_list) ordering = ordering && is_positive_real(rotated(w));
  for (const auto& l : rep.lambda_list) ordering = ordering && is_positive_real(rotated(l));
  ordering = ordering && rep.lambda_list.back() == rep.w_list.front();
  rep.ordering_ok = ordering;

  const auto derivs = [&] {
    NormalizedView sorted = vf;
    sorted.bands = f_bands;
    return derivative_multipliers(sorted);
  }();
  const ExpPoly& g1 = derivs.front().g;
  const ExpPoly& gm = derivs.back().g;
  const ExpPoly& hm = derivs.back().h;
  const ExpPoly& fm = f_bands.back().multiplier;
  const QScalar wm = f_bands.back().w;
  const ExpPoly& a0 = va.f0;

  if (va.q == vf.q) {
    const ExpPoly& ak = a_bands.back().multiplier;
    rep.b_relation_ok = (-(ak * g1)) == rep.c * b;
  }
  rep.top_identity_ok = (a0 * gm + b * fm + hm).is_zero();

  // F_m'' + P F_m' + Q F_m = 0 with
  //   P = 2 w_m q z^{q-1} + A_0,
  //   Q = w_m q z^{q-1} A_0 + w_m q (q-1) z^{q-2} + w_m^2 q^2 z^{2(q-1)} + B.
  const int q = vf.q;
  const QScalar qs(static_cast<long>(q));
  const ExpPoly lin(Poly::monomial(wm * qs, q - 1));
  const ExpPoly p_coeff = QScalar(2L) * lin + a0;
  ExpPoly q_coeff = lin * a0 + ExpPoly(Poly::monomial(wm * wm * qs * qs, 2 * (q - 1))) + b;
  if (q >= 2) q_coeff += ExpPoly(Poly::monomial(wm * qs * QScalar(static_cast<long>(q - 1)), q - 2));
  rep.fm_equation_ok = residual(LinearODE::second_order(p_coeff, q_coeff), fm).is_zero();

  // Borel alternatives for each product frequency w_j - lambda_i:
  //   I:  equals w_l for some l in {0, ..., m-1} (w_0 = 0),
  //   II: equals w_s - lambda_t with s != j, t != i.
  const std::size_t m = rep.w_list.size();
  const std::size_t k = rep.lambda_list.size();
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const QScalar d = rep.w_list[j] - rep.lambda_list[i];
      bool case_one = d.is_zero();
      for (std::size_t l = 0; l + 1 < m && !case_one; ++l) case_one = d == rep.w_list[l];
      bool case_two = false;
      for (std::size_t s = 0; s < m && !case_two; ++s) {
        for (std::size_t t = 0; t < k && !case_two; ++t) {
          if (s != j && t != i) case_two = d == rep.w_list[s] - rep.lambda_list[t];
        }
      }
      BorelCase tag = BorelCase::Neither;
      if (case_one && case_two) {
        tag = BorelCase::Both;
      } else if (case_one) {
        tag = BorelCase::CaseI;
      } else if (case_two) {
        tag = BorelCase::CaseII;
      }
      rep.borel_classification.push_back({j + 1, i + 1, d, tag});
    }
  }
  return rep;
}

}  // namespace expoly
