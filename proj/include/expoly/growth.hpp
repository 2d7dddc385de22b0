#pragma once

// Leading-order Nevanlinna asymptotics of exponential polynomials, read off
// the convex hull of the conjugated frequencies:
//
//   T(r, f) = C(co(W_f u {0})) r^q / (2 pi) + o(r^q)
//   m(r, f/g) = (C(co(W_h)) - C(co(W_g))) r^q / (2 pi) + o(r^q)
//   N(r, 0, f) = C(co(W_f)) r^q / (2 pi) + o(r^q)
//
// where C is the circumference (twice the length for a segment).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <set>
#include <vector>

#include "expoly/normalize.hpp"

namespace expoly {

/// Conjugated band frequencies of f, plus whether 0 belongs to W_f (F_0 not identically zero).
struct FrequencySet {
  std::vector<QScalar> points;
  bool includes_zero = false;

  /// Points with 0 added when includes_zero.
  [[nodiscard]] std::vector<QScalar> with_zero_if_present() const {
    auto v = points;
    if (includes_zero) v.emplace_back(0L);
    return v;
  }
  /// W^0 = W u {0}.
  [[nodiscard]] std::vector<QScalar> with_zero() const {
    auto v = points;
    v.emplace_back(0L);
    return v;
  }
};

inline FrequencySet frequency_set(const ExpPoly& f) {
  const NormalizedView view = normalize(f);
  FrequencySet out;
  out.includes_zero = !view.f0.is_zero();
  for (const auto& b : view.bands) out.points.push_back(b.w.conj());
  return out;
}

struct Hull {
  std::vector<std::complex<double>> vertices;  // counterclockwise
  double circumference = 0.0;
};

/// Convex hull (monotone chain) and its perimeter; a segment counts twice.
inline Hull hull(std::vector<std::complex<double>> pts) {
  if (pts.empty()) throw InvalidParameter("hull of an empty point set");
  auto less = [](const std::complex<double>& a, const std::complex<double>& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Hull h;
  if (pts.size() == 1) {
    h.vertices = pts;
    return h;
  }
  auto cross = [](const std::complex<double>& o, const std::complex<double>& a, const std::complex<double>& b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
  };
  // Tolerance for collinearity relative to the point spread.
  double spread = 0.0;
  for (const auto& p : pts) spread = std::max(spread, std::abs(p - pts.front()));
  const double eps = 1e-12 * spread * spread;
  std::vector<std::complex<double>> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], p) <= eps) --k;
    chain[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(chain[k - 2], chain[k - 1], pts[i]) <= eps) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);
  h.vertices = std::move(chain);
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    h.circumference += std::abs(h.vertices[(i + 1) % h.vertices.size()] - h.vertices[i]);
  }
  return h;
}

/// Hull of exact points, deduplicated exactly before going to floating point.
inline Hull hull(const std::vector<QScalar>& exact_points) {
  std::set<QScalar, QScalarLess> unique(exact_points.begin(), exact_points.end());
  std::vector<std::complex<double>> pts;
  pts.reserve(unique.size());
  for (const auto& p : unique) pts.push_back(p.to_complex());
  return hull(std::move(pts));
}

/// value(r) = leading * r^q + o(r^q); for polynomial inputs of degree d, value = d log r.
struct GrowthAsymptotic {
  int q = 0;
  double leading = 0.0;
  std::optional<int> degenerate_log;
};

inline GrowthAsymptotic characteristic_asymptotic(const ExpPoly& f) {
  if (!f.is_transcendental()) {
    const Poly p = f.polynomial_part();
    return {0, 0.0, p.is_zero() ? 0 : p.degree()};
  }
  const FrequencySet w = frequency_set(f);
  return {f.order(), hull(w.with_zero()).circumference / (2 * std::numbers::pi), std::nullopt};
}

/// m(r, f/g). W_h is the union of the band frequencies of f and g, with 0 when
/// either polynomial-order part is nonzero. A polynomial g contributes W_g = {0}.
inline GrowthAsymptotic proximity_quotient_asymptotic(const ExpPoly& f, const ExpPoly& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (!f.is_transcendental() && !g.is_transcendental()) return {0, 0.0, std::nullopt};
  if (f.is_transcendental() && g.is_transcendental() && f.order() != g.order()) {
    throw OrderMismatch("quotient numerator and denominator have orders " + std::to_string(f.order()) +
                        " and " + std::to_string(g.order()));
  }
  const int q = std::max(f.order(), g.order());
  FrequencySet wf;
  if (f.is_transcendental()) {
    wf = frequency_set(f);
  } else {
    wf.includes_zero = !f.is_zero();
  }
  FrequencySet wg;
  if (g.is_transcendental()) {
    wg = frequency_set(g);
  } else {
    wg.includes_zero = true;
  }
  std::vector<QScalar> wh = wf.points;
  wh.insert(wh.end(), wg.points.begin(), wg.points.end());
  if (wf.includes_zero || wg.includes_zero) wh.emplace_back(0L);
  const double c_h = hull(wh).circumference;
  const auto g_pts = wg.with_zero_if_present();
  const double c_g = hull(g_pts).circumference;
  return {q, std::max(0.0, (c_h - c_g) / (2 * std::numbers::pi)), std::nullopt};
}

inline GrowthAsymptotic zero_counting_asymptotic(const ExpPoly& f) {
  if (f.is_zero()) throw InvalidParameter("the zero function has no zero-counting function");
  if (!f.is_transcendental()) return {0, 0.0, f.polynomial_part().degree()};
  const FrequencySet w = frequency_set(f);
  return {f.order(), hull(w.with_zero_if_present()).circumference / (2 * std::numbers::pi), std::nullopt};
}

/// True when leading-order data certifies T(r, b) = o(T(r, a)).
inline bool dominates(const ExpPoly& a, const ExpPoly& b) {
  if (!a.is_transcendental()) return false;
  return b.order() < a.order();
}

}  // namespace expoly
