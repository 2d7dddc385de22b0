#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "expoly/exppoly.hpp"

namespace expoly {

/// Angle of a frequency in [0, 2 pi).
inline double frequency_angle(const QScalar& w) {
  double a = std::arg(w.to_complex());
  if (a < 0) a += 2 * std::numbers::pi;
  if (a >= 2 * std::numbers::pi) a = 0;
  return a;
}

/// Deterministic band order: positive reals first, then by modulus, then angle,
/// then the structural order as a final tie-break.
inline bool band_before(const QScalar& a, const QScalar& b) {
  const bool pa = is_positive_real(a);
  const bool pb = is_positive_real(b);
  if (pa != pb) return pa;
  if (pa && pb) return compare_real(a, b) < 0;
  const double ma = std::abs(a.to_complex());
  const double mb = std::abs(b.to_complex());
  if (ma != mb) return ma < mb;
  const double aa = frequency_angle(a);
  const double ab = frequency_angle(b);
  if (aa != ab) return aa < ab;
  return compare_lex(a, b) < 0;
}

struct Band {
  QScalar w;
  ExpPoly multiplier;
};

/// f = f0 + sum_j F_j e^{w_j z^q}, with every F_j and f0 of order <= q - 1.
struct NormalizedView {
  int q = 0;
  ExpPoly f0;
  std::vector<Band> bands;

  [[nodiscard]] std::size_t m() const noexcept { return bands.size(); }

  [[nodiscard]] ExpPoly reconstruct() const {
    ExpPoly out = f0;
    for (const auto& b : bands) out += b.multiplier * ExpPoly::exp(Poly::monomial(b.w, q));
    return out;
  }

  friend bool operator==(const NormalizedView& x, const NormalizedView& y) {
    if (x.q != y.q || !(x.f0 == y.f0) || x.bands.size() != y.bands.size()) return false;
    for (std::size_t j = 0; j < x.bands.size(); ++j) {
      if (!(x.bands[j].w == y.bands[j].w) || !(x.bands[j].multiplier == y.bands[j].multiplier)) return false;
    }
    return true;
  }
};

inline NormalizedView normalize(const ExpPoly& f) {
  const int q = f.order();
  if (q == 0) throw NotTranscendental();
  NormalizedView view;
  view.q = q;
  std::map<QScalar, ExpPoly, QScalarLess> grouped;
  for (const auto& [e, m] : f.terms()) {
    const QScalar w = e.coeff(q);
    if (w.is_zero()) {
      view.f0.add_term(m, e);
    } else {
      grouped[w].add_term(m, e - Poly::monomial(w, q));
    }
  }
  for (auto& [w, F] : grouped) view.bands.push_back({w, std::move(F)});
  std::sort(view.bands.begin(), view.bands.end(),
            [](const Band& a, const Band& b) { return band_before(a.w, b.w); });
  return view;
}

/// Per band: G_j = F_j' + q w_j z^{q-1} F_j and H_j = G_j' + q w_j z^{q-1} G_j,
/// so that f' = sum G_j e^{w_j z^q} and f'' = sum H_j e^{w_j z^q}.
struct BandDerivatives {
  ExpPoly g;
  ExpPoly h;
};

inline std::vector<BandDerivatives> derivative_multipliers(const NormalizedView& view) {
  std::vector<BandDerivatives> out;
  out.reserve(view.bands.size());
  for (const auto& b : view.bands) {
    const ExpPoly shift(Poly::monomial(QScalar(static_cast<long>(view.q)) * b.w, view.q - 1));
    ExpPoly g = b.multiplier.derivative() + shift * b.multiplier;
    ExpPoly h = g.derivative() + shift * g;
    out.push_back({std::move(g), std::move(h)});
  }
  return out;
}

}  // namespace expoly
