#pragma once

// Random instance generators and the randomized property suites. The suites
// return the number of failing instances so both the GoogleTest wrappers and
// the acceptance binary can run them.

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "expoly/expoly.hpp"

namespace expoly::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int span = 5) { return make_rational(integer(-span, span), integer(1, 4)); }

  Rational nonzero_rational(int span = 5) {
    Rational x;
    do x = rational(span);
    while (sgn(x) == 0);
    return x;
  }

  /// Random element of Q(i)[sqrt(r)]; r = 1 gives Gaussian rationals.
  QScalar scalar(std::int64_t r = 1) {
    if (r == 1) return QScalar(rational(), coin() ? rational() : Rational(0));
    return QScalar::make(rational(), coin() ? rational() : Rational(0), coin() ? rational() : Rational(0),
                         coin() ? rational() : Rational(0), r);
  }

  QScalar nonzero_scalar(std::int64_t r = 1) {
    QScalar x;
    do x = scalar(r);
    while (x.is_zero());
    return x;
  }

  Poly poly(int max_degree, std::int64_t r = 1) {
    std::vector<QScalar> c;
    const int d = integer(0, max_degree);
    for (int k = 0; k <= d; ++k) c.push_back(coin() ? scalar(r) : QScalar{});
    return Poly(std::move(c));
  }

  Poly nonzero_poly(int max_degree, std::int64_t r = 1) {
    Poly p;
    do p = poly(max_degree, r);
    while (p.is_zero());
    return p;
  }

  /// Exponent with zero constant term, degree <= q, small Gaussian-integer coefficients.
  Poly exponent(int q) {
    std::vector<QScalar> c{QScalar{}};
    for (int k = 1; k <= q; ++k) {
      c.emplace_back(Rational(integer(-3, 3)), coin() ? Rational(integer(-2, 2)) : Rational(0));
    }
    return Poly(std::move(c));
  }

  ExpPoly expoly(int max_terms = 3, int q = 2, int max_degree = 2, std::int64_t r = 1) {
    ExpPoly f;
    const int n = integer(1, max_terms);
    for (int t = 0; t < n; ++t) f += ExpPoly::term(poly(max_degree, r), exponent(q));
    return f;
  }

  /// Transcendental of order exactly q.
  ExpPoly transcendental(int q, int max_terms = 3, int max_degree = 2) {
    ExpPoly f;
    do {
      f = expoly(max_terms, q, max_degree);
      f += ExpPoly::term(nonzero_poly(max_degree), exponent(q) + Poly::monomial(nonzero_scalar(), q));
    } while (f.order() != q);
    return f;
  }

  std::complex<double> point() {
    std::uniform_real_distribution<double> radius(0.3, 1.5);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    return std::polar(radius(rng_), angle(rng_));
  }

 private:
  std::mt19937_64 rng_;
};

/// Multiplies every exponent by u, so every frequency is multiplied by u.
inline ExpPoly rotate_frequencies(const ExpPoly& f, const QScalar& u) {
  ExpPoly out;
  for (const auto& [e, m] : f.terms()) out += ExpPoly::term(m, u * e);
  return out;
}

inline bool close(std::complex<double> a, std::complex<double> b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

constexpr int kInstances = 200;

/// Ring axioms on ExpPoly and field axioms on QScalar.
inline int ring_axiom_failures(std::uint64_t seed = 1) {
  Gen g(seed);
  int failures = 0;
  for (int n = 0; n < kInstances; ++n) {
    const ExpPoly a = g.expoly(), b = g.expoly(), c = g.expoly();
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
              a * (b + c) == a * b + a * c && a + ExpPoly{} == a && a * ExpPoly(1L) == a && (a - a).is_zero();
    const std::int64_t r = n % 2 == 0 ? 1 : 6;
    const QScalar x = g.scalar(r), y = g.scalar(r), z = g.nonzero_scalar(r);
    ok = ok && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && z * z.inverse() == QScalar(1L) &&
         (x * y).conj() == x.conj() * y.conj() && x.conj().conj() == x;
    failures += ok ? 0 : 1;
  }
  return failures;
}

/// (antiderivative f)' == f on order <= 1 inputs.
inline int antiderivative_failures(std::uint64_t seed = 2) {
  Gen g(seed);
  int failures = 0;
  for (int n = 0; n < kInstances; ++n) {
    const ExpPoly f = g.expoly(3, 1, 3);
    failures += antiderivative_exp1(f).derivative() == f ? 0 : 1;
  }
  return failures;
}

/// normalize(f).reconstruct() == f, with every multiplier of order < q.
inline int normalization_failures(std::uint64_t seed = 3) {
  Gen g(seed);
  int failures = 0;
  for (int n = 0; n < kInstances; ++n) {
    const ExpPoly f = g.transcendental(g.integer(1, 3));
    const NormalizedView v = normalize(f);
    bool ok = v.q == f.order() && v.reconstruct() == f && v.f0.order() < v.q;
    for (const auto& b : v.bands) ok = ok && !b.w.is_zero() && !b.multiplier.is_zero() && b.multiplier.order() < v.q;
    failures += ok ? 0 : 1;
  }
  return failures;
}

/// residual(eq, a f + b g) == a residual(eq, f) + b residual(eq, g).
inline int residual_linearity_failures(std::uint64_t seed = 4) {
  Gen g(seed);
  int failures = 0;
  for (int n = 0; n < kInstances; ++n) {
    std::vector<ExpPoly> c;
    const int order = g.integer(1, 3);
    for (int k = 0; k < order; ++k) c.push_back(g.expoly(2, 1, 1));
    c.push_back(ExpPoly(g.nonzero_scalar()));
    const LinearODE eq(c);
    const ExpPoly f = g.expoly(), h = g.expoly();
    const QScalar a = g.scalar(), b = g.scalar();
    failures += residual(eq, a * f + b * h) == a * residual(eq, f) + b * residual(eq, h) ? 0 : 1;
  }
  return failures;
}

/// Hull circumference of the characteristic is unchanged when every frequency is rotated.
inline int rotation_invariance_failures(std::uint64_t seed = 5) {
  Gen g(seed);
  const std::vector<QScalar> units{QScalar::imag_unit(), QScalar(Rational(3, 5), Rational(4, 5)),
                                   QScalar(Rational(-1)), QScalar(Rational(5, 13), Rational(-12, 13))};
  int failures = 0;
  for (int n = 0; n < kInstances; ++n) {
    const ExpPoly f = g.transcendental(g.integer(1, 2), 4, 1);
    const QScalar u = units[static_cast<std::size_t>(n) % units.size()];
    const double a = characteristic_asymptotic(f).leading;
    const double b = characteristic_asymptotic(rotate_frequencies(f, u)).leading;
    failures += std::abs(a - b) <= 1e-12 ? 0 : 1;
  }
  return failures;
}

/// Numeric evaluation respects +, * and d/dz (the last against a central difference).
inline int evaluation_failures(std::uint64_t seed = 6) {
  Gen g(seed);
  int failures = 0;
  for (int n = 0; n < kInstances; ++n) {
    const ExpPoly f = g.expoly(3, 2, 2), h = g.expoly(3, 2, 2);
    const auto z = g.point();
    const auto fz = f.evaluate(z), hz = h.evaluate(z);
    bool ok = close((f + h).evaluate(z), fz + hz, 1e-9) && close((f * h).evaluate(z), fz * hz, 1e-9);
    const double step = 1e-5;
    const auto numeric = (f.evaluate(z + step) - f.evaluate(z - step)) / (2 * step);
    ok = ok && close(f.derivative().evaluate(z), numeric, 1e-6);
    failures += ok ? 0 : 1;
  }
  return failures;
}

}  // namespace expoly::testing
