#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "expoly/scalar.hpp"

namespace expoly {

/// Univariate polynomial in z over QScalar, coefficients indexed by degree.
class Poly {
 public:
  /// Degree reported for the zero polynomial (stands in for minus infinity).
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<QScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(const QScalar& c) : coeffs_{c} { trim(); }  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(QScalar(c)) {}                // NOLINT(google-explicit-constructor)

  static Poly z() { return Poly(std::vector<QScalar>{0, 1}); }
  static Poly monomial(const QScalar& c, int degree) {
    std::vector<QScalar> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
  }

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<QScalar>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of z^k; zero beyond the degree.
  [[nodiscard]] QScalar coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] QScalar leading() const { return coeffs_.empty() ? QScalar{} : coeffs_.back(); }

  /// Number of nonzero coefficients.
  [[nodiscard]] int term_count() const {
    int n = 0;
    for (const auto& c : coeffs_) n += c.is_zero() ? 0 : 1;
    return n;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<QScalar> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k < p.coeffs_.size()) v[k] += p.coeffs_[k];
      if (k < q.coeffs_.size()) v[k] += q.coeffs_[k];
    }
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& p) {
    std::vector<QScalar> v;
    v.reserve(p.coeffs_.size());
    for (const auto& c : p.coeffs_) v.push_back(-c);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<QScalar> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
        if (q.coeffs_[j].is_zero()) continue;
        v[i + j] += p.coeffs_[i] * q.coeffs_[j];
      }
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const QScalar& c, const Poly& p) {
    if (c.is_zero()) return {};
    std::vector<QScalar> v;
    v.reserve(p.coeffs_.size());
    for (const auto& a : p.coeffs_) v.push_back(c * a);
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }

  [[nodiscard]] Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<QScalar> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = QScalar(static_cast<long>(k)) * coeffs_[k];
    return Poly(std::move(v));
  }

  /// Antiderivative with zero constant term.
  [[nodiscard]] Poly integral() const {
    if (coeffs_.empty()) return {};
    std::vector<QScalar> v(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      v[k + 1] = coeffs_[k] / QScalar(static_cast<long>(k + 1));
    }
    return Poly(std::move(v));
  }

  [[nodiscard]] std::complex<double> evaluate(std::complex<double> z) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
  }

  /// Copy with the constant coefficient removed.
  [[nodiscard]] Poly without_constant() const {
    if (coeffs_.empty()) return {};
    auto v = coeffs_;
    v[0] = QScalar{};
    return Poly(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<QScalar> coeffs_;
};

/// Structural order: by degree, then coefficients from the top down.
inline int compare_lex(const Poly& p, const Poly& q) {
  if (p.degree() != q.degree()) return p.degree() < q.degree() ? -1 : 1;
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  for (std::size_t k = a.size(); k-- > 0;) {
    if (int c = compare_lex(a[k], b[k]); c != 0) return c;
  }
  return 0;
}

struct PolyLess {
  bool operator()(const Poly& p, const Poly& q) const { return compare_lex(p, q) < 0; }
};

}  // namespace expoly
