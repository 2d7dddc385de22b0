#pragma once

// Exact arithmetic in Q(i)[sqrt(r)] for a square-free radicand r >= 1.
//
// A value is (a_re + a_im*i) + (b_re + b_im*i)*sqrt(r). Each QScalar carries
// its radicand; values whose sqrt(r) part is zero are radicand-neutral and
// report radicand 1, so they combine freely with any context.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include "expoly/errors.hpp"

namespace expoly {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_square_free(std::int64_t r) {
  if (r < 1) return false;
  for (std::int64_t p = 2; p * p <= r; ++p) {
    if (r % (p * p) == 0) return false;
  }
  return true;
}

/// Radicand and numeric tolerance shared by one computation.
struct ScalarContext {
  std::int64_t radicand = 1;
  double float_tolerance = 1e-9;

  ScalarContext() = default;
  explicit ScalarContext(std::int64_t r, double tol = 1e-9) : radicand(r), float_tolerance(tol) {
    if (!is_square_free(r)) {
      throw InvalidParameter("radicand must be a square-free integer >= 1, got " + std::to_string(r));
    }
    if (!(tol > 0.0)) throw InvalidParameter("float tolerance must be positive");
  }
};

class QScalar {
 public:
  QScalar() = default;
  QScalar(long v) : a_re_(v) {}  // NOLINT(google-explicit-constructor)
  QScalar(Rational re, Rational im = 0) : a_re_(std::move(re)), a_im_(std::move(im)) {  // NOLINT
    a_re_.canonicalize();
    a_im_.canonicalize();
  }

  /// (a_re + a_im i) + (b_re + b_im i) sqrt(r). For r = 1 the root folds into the rational part.
  static QScalar make(Rational a_re, Rational a_im, Rational b_re, Rational b_im, std::int64_t r) {
    if (!is_square_free(r)) {
      throw InvalidParameter("radicand must be a square-free integer >= 1, got " + std::to_string(r));
    }
    QScalar x;
    x.a_re_ = std::move(a_re);
    x.a_im_ = std::move(a_im);
    x.b_re_ = std::move(b_re);
    x.b_im_ = std::move(b_im);
    x.radicand_ = r;
    for (Rational* c : {&x.a_re_, &x.a_im_, &x.b_re_, &x.b_im_}) c->canonicalize();
    x.fold();
    return x;
  }

  static QScalar imag_unit() { return QScalar(Rational(0), Rational(1)); }
  static QScalar sqrt_of(std::int64_t r) { return make(0, 0, 1, 0, r); }

  [[nodiscard]] const Rational& a_re() const noexcept { return a_re_; }
  [[nodiscard]] const Rational& a_im() const noexcept { return a_im_; }
  [[nodiscard]] const Rational& b_re() const noexcept { return b_re_; }
  [[nodiscard]] const Rational& b_im() const noexcept { return b_im_; }
  [[nodiscard]] std::int64_t radicand() const noexcept { return radicand_; }

  [[nodiscard]] bool is_zero() const noexcept {
    return sgn(a_re_) == 0 && sgn(a_im_) == 0 && sgn(b_re_) == 0 && sgn(b_im_) == 0;
  }
  [[nodiscard]] bool has_root_part() const noexcept { return sgn(b_re_) != 0 || sgn(b_im_) != 0; }
  [[nodiscard]] bool is_rational() const noexcept { return sgn(a_im_) == 0 && !has_root_part(); }
  [[nodiscard]] bool is_real() const noexcept { return sgn(a_im_) == 0 && sgn(b_im_) == 0; }
  [[nodiscard]] bool is_one() const noexcept { return is_rational() && a_re_ == 1; }

  /// Number of nonzero rational components.
  [[nodiscard]] int component_count() const noexcept {
    return (sgn(a_re_) != 0) + (sgn(a_im_) != 0) + (sgn(b_re_) != 0) + (sgn(b_im_) != 0);
  }

  friend QScalar operator+(const QScalar& x, const QScalar& y) {
    const auto r = common_radicand(x, y);
    return make(x.a_re_ + y.a_re_, x.a_im_ + y.a_im_, x.b_re_ + y.b_re_, x.b_im_ + y.b_im_, r);
  }
  friend QScalar operator-(const QScalar& x, const QScalar& y) {
    const auto r = common_radicand(x, y);
    return make(x.a_re_ - y.a_re_, x.a_im_ - y.a_im_, x.b_re_ - y.b_re_, x.b_im_ - y.b_im_, r);
  }
  friend QScalar operator-(const QScalar& x) {
    QScalar y = x;
    y.a_re_ = -y.a_re_;
    y.a_im_ = -y.a_im_;
    y.b_re_ = -y.b_re_;
    y.b_im_ = -y.b_im_;
    return y;
  }
  friend QScalar operator*(const QScalar& x, const QScalar& y) {
    const auto r = common_radicand(x, y);
    // (a + b s)(c + d s) = (ac + bd r) + (ad + bc) s, with a..d Gaussian rationals.
    auto [ac_re, ac_im] = gmul(x.a_re_, x.a_im_, y.a_re_, y.a_im_);
    auto [bd_re, bd_im] = gmul(x.b_re_, x.b_im_, y.b_re_, y.b_im_);
    auto [ad_re, ad_im] = gmul(x.a_re_, x.a_im_, y.b_re_, y.b_im_);
    auto [bc_re, bc_im] = gmul(x.b_re_, x.b_im_, y.a_re_, y.a_im_);
    const Rational rr(static_cast<long>(r));
    return make(ac_re + bd_re * rr, ac_im + bd_im * rr, ad_re + bc_re, ad_im + bc_im, r);
  }

  [[nodiscard]] QScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    // 1/(a + b s) = (a - b s) / (a^2 - b^2 r)
    auto [aa_re, aa_im] = gmul(a_re_, a_im_, a_re_, a_im_);
    auto [bb_re, bb_im] = gmul(b_re_, b_im_, b_re_, b_im_);
    const Rational rr(static_cast<long>(radicand_));
    const Rational n_re = aa_re - bb_re * rr;
    const Rational n_im = aa_im - bb_im * rr;
    // Gaussian inverse of n.
    const Rational norm = n_re * n_re + n_im * n_im;
    const Rational inv_re = n_re / norm;
    const Rational inv_im = -n_im / norm;
    auto [p_re, p_im] = gmul(a_re_, a_im_, inv_re, inv_im);
    auto [q_re, q_im] = gmul(b_re_, b_im_, inv_re, inv_im);
    return make(p_re, p_im, -q_re, -q_im, radicand_);
  }

  friend QScalar operator/(const QScalar& x, const QScalar& y) {
    if (y.is_zero()) throw DivisionByZero();
    common_radicand(x, y);
    return x * y.inverse();
  }

  QScalar& operator+=(const QScalar& y) { return *this = *this + y; }
  QScalar& operator-=(const QScalar& y) { return *this = *this - y; }
  QScalar& operator*=(const QScalar& y) { return *this = *this * y; }
  QScalar& operator/=(const QScalar& y) { return *this = *this / y; }

  /// Complex conjugate; sqrt(r) is real since r >= 1.
  [[nodiscard]] QScalar conj() const {
    QScalar y = *this;
    y.a_im_ = -y.a_im_;
    y.b_im_ = -y.b_im_;
    return y;
  }

  friend bool operator==(const QScalar& x, const QScalar& y) {
    return x.a_re_ == y.a_re_ && x.a_im_ == y.a_im_ && x.b_re_ == y.b_re_ && x.b_im_ == y.b_im_ &&
           x.radicand_ == y.radicand_;
  }

  /// Structural total order, used only for canonical container keys.
  friend int compare_lex(const QScalar& x, const QScalar& y) {
    if (x.radicand_ != y.radicand_) return x.radicand_ < y.radicand_ ? -1 : 1;
    if (int c = cmp(x.a_re_, y.a_re_); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(x.a_im_, y.a_im_); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(x.b_re_, y.b_re_); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(x.b_im_, y.b_im_); c != 0) return c < 0 ? -1 : 1;
    return 0;
  }

  [[nodiscard]] std::complex<double> to_complex() const {
    const double s = std::sqrt(static_cast<double>(radicand_));
    return {a_re_.get_d() + b_re_.get_d() * s, a_im_.get_d() + b_im_.get_d() * s};
  }

 private:
  static std::pair<Rational, Rational> gmul(const Rational& x, const Rational& y, const Rational& u,
                                            const Rational& v) {
    return {x * u - y * v, x * v + y * u};
  }

  static std::int64_t common_radicand(const QScalar& x, const QScalar& y) {
    if (x.radicand_ == y.radicand_) return x.radicand_;
    if (!x.has_root_part()) return y.radicand_;
    if (!y.has_root_part()) return x.radicand_;
    throw RadicandMismatch("cannot combine sqrt(" + std::to_string(x.radicand_) + ") with sqrt(" +
                           std::to_string(y.radicand_) + ")");
  }

  void fold() {
    if (radicand_ == 1) {
      a_re_ += b_re_;
      a_im_ += b_im_;
      b_re_ = 0;
      b_im_ = 0;
    }
    if (!has_root_part()) radicand_ = 1;
  }

  Rational a_re_{0};
  Rational a_im_{0};
  Rational b_re_{0};
  Rational b_im_{0};
  std::int64_t radicand_ = 1;
};

struct QScalarLess {
  bool operator()(const QScalar& x, const QScalar& y) const { return compare_lex(x, y) < 0; }
};

/// Sign of a real element a + b sqrt(r); throws if x has an imaginary part.
inline int real_sign(const QScalar& x) {
  if (!x.is_real()) throw InvalidParameter("real_sign of a non-real scalar");
  const int sa = sgn(x.a_re());
  const int sb = sgn(x.b_re());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 r wins. Equality is impossible for square-free r > 1.
  const Rational a2 = x.a_re() * x.a_re();
  const Rational b2r = x.b_re() * x.b_re() * Rational(static_cast<long>(x.radicand()));
  return a2 > b2r ? sa : sb;
}

inline bool is_positive_real(const QScalar& x) { return x.is_real() && real_sign(x) > 0; }

/// Exact comparison of two real scalars.
inline int compare_real(const QScalar& x, const QScalar& y) { return real_sign(x - y); }

inline std::complex<double> to_complex_float(const QScalar& x) { return x.to_complex(); }

}  // namespace expoly
