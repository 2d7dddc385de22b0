#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "expoly/exactla.hpp"
#include "expoly/exppoly.hpp"

namespace expoly {

/// a_n f^{(n)} + ... + a_1 f' + a_0 f = 0.
class LinearODE {
 public:
  /// Coefficients listed from the highest derivative down: (a_n, ..., a_1, a_0).
  static LinearODE from_highest_first(std::vector<ExpPoly> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return LinearODE(std::move(coeffs));
  }

  /// f'' + A f' + B f = 0.
  static LinearODE second_order(ExpPoly a, ExpPoly b) {
    return LinearODE({std::move(b), std::move(a), ExpPoly(1L)});
  }

  /// Coefficients indexed by derivative order: by_order[k] = a_k.
  explicit LinearODE(std::vector<ExpPoly> by_order) : coeffs_(std::move(by_order)) {
    if (coeffs_.size() < 2) throw InvalidParameter("a linear ODE needs order >= 1");
    if (coeffs_.back().is_zero()) throw InvalidParameter("leading coefficient must be nonzero");
  }

  [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const ExpPoly& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] const std::vector<ExpPoly>& by_order() const noexcept { return coeffs_; }

  [[nodiscard]] std::vector<ExpPoly> highest_first() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

  friend bool operator==(const LinearODE& a, const LinearODE& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<ExpPoly> coeffs_;
};

/// sum_k a_k f^{(k)}.
inline ExpPoly residual(const LinearODE& eq, const ExpPoly& f) {
  ExpPoly acc;
  ExpPoly d = f;
  for (int k = 0; k <= eq.order(); ++k) {
    if (k > 0) d = d.derivative();
    if (!eq.coeff(k).is_zero()) acc += eq.coeff(k) * d;
  }
  return acc;
}

namespace detail {

/// Spot-check points in the annulus 0.5 <= |z| <= 1.5 from a fixed seed.
inline std::vector<std::complex<double>> spot_check_points(std::size_t count = 5, std::uint64_t seed = 20240601) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  std::vector<std::complex<double>> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(std::polar(radius(rng), angle(rng)));
  return pts;
}

}  // namespace detail

/// Exact residual test, cross-checked by evaluating sum a_k(z) f^{(k)}(z) numerically.
inline bool is_solution(const LinearODE& eq, const ExpPoly& f, double tolerance = 1e-9) {
  const bool exact = residual(eq, f).is_zero();
  std::vector<ExpPoly> derivs{f};
  for (int k = 1; k <= eq.order(); ++k) derivs.push_back(derivs.back().derivative());
  bool numerically_zero = true;
  for (const auto& z : detail::spot_check_points()) {
    std::complex<double> sum{0, 0};
    double scale = 1.0;
    for (int k = 0; k <= eq.order(); ++k) {
      const auto part = eq.coeff(k).evaluate(z) * derivs[static_cast<std::size_t>(k)].evaluate(z);
      sum += part;
      scale = std::max(scale, std::abs(part));
    }
    if (std::abs(sum) > tolerance * scale) numerically_zero = false;
  }
  if (exact != numerically_zero) {
    throw InternalInconsistency(std::string("exact residual is ") + (exact ? "zero" : "nonzero") +
                                " but numeric spot checks disagree");
  }
  return exact;
}

/// Checks f = e^{E}: with u_0 = 1 and u_{k+1} = u_k' + u_k E', f^{(k)} = u_k e^{E}.
inline ExpPoly exp_solution_residual(const LinearODE& eq, const ExpPoly& log_f) {
  const ExpPoly e_prime = log_f.derivative();
  ExpPoly u(1L);
  ExpPoly acc;
  for (int k = 0; k <= eq.order(); ++k) {
    if (k > 0) u = u.derivative() + u * e_prime;
    if (!eq.coeff(k).is_zero()) acc += eq.coeff(k) * u;
  }
  return acc;
}

inline bool verify_exp_solution(const LinearODE& eq, const ExpPoly& log_f) {
  return exp_solution_residual(eq, log_f).is_zero();
}

/// Ansatz box for search_solutions: f = sum_{j=j_min}^{j_max} F_j(z) e^{j w z^q}, deg F_j <= deg_bound.
struct SearchSpec {
  QScalar w{1L};
  int q = 1;
  int j_min = 0;
  int j_max = 0;
  int deg_bound = 0;
};

namespace detail {

/// Integer t with exponent = t w z^q; throws on coefficients off the lattice.
inline long lattice_index(const Poly& exponent, const SearchSpec& spec) {
  if (exponent.is_zero()) return 0;
  if (exponent.degree() > spec.q) {
    throw LatticeViolation("exponent degree exceeds the lattice order q = " + std::to_string(spec.q));
  }
  const QScalar ratio = exponent.coeff(spec.q) / spec.w;
  if (!ratio.is_rational() || ratio.a_re().get_den() != 1) {
    throw LatticeViolation("exponent is not an integer multiple of w z^q");
  }
  if (!(exponent - Poly::monomial(exponent.coeff(spec.q), spec.q)).is_zero()) {
    throw MultiplierNotPolynomial("coefficient has a multiplier of positive order relative to the lattice");
  }
  return ratio.a_re().get_num().get_si();
}

}  // namespace detail

/// Exponential-polynomial solutions inside the ansatz box, as a kernel basis.
inline std::vector<ExpPoly> search_solutions(const LinearODE& eq, const SearchSpec& spec) {
  if (spec.q < 1) throw InvalidParameter("search order q must be >= 1");
  if (spec.j_min > spec.j_max) throw InvalidParameter("j_min must not exceed j_max");
  if (spec.deg_bound < 0) throw InvalidParameter("degree bound must be >= 0");
  if (spec.w.is_zero()) throw InvalidParameter("lattice generator w must be nonzero");
  for (const auto& a : eq.by_order()) {
    for (const auto& [e, m] : a.terms()) detail::lattice_index(e, spec);
  }

  std::vector<ExpPoly> basis_functions;
  for (int j = spec.j_min; j <= spec.j_max; ++j) {
    const Poly exponent = Poly::monomial(QScalar(static_cast<long>(j)) * spec.w, spec.q);
    for (int d = 0; d <= spec.deg_bound; ++d) {
      basis_functions.push_back(ExpPoly::term(Poly::monomial(QScalar(1L), d), exponent));
    }
  }

  // Coordinates of the residual space: (lattice index, monomial degree).
  std::map<std::pair<long, int>, std::size_t> rows;
  std::vector<ExpPoly> residuals;
  residuals.reserve(basis_functions.size());
  for (const auto& phi : basis_functions) {
    residuals.push_back(residual(eq, phi));
    for (const auto& [e, m] : residuals.back().terms()) {
      const long t = detail::lattice_index(e, spec);
      for (int d = 0; d <= m.degree(); ++d) {
        if (!m.coeff(d).is_zero()) rows.try_emplace({t, d}, rows.size());
      }
    }
  }

  Matrix system(rows.size(), basis_functions.size());
  for (std::size_t col = 0; col < residuals.size(); ++col) {
    for (const auto& [e, m] : residuals[col].terms()) {
      const long t = detail::lattice_index(e, spec);
      for (int d = 0; d <= m.degree(); ++d) {
        if (!m.coeff(d).is_zero()) system(rows.at({t, d}), col) = m.coeff(d);
      }
    }
  }

  std::vector<ExpPoly> solutions;
  for (const auto& v : kernel_basis(system)) {
    ExpPoly f;
    for (std::size_t col = 0; col < v.size(); ++col) {
      if (!v[col].is_zero()) f += v[col] * basis_functions[col];
    }
    if (f.is_zero()) continue;
    // Scale so the lowest coefficient of the first canonical term is 1.
    const auto& first = f.terms().begin()->second.coefficients();
    const auto lead = std::find_if(first.begin(), first.end(), [](const QScalar& c) { return !c.is_zero(); });
    solutions.push_back(lead->inverse() * f);
  }
  return solutions;
}

}  // namespace expoly
