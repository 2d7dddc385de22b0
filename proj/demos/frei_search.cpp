// Searches f'' + e^{-z} f' + alpha f = 0 for exponential polynomial solutions
// over a range of alpha and prints what it finds.

#include <iostream>

#include "expoly/expoly.hpp"

using namespace expoly;

int main() {
  const ExpPoly a = parse_expoly("exp(-z)");
  for (long alpha = -1; alpha >= -16; --alpha) {
    const LinearODE eq = LinearODE::second_order(a, ExpPoly(QScalar(alpha)));
    const auto sols = search_solutions(eq, SearchSpec{1L, 1, 0, 5, 1});
    std::cout << "alpha = " << alpha << ": ";
    if (sols.empty()) {
      std::cout << "none\n";
      continue;
    }
    for (const auto& f : sols) {
      // Scale so the constant term is 1.
      const QScalar c = f.polynomial_part().coeff(0);
      std::cout << print_expoly(c.is_zero() ? f : c.inverse() * f) << "\n";
    }
  }
}
