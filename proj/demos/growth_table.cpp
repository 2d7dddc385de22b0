// Leading Nevanlinna asymptotics for a few exponential polynomials.

#include <iomanip>
#include <iostream>
#include <numbers>

#include "expoly/expoly.hpp"

using namespace expoly;

int main() {
  const char* samples[] = {"exp(z)+exp(2*z)", "exp(-4*z)", "(exp(z)+exp(2*z))*exp(-4*z)", "exp(i*z)+exp(-z)",
                           "z*exp(z^2)+exp(-z^2+i*z)+1", "exp(z)-1"};
  std::cout << std::left << std::setw(32) << "f" << std::setw(4) << "q" << std::setw(14) << "T leading"
            << "N leading\n";
  for (const char* s : samples) {
    const ExpPoly f = parse_expoly(s);
    const auto t = characteristic_asymptotic(f);
    const auto n = zero_counting_asymptotic(f);
    std::cout << std::setw(32) << s << std::setw(4) << t.q << std::setw(14) << std::setprecision(8) << t.leading
              << n.leading << "\n";
  }
  std::cout << "\nm(r, f/g) for f = 1 + exp(2z), g = exp(z): "
            << proximity_quotient_asymptotic(parse_expoly("1+exp(2*z)"), parse_expoly("exp(z)")).leading * std::numbers::pi
            << " r^q / pi\n";
}
