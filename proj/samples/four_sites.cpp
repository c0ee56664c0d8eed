// Prints the n = 4 stationary distribution next to its Schubert product form.
#include <iostream>

#include "tasep/tasep.hpp"

int main() {
  using namespace tasep;
  const auto psi = symbolic_stationary(4);
  for (const auto& w : enumerate_states(4)) {
    std::cout << w.compact() << "  = (" << xy_fact(w).to_string() << ")";
    for (const auto& label : factor_labels(w)) std::cout << " * S_" << label.compact();
    std::cout << (main_formula(w) == psi.at(w) ? "   [matches solver]" : "   [MISMATCH]") << '\n';
  }
}
