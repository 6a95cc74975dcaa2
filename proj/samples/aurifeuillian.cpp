// Prints the Aurifeuillian split of Phi_4m(2) for a few m, the prime graph of
// 2B2(2^7), and one almost simple case.

#include <iostream>

#include "suzree.hpp"

using namespace suzree;

int main() {
  for (std::uint64_t m : {3, 5, 7, 9, 11}) {
    const Nat plus = psi_eval(Family::Suzuki, Sign::Plus, m);
    const Nat minus = psi_eval(Family::Suzuki, Sign::Minus, m);
    std::cout << "Phi_" << 4 * m << "(2) = " << eval_cyclotomic(4 * m, Nat(2)) << " ; Psi+ = " << plus
              << ", Psi- = " << minus << "\n";
  }

  const GKGraph g = build_gk({Family::Suzuki, 7, 1});
  const IndependenceReport r = independence_number(g);
  std::cout << graph_to_dot(g, r);

  const IndependenceReport ext = theorem3_evaluate({Family::ReeF4, 7, 7});
  std::cout << "2F4(2^7) extended by its field automorphism of order 7: t = " << ext.t << ", t(2) = " << ext.t2
            << ", case " << theorem3_case_name(ext.theorem3_case) << "\n";
}
