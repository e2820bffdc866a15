// Walks a 17-point permutation through the codec and both bijections.

#include <iostream>

#include "laguerre/laguerre.hpp"

int main() {
  using namespace laguerre;

  const Permutation sigma({4, 9, 2, 11, 5, 10, 1, 3, 6, 8, 7, 12, 16, 17, 13, 14, 15});
  const StatisticProfile s = profile(sigma);
  std::cout << "sigma   = " << sigma << '\n'
            << "arecp   = " << format_set(s.arecp) << '\n'
            << "cyc     = " << format_set(s.cyc) << "\n\n";

  const LaguerreHistory h = encode(sigma);
  std::cout << render_history(h) << '\n';

  const Permutation omega = phi(sigma);
  std::cout << "phi     = " << omega << "   cyc = " << format_set(profile(omega).cyc) << '\n';

  const Permutation tau = phi_cap(sigma);
  const StatisticProfile t = profile(tau);
  std::cout << "Phi     = " << tau << "   cyc = " << format_set(t.cyc) << "   arecp = " << format_set(t.arecp)
            << '\n';
  return 0;
}
