// Prints a few invariants of small manifolds for the builtin categories.

#include <iostream>

#include "quantum3/quantum3.hpp"

using namespace quantum3;

int main() {
  const ModularData fib = fibonacci();
  const Triangulation s3 = sphere_s3();
  const Triangulation l3 = lens(3);

  std::cout << "global dimension  " << global_dim(fib.base()).real() << "\n";
  std::cout << "TV(S^3)           " << tv_contract(fib.base(), s3).real() << "\n";
  std::cout << "TV(L(3,1))        " << tv_contract(fib.base(), l3).real() << "\n";

  // the state sum equals |WRT|^2 for a modular category
  const Scalar t = tau(fib, std::sqrt(global_dim(fib.base())), unknot_surgery(3));
  std::cout << "|tau(L(3,1))|^2   " << std::norm(t) << "\n";

  std::cout << "Hopf link         " << evaluate(fib, hopf_link(1, 1)).real() << "\n";
  for (int g = 0; g <= 3; ++g) std::cout << "Verlinde g=" << g << "      " << verlinde_dim(fib, g).real() << "\n";
}
