// Decomposes a class on a rank-3 lattice carrying an A2 configuration of
// (-2)-curves and prints the result.

#include "zariski/zariski.hpp"

#include <iostream>

int main() {
  using zariski::ClassVector;
  using zariski::Rational;

  zariski::ConeModel model;
  model.form = zariski::SymmetricForm{{2, 0, 0}, {0, -2, 1}, {0, 1, -2}};
  model.primes = {{"c1", ClassVector{0, 1, 0}}, {"c2", ClassVector{0, 0, 1}}};
  model.ample = ClassVector{1, 0, 0};

  ClassVector alpha{1, 2, 1};
  auto d = zariski::decompose(model, alpha);
  std::cout << "alpha = " << alpha.str() << "\n";
  std::cout << "Z     = " << d.positive_part.str() << "\n";
  for (const auto& [name, c] : d.negative_coeffs) std::cout << "N    += " << c << " * " << name << "\n";
  std::cout << "vol   = " << zariski::volume(model, alpha) << "\n";

  zariski::BaseSurface base{Rational(1), Rational(2), Rational(1)};
  std::cout << "mu_L  = " << zariski::mu_L(base) << "\n";
  std::cout << "v(L)  = " << zariski::volume_L(base) << "\n";
  return 0;
}
