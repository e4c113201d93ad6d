#pragma once

// Small hand-built models shared by the test suites.

#include "zariski/cone_model.hpp"

namespace zariski::testing {

/// diag(1, -1), one (-1)-curve E = (0, 1), h = (1, 0).
inline ConeModel model_s1() {
  ConeModel m;
  m.form = SymmetricForm{{1, 0}, {0, -1}};
  m.primes = {{"E", ClassVector{0, 1}}};
  m.ample = ClassVector{1, 0};
  return m;
}

/// <2> + A2(-1): an A2 chain c1, c2 of (-2)-curves orthogonal to h.
inline ConeModel model_s2() {
  ConeModel m;
  m.form = SymmetricForm{{2, 0, 0}, {0, -2, 1}, {0, 1, -2}};
  m.primes = {{"c1", ClassVector{0, 1, 0}}, {"c2", ClassVector{0, 0, 1}}};
  m.ample = ClassVector{1, 0, 0};
  return m;
}

/// U + A2(-1) with the affine A2 triple a1, a2, f - a1 - a2 (f = u isotropic).
/// Every pair is an A2 configuration; the triple is only semidefinite.
inline ConeModel model_affine_a2() {
  ConeModel m;
  m.form = SymmetricForm{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 1}, {0, 0, 1, -2}};
  m.primes = {{"c1", ClassVector{0, 0, 1, 0}},
              {"c2", ClassVector{0, 0, 0, 1}},
              {"c3", ClassVector{1, 0, -1, -1}}};
  m.ample = ClassVector{1, 1, 0, 0};
  return m;
}

/// diag(1, -1) with a single isotropic prime (q(E) = 0).
inline ConeModel model_isotropic_prime() {
  ConeModel m;
  m.form = SymmetricForm{{1, 0}, {0, -1}};
  m.primes = {{"F", ClassVector{1, 1}}};
  m.ample = ClassVector{1, 0};
  return m;
}

}  // namespace zariski::testing
