#pragma once

// Exhaustive oracle for the divisorial Zariski decomposition. It shares only
// the Rational/ClassVector/ConeModel value types with the library: inner
// products, definiteness (Sylvester's criterion on leading minors) and the
// linear solve (Gauss-Jordan) are all re-implemented here.

#include "zariski/engine.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zariski::testing {

namespace oracle_detail {

inline Rational dot(const ConeModel& m, const ClassVector& u, const ClassVector& v) {
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * m.form(i, j) * v[j];
  return s;
}

using Matrix = std::vector<std::vector<Rational>>;

inline Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

/// Sylvester: (-1)^k det(leading k x k minor) > 0 for every k.
inline bool negative_definite(const Matrix& g) {
  for (std::size_t k = 1; k <= g.size(); ++k) {
    Matrix minor(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = g[i][j];
    int s = determinant(minor).sign();
    if ((k % 2 == 1 && s >= 0) || (k % 2 == 0 && s <= 0)) return false;
  }
  return true;
}

/// Gauss-Jordan on the augmented matrix.
inline std::vector<Rational> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("oracle: singular system");
    std::swap(a[piv], a[k]);
    std::swap(b[piv], b[k]);
    Rational inv = Rational(1) / a[k][k];
    for (std::size_t j = 0; j < n; ++j) a[k][j] *= inv;
    b[k] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      Rational f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  return b;
}

}  // namespace oracle_detail

struct OracleFailure : std::logic_error {
  using std::logic_error::logic_error;
};

struct OracleResult {
  Decomposition decomposition;
  /// Distinct (P, N) candidates found; must be exactly 1 for pseudo-effective input.
  std::size_t distinct_candidates = 0;
  /// Subsets (of any support) that produced the unique candidate.
  std::size_t consistent_subsets = 0;
};

/// Tries every subset S of primes with negative definite Gram matrix, solves
/// the orthogonality system on S and keeps the candidates with nonnegative
/// coefficients and nef remainder. Throws NotPseudoEffective when nothing
/// survives and OracleFailure when two different decompositions survive.
inline OracleResult brute_force_decompose(const ConeModel& model, const ClassVector& alpha) {
  using namespace oracle_detail;
  const std::size_t n = model.primes.size();
  if (n > 16) throw std::invalid_argument("brute force oracle limited to 16 primes");

  std::vector<std::vector<Rational>> candidates;  // full coefficient vectors
  std::vector<ClassVector> positives;
  std::size_t consistent = 0;

  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    Matrix g(idx.size(), std::vector<Rational>(idx.size()));
    std::vector<Rational> rhs(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      rhs[a] = dot(model, alpha, model.primes[idx[a]].vec);
      for (std::size_t b = 0; b < idx.size(); ++b)
        g[a][b] = dot(model, model.primes[idx[a]].vec, model.primes[idx[b]].vec);
    }
    if (!negative_definite(g)) continue;
    std::vector<Rational> a = solve(g, rhs);
    bool effective = true;
    for (const auto& c : a) effective = effective && c.sign() >= 0;
    if (!effective) continue;

    ClassVector p = alpha;
    std::vector<Rational> full(n, Rational(0));
    for (std::size_t k = 0; k < idx.size(); ++k) {
      full[idx[k]] = a[k];
      for (std::size_t c = 0; c < p.size(); ++c) p[c] -= a[k] * model.primes[idx[k]].vec[c];
    }
    bool nef = dot(model, p, p).sign() >= 0 && dot(model, p, model.ample).sign() >= 0;
    for (std::size_t i = 0; i < n && nef; ++i) nef = dot(model, p, model.primes[i].vec).sign() >= 0;
    if (!nef) continue;

    ++consistent;
    bool seen = false;
    for (const auto& c : candidates) seen = seen || c == full;
    if (!seen) {
      candidates.push_back(full);
      positives.push_back(p);
    }
  }

  if (candidates.empty()) {
    throw NotPseudoEffective(NotPseudoEffective::Reason::kOutsidePositiveCone,
                             "oracle: no orthogonal decomposition exists");
  }
  if (candidates.size() > 1) {
    throw OracleFailure("oracle: " + std::to_string(candidates.size()) +
                        " distinct decompositions survived");
  }

  OracleResult out;
  out.distinct_candidates = candidates.size();
  out.consistent_subsets = consistent;
  Decomposition& d = out.decomposition;
  d.alpha = alpha;
  d.positive_part = positives.front();
  for (std::size_t i = 0; i < n; ++i) {
    if (candidates.front()[i].sign() > 0) {
      d.negative_coeffs.emplace_back(model.primes[i].name, candidates.front()[i]);
      d.support.push_back(model.primes[i].name);
    }
  }
  return out;
}

/// Field-by-field agreement of the mathematical content (iteration counts and
/// active sets are engine bookkeeping and are not compared).
inline bool same_decomposition(const Decomposition& a, const Decomposition& b) {
  return a.alpha == b.alpha && a.positive_part == b.positive_part &&
         a.negative_coeffs == b.negative_coeffs && a.support == b.support;
}

}  // namespace zariski::testing
