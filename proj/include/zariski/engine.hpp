#pragma once

// Divisorial Zariski decomposition on a Lorentzian lattice by iterated
// orthogonal projection onto a growing exceptional active set.

#include "zariski/cone_model.hpp"
#include "zariski/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace zariski {

struct Certificate {
  bool orthogonality_checked = false;
  bool gram_negdef_checked = false;
  bool effectivity_checked = false;
  bool dual_nef_checked = false;

  bool all() const {
    return orthogonality_checked && gram_negdef_checked && effectivity_checked &&
           dual_nef_checked;
  }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// alpha = positive_part + sum(coeff * prime).
struct Decomposition {
  ClassVector alpha;
  ClassVector positive_part;
  /// Strictly positive coefficients, in model prime order.
  std::vector<std::pair<std::string, Rational>> negative_coeffs;
  /// Names with strictly positive coefficient, in model prime order.
  std::vector<std::string> support;
  /// Final active set (may include primes whose coefficient is zero).
  std::vector<std::string> active_set;
  std::size_t iterations = 0;
  Certificate certificate;

  Rational coeff(const std::string& name) const {
    for (const auto& [n, c] : negative_coeffs)
      if (n == name) return c;
    return Rational(0);
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct CheckReport {
  Certificate certificate;
  bool reconstruction = false;
  std::vector<std::string> violations;
  bool ok() const { return reconstruction && certificate.all(); }
};

/// Re-verifies a stored decomposition from scratch. Orthogonality is checked
/// on alpha - N (not on the stored positive part) so that an edited
/// coefficient is caught even when the positive part was left untouched.
inline CheckReport verify_decomposition(
    const ConeModel& model, const ClassVector& alpha, const ClassVector& positive_part,
    const std::vector<std::pair<std::string, Rational>>& coeffs) {
  CheckReport rep;
  const std::size_t r = model.rank();
  if (alpha.size() != r || positive_part.size() != r) {
    rep.violations.push_back("class dimensions do not match the model rank");
    return rep;
  }
  ClassVector n_class(r);
  std::vector<std::size_t> idx;
  bool names_ok = true;
  rep.certificate.effectivity_checked = true;
  for (const auto& [name, c] : coeffs) {
    auto i = model.prime_index(name);
    if (!i) {
      rep.violations.push_back("unknown prime '" + name + "'");
      names_ok = false;
      continue;
    }
    if (c.sign() < 0) {
      rep.certificate.effectivity_checked = false;
      rep.violations.push_back("effectivity: coefficient of " + name + " is " + c.str());
    }
    if (c.sign() != 0) idx.push_back(*i);
    n_class += c * model.primes[*i].vec;
  }
  if (!names_ok) rep.certificate.effectivity_checked = false;

  ClassVector projected = alpha - n_class;
  rep.reconstruction = projected == positive_part;
  if (!rep.reconstruction) {
    rep.violations.push_back("reconstruction: positive part + N != alpha (alpha - N = " +
                             projected.str() + ")");
  }

  rep.certificate.orthogonality_checked = true;
  for (std::size_t i : idx) {
    Rational v = model.q(projected, model.primes[i].vec);
    if (!v.is_zero()) {
      rep.certificate.orthogonality_checked = false;
      rep.violations.push_back("orthogonality: q(alpha - N, " + model.primes[i].name +
                               ") = " + v.str());
    }
  }

  std::sort(idx.begin(), idx.end());
  rep.certificate.gram_negdef_checked = is_negative_definite(model.gram(idx));
  if (!rep.certificate.gram_negdef_checked) {
    rep.violations.push_back("gram matrix of the support is not negative definite");
  }

  rep.certificate.dual_nef_checked = is_dual_nef(model, projected);
  if (!rep.certificate.dual_nef_checked) {
    rep.violations.push_back("dual-nef: alpha - N is not nef");
  }
  return rep;
}

namespace detail {

inline std::vector<std::string> names_of(const ConeModel& model,
                                         const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(model.primes[i].name);
  return out;
}

}  // namespace detail

/// Computes alpha = Z(alpha) + N(alpha).
///
/// Each round solves Gram_S a = (q(alpha, D))_{D in S} so that alpha - N is
/// orthogonal to the active set S, then adds every prime that pairs strictly
/// negatively with alpha - N. The active set stays negative definite for a
/// pseudo-effective class, so at most rank() rounds run.
///
/// Throws NotPseudoEffective when the active set stops being negative definite
/// or the projection leaves the closed positive cone.
inline Decomposition decompose(const ConeModel& model, const ClassVector& alpha) {
  const std::size_t r = model.rank();
  if (alpha.size() != r) {
    throw DimensionMismatch("class has " + std::to_string(alpha.size()) +
                            " coordinates, model rank is " + std::to_string(r));
  }
  std::vector<std::size_t> active;
  std::vector<Rational> coeffs;
  ClassVector current = alpha;
  std::size_t growth_rounds = 0;

  for (;;) {
    if (!active.empty()) {
      std::vector<Rational> rhs;
      rhs.reserve(active.size());
      for (std::size_t i : active) rhs.push_back(model.q(alpha, model.primes[i].vec));
      coeffs = solve_symmetric(model.gram(active), rhs);
      current = alpha;
      for (std::size_t k = 0; k < active.size(); ++k) {
        if (!coeffs[k].is_zero()) current -= coeffs[k] * model.primes[active[k]].vec;
      }
    }

    std::vector<std::size_t> violating;
    for (std::size_t i = 0; i < model.primes.size(); ++i) {
      if (std::binary_search(active.begin(), active.end(), i)) continue;
      if (model.q(current, model.primes[i].vec).sign() < 0) violating.push_back(i);
    }
    if (violating.empty()) break;

    active.insert(active.end(), violating.begin(), violating.end());
    std::sort(active.begin(), active.end());
    ++growth_rounds;
    if (active.size() > r || !is_negative_definite(model.gram(active))) {
      NotPseudoEffective err(NotPseudoEffective::Reason::kGramNotNegativeDefinite,
                             "active set is not negative definite: the class is not "
                             "pseudo-effective");
      err.offending_subset = detail::names_of(model, active);
      throw err;
    }
  }

  if (!in_positive_cone_closure(model, current)) {
    NotPseudoEffective err(NotPseudoEffective::Reason::kOutsidePositiveCone,
                           "projected class lies outside the closed positive cone: the class "
                           "is not pseudo-effective");
    err.q_self = model.q(current);
    err.q_ample = model.q(current, model.ample);
    throw err;
  }

  Decomposition out;
  out.alpha = alpha;
  out.positive_part = current;
  out.iterations = std::max<std::size_t>(1, growth_rounds);
  out.active_set = detail::names_of(model, active);
  for (std::size_t k = 0; k < active.size(); ++k) {
    if (coeffs[k].sign() < 0) {
      throw InternalInconsistency("negative coefficient " + coeffs[k].str() + " for prime " +
                                  model.primes[active[k]].name);
    }
    if (coeffs[k].sign() > 0) {
      out.negative_coeffs.emplace_back(model.primes[active[k]].name, coeffs[k]);
      out.support.push_back(model.primes[active[k]].name);
    }
  }

  CheckReport check = verify_decomposition(model, alpha, out.positive_part, out.negative_coeffs);
  if (!check.ok()) {
    std::string msg = "certificate re-verification failed:";
    for (const auto& v : check.violations) msg += " " + v + ";";
    throw InternalInconsistency(msg);
  }
  out.certificate = check.certificate;
  return out;
}

inline std::vector<std::pair<std::string, Rational>> negative_part(const ConeModel& model,
                                                                   const ClassVector& alpha) {
  return decompose(model, alpha).negative_coeffs;
}

inline ClassVector zariski_projection(const ConeModel& model, const ClassVector& alpha) {
  return decompose(model, alpha).positive_part;
}

/// q(Z(alpha))^m
inline Rational volume(const ConeModel& model, const ClassVector& alpha) {
  ClassVector z = zariski_projection(model, alpha);
  return pow(model.q(z), model.m);
}

/// Support of N(alpha); classes with equal support lie in the same chamber.
inline std::vector<std::string> chamber_of(const ConeModel& model, const ClassVector& alpha) {
  return decompose(model, alpha).support;
}

inline bool is_big(const ConeModel& model, const ClassVector& alpha) {
  ClassVector p = zariski_projection(model, alpha);
  return model.q(p).sign() > 0 && model.q(p, model.ample).sign() > 0;
}

struct UnknownPrime : std::invalid_argument {
  explicit UnknownPrime(const std::string& name)
      : std::invalid_argument("unknown prime '" + name + "'") {}
};

inline bool is_exceptional_family(const ConeModel& model, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  idx.reserve(names.size());
  for (const auto& n : names) {
    auto i = model.prime_index(n);
    if (!i) throw UnknownPrime(n);
    idx.push_back(*i);
  }
  return is_negative_definite(model.gram(idx));
}

/// Every family of at most max_size primes with negative definite Gram
/// matrix, the empty family first, in lexicographic order of prime indices.
/// A family is extended only when it is itself negative definite; every
/// principal submatrix of a negative definite matrix is negative definite, so
/// nothing is missed.
inline std::vector<std::vector<std::size_t>> enumerate_exceptional_families(
    const ConeModel& model, std::size_t max_size) {
  max_size = std::min(max_size, model.rank());
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  out.push_back(current);
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (current.size() >= max_size) return;
    for (std::size_t j = start; j < model.primes.size(); ++j) {
      current.push_back(j);
      if (is_negative_definite(model.gram(current))) {
        out.push_back(current);
        extend(j + 1);
      }
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

}  // namespace zariski
