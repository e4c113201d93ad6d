#pragma once

// A Lorentzian lattice with a finite list of prime classes and a reference
// class orienting the positive cone.

#include "zariski/linalg.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zariski {

struct PrimeClass {
  std::string name;
  ClassVector vec;
  friend bool operator==(const PrimeClass&, const PrimeClass&) = default;
};

struct ConeModel {
  SymmetricForm form;
  std::vector<PrimeClass> primes;
  ClassVector ample;
  unsigned m = 1;

  std::size_t rank() const { return form.rank(); }

  Rational q(const ClassVector& u, const ClassVector& v) const { return inner(form, u, v); }
  Rational q(const ClassVector& u) const { return inner(form, u, u); }

  std::optional<std::size_t> prime_index(const std::string& name) const {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (primes[i].name == name) return i;
    return std::nullopt;
  }

  /// Gram matrix of the primes at `idx`, in the given order.
  SymmetricForm gram(const std::vector<std::size_t>& idx) const {
    std::vector<std::vector<Rational>> rows(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a; b < idx.size(); ++b) {
        rows[a][b] = q(primes[idx[a]].vec, primes[idx[b]].vec);
        rows[b][a] = rows[a][b];
      }
    }
    return SymmetricForm(std::move(rows));
  }

  friend bool operator==(const ConeModel&, const ConeModel&) = default;
};

enum class ViolationKind {
  kDimension,
  kNotLorentzian,
  kAmpleNotPositive,
  kAmpleNegativeOnPrime,
  kPrimesIntersectNegatively,
  kZeroPrime,
  kDuplicateName,
  kBadExponent,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  std::vector<std::size_t> indices;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const ConeModel& model) {
  ValidationReport rep;
  auto add = [&](ViolationKind k, std::string msg, std::vector<std::size_t> idx = {}) {
    rep.violations.push_back({k, std::move(msg), std::move(idx)});
  };
  const std::size_t r = model.rank();
  if (r == 0) add(ViolationKind::kDimension, "form has rank 0");
  if (model.m == 0) add(ViolationKind::kBadExponent, "volume exponent m must be positive");

  bool dims_ok = model.ample.size() == r;
  if (!dims_ok) {
    add(ViolationKind::kDimension, "ample class has " + std::to_string(model.ample.size()) +
                                       " coordinates, expected " + std::to_string(r));
  }
  for (std::size_t i = 0; i < model.primes.size(); ++i) {
    if (model.primes[i].vec.size() != r) {
      add(ViolationKind::kDimension,
          "prime '" + model.primes[i].name + "' has " +
              std::to_string(model.primes[i].vec.size()) + " coordinates, expected " +
              std::to_string(r),
          {i});
      dims_ok = false;
    }
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < model.primes.size(); ++i) {
    if (!seen.insert(model.primes[i].name).second) {
      add(ViolationKind::kDuplicateName, "duplicate prime name '" + model.primes[i].name + "'",
          {i});
    }
  }
  if (r > 0) {
    Signature sig = signature(model.form);
    if (!(sig.n_plus == 1 && sig.n_minus == r - 1 && sig.n_zero == 0)) {
      add(ViolationKind::kNotLorentzian, "signature (" + std::to_string(sig.n_plus) + "," +
                                             std::to_string(sig.n_minus) + "," +
                                             std::to_string(sig.n_zero) + ") not Lorentzian");
    }
  }
  if (!dims_ok) return rep;

  if (model.q(model.ample).sign() <= 0) {
    add(ViolationKind::kAmpleNotPositive,
        "q(h, h) = " + model.q(model.ample).str() + " is not positive");
  }
  for (std::size_t i = 0; i < model.primes.size(); ++i) {
    const auto& p = model.primes[i];
    if (p.vec.is_zero()) add(ViolationKind::kZeroPrime, "prime '" + p.name + "' is zero", {i});
    Rational qh = model.q(model.ample, p.vec);
    if (qh.sign() < 0) {
      add(ViolationKind::kAmpleNegativeOnPrime,
          "q(h, " + p.name + ") = " + qh.str() + " is negative", {i});
    } else if (qh.is_zero()) {
      rep.warnings.push_back("q(h, " + p.name + ") = 0: h lies on the boundary of the nef cone");
    }
  }
  for (std::size_t i = 0; i < model.primes.size(); ++i) {
    for (std::size_t j = i + 1; j < model.primes.size(); ++j) {
      Rational v = model.q(model.primes[i].vec, model.primes[j].vec);
      if (v.sign() < 0) {
        add(ViolationKind::kPrimesIntersectNegatively,
            "q(" + model.primes[i].name + ", " + model.primes[j].name + ") = " + v.str() +
                " < 0; distinct primes must intersect nonnegatively",
            {i, j});
      }
    }
  }
  return rep;
}

/// q(a, a) >= 0 and q(a, h) >= 0
inline bool in_positive_cone_closure(const ConeModel& model, const ClassVector& alpha) {
  return model.q(alpha).sign() >= 0 && model.q(alpha, model.ample).sign() >= 0;
}

/// Nef test: in the closed positive cone and nonnegative on every listed
/// prime. On surfaces and hyper-Kähler manifolds nef, modified nef and the
/// dual of the pseudo-effective cone agree, so one predicate serves all three.
inline bool is_dual_nef(const ConeModel& model, const ClassVector& alpha) {
  if (!in_positive_cone_closure(model, alpha)) return false;
  for (const auto& p : model.primes)
    if (model.q(alpha, p.vec).sign() < 0) return false;
  return true;
}

}  // namespace zariski
