#pragma once

// Deterministic random ConeModels and pseudo-effective classes for property
// and oracle tests.

#include "zariski/cone_model.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace zariski {

struct FixtureSpec {
  std::size_t rank = 2;
  std::size_t prime_count = 0;
  std::uint64_t seed = 0;
  long coefficient_bound = 2;
};

struct GenerationExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Bounded draws that do not depend on the standard library's distribution
/// implementations, so fixtures are identical across toolchains.
class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }
  bool chance(unsigned percent) { return engine_() % 100 < percent; }

 private:
  std::mt19937_64 engine_;
};

using IntMatrix = std::vector<std::vector<long>>;

inline IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline long max_abs(const IntMatrix& m) {
  long out = 0;
  for (const auto& row : m)
    for (long v : row) out = std::max(out, v < 0 ? -v : v);
  return out;
}

}  // namespace detail

/// A model whose form is M^T J M for J = diag(1, -1, ..., -1) and a random
/// unimodular M; h = M^{-1} e_1 so q(h) = 1. Primes are drawn in
/// J-coordinates with q(D) < 0 and q(D, h) >= 0 and kept only when they pair
/// nonnegatively with every prime already accepted.
inline ConeModel gen_model(const FixtureSpec& spec) {
  if (spec.rank < 2) throw std::invalid_argument("fixture rank must be at least 2");
  if (spec.coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
  const std::size_t r = spec.rank;
  const long bound = spec.coefficient_bound;
  detail::FixtureRng rng(spec.seed);

  // M and its inverse, built from elementary column operations col_i += c col_j.
  detail::IntMatrix m = detail::identity(r), m_inv = detail::identity(r);
  for (std::size_t step = 0, accepted = 0; step < 40 * r && accepted < 2 * r; ++step) {
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(r) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(r) - 2));
    if (j >= i) ++j;
    long c = rng.chance(50) ? 1 : -1;
    detail::IntMatrix m2 = m, inv2 = m_inv;
    for (std::size_t k = 0; k < r; ++k) m2[k][i] += c * m[k][j];
    // inverse: row_j -= c row_i
    for (std::size_t k = 0; k < r; ++k) inv2[j][k] -= c * m_inv[i][k];
    if (detail::max_abs(m2) > bound || detail::max_abs(inv2) > bound) continue;
    m = std::move(m2);
    m_inv = std::move(inv2);
    ++accepted;
  }

  auto j_sign = [](std::size_t k) { return k == 0 ? 1L : -1L; };
  std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      long s = 0;
      for (std::size_t k = 0; k < r; ++k) s += m[k][a] * j_sign(k) * m[k][b];
      rows[a][b] = Rational(s);
    }
  }

  auto to_model = [&](const std::vector<long>& x) {
    ClassVector v(r);
    for (std::size_t a = 0; a < r; ++a) {
      long s = 0;
      for (std::size_t k = 0; k < r; ++k) s += m_inv[a][k] * x[k];
      v[a] = Rational(s);
    }
    return v;
  };
  auto j_inner = [&](const std::vector<long>& x, const std::vector<long>& y) {
    long s = 0;
    for (std::size_t k = 0; k < r; ++k) s += j_sign(k) * x[k] * y[k];
    return s;
  };

  ConeModel model;
  model.form = SymmetricForm(std::move(rows));
  std::vector<long> e1(r, 0);
  e1[0] = 1;
  model.ample = to_model(e1);
  model.m = 1;

  std::vector<std::vector<long>> accepted;
  constexpr int kAttemptsPerPrime = 400;
  for (std::size_t p = 0; p < spec.prime_count; ++p) {
    bool placed = false;
    for (int attempt = 0; attempt < kAttemptsPerPrime && !placed; ++attempt) {
      std::vector<long> x(r);
      x[0] = rng.uniform(0, bound);
      for (std::size_t k = 1; k < r; ++k) x[k] = rng.uniform(-bound, bound);
      if (j_inner(x, x) >= 0) continue;
      bool ok = true;
      for (const auto& y : accepted) {
        if (j_inner(x, y) < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      accepted.push_back(x);
      model.primes.push_back({"D" + std::to_string(p + 1), to_model(x)});
      placed = true;
    }
    if (!placed) {
      throw GenerationExhausted("could not place prime " + std::to_string(p + 1) + " of " +
                                std::to_string(spec.prime_count) + " at rank " +
                                std::to_string(r) + " after " +
                                std::to_string(kAttemptsPerPrime) + " draws");
    }
  }
  return model;
}

/// A rational isotropic class in the closed positive cone, if one is found on
/// a line h + t v for a small integer v (the discriminant must be a square).
inline std::optional<ClassVector> find_isotropic_class(const ConeModel& model) {
  const std::size_t r = model.rank();
  const Rational qh = model.q(model.ample);
  auto try_direction = [&](const ClassVector& v) -> std::optional<ClassVector> {
    Rational qv = model.q(v);
    if (qv.is_zero()) return std::nullopt;
    Rational qhv = model.q(model.ample, v);
    // q(h + t v) = qh + 2 t qhv + t^2 qv; quarter discriminant qhv^2 - qh qv
    Rational disc = qhv * qhv - qh * qv;
    if (disc.sign() <= 0) return std::nullopt;
    Integer num = disc.numerator(), den = disc.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
      return std::nullopt;
    }
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational t = (-qhv + Rational(sn, sd)) / qv;
    ClassVector e = model.ample + t * v;
    if (e.is_zero()) return std::nullopt;
    if (model.q(e, model.ample).sign() < 0) e = -e;
    return e;
  };
  for (std::size_t k = 0; k < r; ++k) {
    ClassVector v(r);
    v[k] = 1;
    if (auto e = try_direction(v)) return e;
  }
  for (const auto& p : model.primes)
    if (auto e = try_direction(p.vec)) return e;
  // Small box, in a fixed order.
  std::vector<long> x(r, -2);
  for (;;) {
    ClassVector v(r);
    for (std::size_t k = 0; k < r; ++k) v[k] = Rational(x[k]);
    if (auto e = try_direction(v)) return e;
    std::size_t k = 0;
    while (k < r && x[k] == 2) x[k++] = -2;
    if (k == r) break;
    ++x[k];
  }
  return std::nullopt;
}

/// Random nonnegative rational combination of h, isotropic boundary classes of
/// the positive cone, and primes. Always pseudo-effective in the model.
inline ClassVector gen_pseudoeffective_class(const ConeModel& model, std::uint64_t seed) {
  detail::FixtureRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t r = model.rank();
  auto coefficient = [&](unsigned zero_percent) {
    if (rng.chance(zero_percent)) return Rational(0);
    return Rational(rng.uniform(1, 6), rng.uniform(1, 4));
  };
  ClassVector alpha(r);
  alpha += coefficient(30) * model.ample;

  if (auto iso = find_isotropic_class(model); iso && rng.chance(60)) {
    // Other isotropic classes: second intersection of the line iso + t v
    // with the isotropic cone.
    int count = static_cast<int>(rng.uniform(1, 2));
    for (int c = 0; c < count; ++c) {
      ClassVector v(r);
      for (std::size_t k = 0; k < r; ++k) v[k] = Rational(rng.uniform(-2, 2));
      ClassVector e = *iso;
      Rational qv = model.q(v);
      if (!qv.is_zero()) {
        Rational t = Rational(-2) * model.q(*iso, v) / qv;
        e = *iso + t * v;
        if (e.is_zero()) e = *iso;
        if (model.q(e, model.ample).sign() < 0) e = -e;
      }
      alpha += coefficient(20) * e;
    }
  }
  for (const auto& p : model.primes) alpha += coefficient(40) * p.vec;
  return alpha;
}

}  // namespace zariski
