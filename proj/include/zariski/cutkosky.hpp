#pragma once

// Intersection theory on X = P(O(D) + O(-H)) over a surface Y whose nef cone
// equals its pseudo-effective cone (= the closed positive cone of Y).
//
// Classes on X are t*L + pi^*(x*D + y*H), with L = O(1). The only exceptional
// prime is E = P(O(-H)), whose class is L - pi^*D.

#include "zariski/errors.hpp"
#include "zariski/quad_ext.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zariski {

/// Intersection numbers of two ample classes D, H on the base surface.
struct BaseSurface {
  Rational d_sq;
  Rational dh;
  Rational h_sq;

  /// Empty when valid; otherwise a description of the first failed condition.
  std::optional<std::string> invalid_reason() const {
    if (d_sq.sign() <= 0 || dh.sign() <= 0 || h_sq.sign() <= 0) {
      return "D^2, D.H and H^2 must all be positive";
    }
    if (d_sq * h_sq > dh * dh) return "Hodge index violated: D^2 H^2 > (D.H)^2";
    return std::nullopt;
  }

  void require_valid() const {
    if (auto why = invalid_reason()) throw std::invalid_argument("invalid base surface: " + *why);
  }

  /// Proportional D and H: the base lattice degenerates to rank 1.
  bool proportional() const { return d_sq * h_sq == dh * dh; }

  /// (x D + y H) . (x' D + y' H)
  template <class S>
  S pair(const S& x, const S& y, const S& x2, const S& y2) const {
    return x * x2 * S(d_sq) + (x * y2 + y * x2) * S(dh) + y * y2 * S(h_sq);
  }
};

/// t*L + pi^*(x*D + y*H)
template <class S>
struct BundleClass {
  S t;
  S x;
  S y;

  static BundleClass L() { return {S(1), S(0), S(0)}; }
  static BundleClass pullback_D() { return {S(0), S(1), S(0)}; }
  static BundleClass pullback_H() { return {S(0), S(0), S(1)}; }
  /// E = L - pi^*D
  static BundleClass E() { return {S(1), S(-1), S(0)}; }

  friend BundleClass operator+(const BundleClass& a, const BundleClass& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y};
  }
  friend BundleClass operator-(const BundleClass& a, const BundleClass& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y};
  }
  friend BundleClass operator*(const S& s, const BundleClass& a) {
    return {s * a.t, s * a.x, s * a.y};
  }
  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.t == b.t && a.x == b.x && a.y == b.y;
  }
};

inline BundleClass<QuadExt> to_quad(const BundleClass<Rational>& c) {
  return {QuadExt(c.t), QuadExt(c.x), QuadExt(c.y)};
}

/// Triple intersection on X, from
///   L^3 = (D - H)^2 + D.H,  L^2 . pi^*g = (D - H).g,
///   L . pi^*g . pi^*g' = g.g',  pi^*g . pi^*g' . pi^*g'' = 0.
template <class S>
S intersect3(const BaseSurface& base, const BundleClass<S>& a, const BundleClass<S>& b,
             const BundleClass<S>& c) {
  const S l_cubed = S(base.d_sq - Rational(2) * base.dh + base.h_sq + base.dh);
  const S one(1), minus_one(-1);
  // (D - H) . g for g = x D + y H
  auto dmh = [&](const BundleClass<S>& g) { return base.pair(one, minus_one, g.x, g.y); };
  auto gg = [&](const BundleClass<S>& g, const BundleClass<S>& h) {
    return base.pair(g.x, g.y, h.x, h.y);
  };
  S out = a.t * b.t * c.t * l_cubed;
  out += a.t * b.t * dmh(c) + a.t * c.t * dmh(b) + b.t * c.t * dmh(a);
  out += a.t * gg(b, c) + b.t * gg(a, c) + c.t * gg(a, b);
  return out;
}

/// Nef test on Y for x D + y H: q_Y >= 0 and nonnegative against the ample
/// class D + H.
template <class S>
bool is_nef_on_base(const BaseSurface& base, const S& x, const S& y) {
  const S one(1);
  S self = base.pair(x, y, x, y);
  S against_ample = base.pair(x, y, one, one);
  return !(self < S(0)) && !(against_ample < S(0));
}

struct MuComputation {
  QuadExt mu;
  /// Roots of q_Y(-H + t (D + H)), ascending.
  std::vector<QuadExt> roots;
  bool radicand_fully_reduced = true;
};

namespace detail {

/// Smallest s in [lo, hi] with u + s*(D + H) nef on Y, where u = ux D + uy H.
/// The admissible s form an interval whose left end, when positive, is a root
/// of the quadratic q_Y(u + s (D + H)).
inline std::optional<QuadExt> first_nef_parameter(const BaseSurface& base, const Rational& ux,
                                                  const Rational& uy, const Rational& lo,
                                                  const Rational& hi, RadicandOptions opts) {
  const Rational one(1);
  if (is_nef_on_base(base, ux + lo, uy + lo)) return QuadExt(lo);
  Rational A = base.pair(one, one, one, one);
  Rational B = Rational(2) * base.pair(ux, uy, one, one);
  Rational C = base.pair(ux, uy, ux, uy);
  RootReport roots = quadratic_roots_report(A, B, C, opts);
  for (const QuadExt& s : roots.roots) {
    if (s < QuadExt(lo) || s > QuadExt(hi)) continue;
    QuadExt against_ample =
        QuadExt(base.pair(ux, uy, one, one)) + s * QuadExt(base.pair(one, one, one, one));
    if (against_ample.sign() >= 0) return s;
  }
  return std::nullopt;
}

}  // namespace detail

/// mu_L = min{ t > 0 : -H + t (D + H) nef on Y }, the coefficient of E in
/// N(L). Selection is by the nef condition, which for ample D, H picks the
/// root where the pairing with D + H becomes nonnegative.
inline MuComputation compute_mu_L(const BaseSurface& base, RadicandOptions opts = {}) {
  base.require_valid();
  const Rational one(1);
  MuComputation out;
  Rational A = base.pair(one, one, one, one);
  Rational B = Rational(2) * base.pair(Rational(0), Rational(-1), one, one);
  Rational C = base.h_sq;
  RootReport rep = quadratic_roots_report(A, B, C, opts);
  out.roots = rep.roots;
  out.radicand_fully_reduced = rep.radicand_fully_reduced;
  for (const QuadExt& t : rep.roots) {
    if (t < QuadExt(0) || t > QuadExt(1)) continue;
    // pairing of -H + t(D + H) with D + H
    QuadExt against_ample = QuadExt(base.pair(Rational(0), Rational(-1), one, one)) + t * QuadExt(A);
    if (against_ample.sign() >= 0) {
      out.mu = t;
      return out;
    }
  }
  throw InternalInconsistency("no admissible mu_L in [0, 1]; base data cannot be ample");
}

inline QuadExt mu_L(const BaseSurface& base, RadicandOptions opts = {}) {
  return compute_mu_L(base, opts).mu;
}

struct BundleDecomposition {
  BundleClass<QuadExt> positive_part;
  /// Coefficient of E in the negative part.
  QuadExt e_coeff;
};

/// alpha = t L + pi^*b = t E + pi^*(b + t D). alpha is pseudo-effective iff
/// t >= 0 and b + t D is nef on Y. The negative part is s E with s the least
/// value in [0, t] making (t - s) L + pi^*(b + s D) nef, i.e.
/// b - t H + s (D + H) nef on Y.
inline BundleDecomposition decompose_bundle(const BaseSurface& base,
                                            const BundleClass<Rational>& alpha,
                                            RadicandOptions opts = {}) {
  base.require_valid();
  const Rational& t = alpha.t;
  if (t.sign() < 0) {
    throw NotPseudoEffective(NotPseudoEffective::Reason::kNegativeLCoefficient,
                             "coefficient of L is " + t.str() + " < 0");
  }
  if (!is_nef_on_base(base, alpha.x + t, alpha.y)) {
    throw NotPseudoEffective(NotPseudoEffective::Reason::kBaseClassNotNef,
                             "b + t D is not nef on the base surface");
  }
  auto s = detail::first_nef_parameter(base, alpha.x, alpha.y - t, Rational(0), t, opts);
  if (!s) throw InternalInconsistency("no nef parameter in [0, t] although s = t is nef");
  BundleDecomposition out;
  out.e_coeff = *s;
  out.positive_part = to_quad(alpha) - *s * BundleClass<QuadExt>::E();
  return out;
}

/// Z(L) = (1 - mu) L + mu pi^*D
inline BundleClass<QuadExt> zariski_projection_L(const BaseSurface& base,
                                                 RadicandOptions opts = {}) {
  QuadExt mu = mu_L(base, opts);
  return {QuadExt(1) - mu, mu, QuadExt(0)};
}

/// v(L) = Z(L)^3
inline QuadExt volume_L(const BaseSurface& base, RadicandOptions opts = {}) {
  auto z = zariski_projection_L(base, opts);
  return intersect3(base, z, z, z);
}

}  // namespace zariski
