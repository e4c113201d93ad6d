#pragma once

// Exact arithmetic in a real quadratic field Q(sqrt d).

#include "zariski/rational.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zariski {

inline constexpr std::uint64_t kDefaultSquarefreeBound = 1'000'000;

struct RadicandOptions {
  /// Trial divisors p are tried while p <= trial_bound.
  std::uint64_t trial_bound = kDefaultSquarefreeBound;
};

/// n = square_root^2 * core. `complete` is false when a square factor larger
/// than the trial bound may remain inside `core`.
struct SquarefreeSplit {
  Integer core;
  Integer square_root;
  bool complete = true;
};

inline SquarefreeSplit squarefree_split(const Integer& n, RadicandOptions opts = {}) {
  if (n < 0) throw std::domain_error("squarefree_split of a negative integer");
  SquarefreeSplit out{n, Integer(1), true};
  if (n == 0) {
    out.square_root = 0;
    return out;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    out.core = 1;
    out.square_root = r;
    return out;
  }
  Integer rest = n;
  Integer p2;
  for (std::uint64_t p = 2; p <= opts.trial_bound; p += (p == 2 ? 1 : 2)) {
    p2 = Integer(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
    if (p2 > rest) break;
    while (mpz_divisible_p(rest.get_mpz_t(), p2.get_mpz_t())) {
      rest /= p2;
      out.square_root *= static_cast<unsigned long>(p);
    }
  }
  if (rest != 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    out.square_root *= r;
    rest = 1;
  }
  out.core = rest;
  // Any remaining square factor q^2 has q > trial_bound, which is only
  // possible when rest exceeds trial_bound^2.
  Integer bound(static_cast<unsigned long>(opts.trial_bound));
  out.complete = rest <= bound * bound;
  return out;
}

struct MixedRadicandError : std::domain_error {
  MixedRadicandError(const Integer& d1, const Integer& d2)
      : std::domain_error("mixed radicands sqrt(" + d1.get_str() + ") and sqrt(" + d2.get_str() +
                          ")") {}
};

/// a + b*sqrt(d). Canonical: b == 0 iff d == 0, and d != 1. Rational values
/// carry d == 0 and combine with any radicand.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}             // NOLINT
  QuadExt(int a) : a_(a) {}              // NOLINT

  /// Reduces d to its squarefree part (up to the trial bound).
  QuadExt(const Rational& a, const Rational& b, const Integer& d, RadicandOptions opts = {}) {
    if (d < 0) throw std::domain_error("negative radicand");
    SquarefreeSplit split = squarefree_split(d, opts);
    a_ = a;
    b_ = b * Rational(split.square_root);
    d_ = split.core;
    canonicalize();
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }

  int sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with b^2 d.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt conjugate() const {
    QuadExt out = *this;
    out.b_ = -b_;
    return out;
  }

  /// a^2 - b^2 d
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

  QuadExt& operator+=(const QuadExt& o) {
    d_ = common_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    canonicalize();
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    d_ = common_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    canonicalize();
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    Integer d = common_radicand(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    canonicalize();
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    Integer d = common_radicand(*this, o);
    Rational n = o.norm();
    QuadExt num = *this;
    num *= o.conjugate();
    a_ = num.a_ / n;
    b_ = num.b_ / n;
    d_ = d;
    canonicalize();
    return *this;
  }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) {
    QuadExt out = x;
    out.a_ = -x.a_;
    out.b_ = -x.b_;
    return out;
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).is_zero(); }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
  }

  /// Decimal rendering with `places` digits after the point, computed in
  /// 512-bit floating point. For display only.
  std::string decimal(int places = 12) const {
    mpf_class a(a_.raw(), 512), b(b_.raw(), 512), d(d_, 512);
    mpf_class v = a + b * mpf_class(sqrt(d), 512);
    char* buf = nullptr;
    gmp_asprintf(&buf, "%.*Ff", places, v.get_mpf_t());
    std::string out(buf);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(buf, out.size() + 1);
    return out;
  }

  std::string str() const {
    if (is_rational()) return a_.str();
    std::string out;
    if (!a_.is_zero()) out = a_.str() + (b_.sign() < 0 ? " - " : " + ");
    else if (b_.sign() < 0) out = "-";
    out += abs(b_).str() + "*sqrt(" + d_.get_str() + ")";
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

 private:
  static Integer common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw MixedRadicandError(x.d_, y.d_);
  }

  void canonicalize() {
    if (d_ == 0) b_ = 0;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
    if (b_.is_zero()) d_ = 0;
  }

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

inline bool is_rational(const QuadExt& x) { return x.is_rational(); }
inline bool is_rational(const Rational&) { return true; }

struct DegeneratePolynomialError : std::invalid_argument {
  DegeneratePolynomialError() : std::invalid_argument("leading coefficient is zero") {}
};

/// Diagnostics from root extraction.
struct RootReport {
  std::vector<QuadExt> roots;
  Rational discriminant;
  bool radicand_fully_reduced = true;
};

/// Real roots of A t^2 + B t + C, ascending. One element for a double root,
/// none for a negative discriminant.
inline RootReport quadratic_roots_report(const Rational& A, const Rational& B, const Rational& C,
                                         RadicandOptions opts = {}) {
  if (A.is_zero()) throw DegeneratePolynomialError();
  RootReport report;
  report.discriminant = B * B - Rational(4) * A * C;
  const Rational& disc = report.discriminant;
  if (disc.sign() < 0) return report;
  Rational two_a = Rational(2) * A;
  if (disc.is_zero()) {
    report.roots.push_back(QuadExt(-B / two_a));
    return report;
  }
  // sqrt(n/m) = sqrt(n*m)/m
  Integer nm = disc.numerator() * disc.denominator();
  SquarefreeSplit split = squarefree_split(nm, opts);
  report.radicand_fully_reduced = split.complete;
  Rational coef = Rational(split.square_root, disc.denominator());
  QuadExt root_disc(Rational(0), coef, split.core, RadicandOptions{0});
  QuadExt lo = (QuadExt(-B) - root_disc) / QuadExt(two_a);
  QuadExt hi = (QuadExt(-B) + root_disc) / QuadExt(two_a);
  if (hi < lo) std::swap(lo, hi);
  report.roots = {lo, hi};
  return report;
}

inline std::vector<QuadExt> quadratic_roots(const Rational& A, const Rational& B,
                                            const Rational& C, RadicandOptions opts = {}) {
  return quadratic_roots_report(A, B, C, opts).roots;
}

}  // namespace zariski
