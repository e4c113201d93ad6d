#pragma once

// Exact symmetric linear algebra over Q.

#include "zariski/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zariski {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::domain_error {
  SingularMatrixError() : std::domain_error("singular matrix") {}
};

/// Coordinates of a class in a fixed lattice basis.
class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(std::size_t rank) : coords_(rank, Rational(0)) {}
  explicit ClassVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  ClassVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  ClassVector& operator+=(const ClassVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  ClassVector& operator-=(const ClassVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  ClassVector& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator*(const Rational& s, ClassVector v) { return v *= s; }
  friend ClassVector operator*(ClassVector v, const Rational& s) { return v *= s; }
  friend ClassVector operator-(ClassVector v) { return v *= Rational(-1); }
  friend bool operator==(const ClassVector&, const ClassVector&) = default;

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ", ";
      out += coords_[i].str();
    }
    return out + ")";
  }

 private:
  void check_same(const ClassVector& o) const {
    if (o.size() != size()) {
      throw DimensionMismatch("class vectors of rank " + std::to_string(size()) + " and " +
                              std::to_string(o.size()));
    }
  }

  std::vector<Rational> coords_;
};

/// Symmetric r x r matrix of rationals; used both for the ambient form and for
/// Gram matrices of prime families.
class SymmetricForm {
 public:
  SymmetricForm() = default;

  explicit SymmetricForm(std::vector<std::vector<Rational>> rows) : rank_(rows.size()) {
    entries_.reserve(rank_ * rank_);
    for (const auto& row : rows) {
      if (row.size() != rank_) throw DimensionMismatch("form matrix is not square");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      for (std::size_t j = i + 1; j < rank_; ++j) {
        if (at(i, j) != at(j, i)) {
          throw std::invalid_argument("form matrix is not symmetric at (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ")");
        }
      }
    }
  }

  SymmetricForm(std::initializer_list<std::initializer_list<Rational>> rows)
      : SymmetricForm(to_rows(rows)) {}

  static SymmetricForm diagonal(const std::vector<Rational>& diag) {
    std::vector<std::vector<Rational>> rows(diag.size(), std::vector<Rational>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i) rows[i][i] = diag[i];
    return SymmetricForm(std::move(rows));
  }

  std::size_t rank() const { return rank_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  std::vector<std::vector<Rational>> rows() const {
    std::vector<std::vector<Rational>> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * rank_),
                    entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * rank_));
    }
    return out;
  }

  /// Principal submatrix on the given (ordered) indices.
  SymmetricForm principal(std::span<const std::size_t> idx) const {
    std::vector<std::vector<Rational>> rows(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) rows[a][b] = at(idx[a], idx[b]);
    return SymmetricForm(std::move(rows));
  }

  friend bool operator==(const SymmetricForm&, const SymmetricForm&) = default;

 private:
  static std::vector<std::vector<Rational>> to_rows(
      std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) out.emplace_back(r);
    return out;
  }

  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }

  std::size_t rank_ = 0;
  std::vector<Rational> entries_;
};

/// u^T Q v
inline Rational inner(const SymmetricForm& form, const ClassVector& u, const ClassVector& v) {
  const std::size_t r = form.rank();
  if (u.size() != r || v.size() != r) {
    throw DimensionMismatch("inner product of rank " + std::to_string(u.size()) + " and " +
                            std::to_string(v.size()) + " vectors under a rank " +
                            std::to_string(r) + " form");
  }
  Rational total(0);
  for (std::size_t i = 0; i < r; ++i) {
    if (u[i].is_zero()) continue;
    Rational row(0);
    for (std::size_t j = 0; j < r; ++j) {
      if (!v[j].is_zero()) row += form(i, j) * v[j];
    }
    total += u[i] * row;
  }
  return total;
}

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester inertia by symmetric congruence reduction. When the remaining
/// block has a zero diagonal but a nonzero off-diagonal entry (i, j), row and
/// column j are added to i, which makes the new pivot 2 * a_ij.
inline Signature signature(const SymmetricForm& form) {
  const std::size_t r = form.rank();
  auto a = form.rows();
  Signature sig;
  std::size_t k = 0;
  while (k < r) {
    std::size_t piv = r;
    for (std::size_t i = k; i < r; ++i) {
      if (!a[i][i].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == r) {
      std::size_t pi = r, pj = r;
      for (std::size_t i = k; i < r && pi == r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
          if (!a[i][j].is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == r) {
        sig.n_zero += r - k;
        break;
      }
      for (std::size_t c = k; c < r; ++c) a[pi][c] += a[pj][c];
      for (std::size_t c = k; c < r; ++c) a[c][pi] += a[c][pj];
      piv = pi;
    }
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (auto& row : a) std::swap(row[piv], row[k]);
    }
    const Rational p = a[k][k];
    (p.sign() > 0 ? sig.n_plus : sig.n_minus) += 1;
    for (std::size_t i = k + 1; i < r; ++i) {
      if (a[i][k].is_zero()) continue;
      Rational f = a[i][k] / p;
      for (std::size_t j = k; j < r; ++j) a[i][j] -= f * a[k][j];
    }
    // The trailing block is now the (symmetric) Schur complement.
    for (std::size_t i = k + 1; i < r; ++i) a[k][i] = 0;
    ++k;
  }
  return sig;
}

/// All pivots of unpivoted symmetric elimination strictly negative, i.e. the
/// leading principal minors alternate in sign starting negative. A zero pivot
/// means a singular leading minor, which already rules out definiteness.
inline bool is_negative_definite(const SymmetricForm& gram) {
  const std::size_t r = gram.rank();
  auto a = gram.rows();
  for (std::size_t k = 0; k < r; ++k) {
    if (a[k][k].sign() >= 0) return false;
    for (std::size_t i = k + 1; i < r; ++i) {
      if (a[i][k].is_zero()) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j < r; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

/// Exact solution of gram * x = rhs by Gaussian elimination.
inline std::vector<Rational> solve_symmetric(const SymmetricForm& gram,
                                             std::span<const Rational> rhs) {
  const std::size_t r = gram.rank();
  if (rhs.size() != r) throw DimensionMismatch("right-hand side length differs from matrix rank");
  auto a = gram.rows();
  std::vector<Rational> b(rhs.begin(), rhs.end());
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t piv = k;
    while (piv < r && a[piv][k].is_zero()) ++piv;
    if (piv == r) throw SingularMatrixError();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      std::swap(b[piv], b[k]);
    }
    for (std::size_t i = k + 1; i < r; ++i) {
      if (a[i][k].is_zero()) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < r; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(r);
  for (std::size_t k = r; k-- > 0;) {
    Rational s = b[k];
    for (std::size_t j = k + 1; j < r; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

}  // namespace zariski
