#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcalg/errors.hpp"
#include "lcalg/rational.hpp"

namespace lcalg {

/// Finite-dimensional real algebra given by exact structure constants
/// e_i e_j = sum_k c[i][j][k] e_k.
///
/// The dense tensor is the source of truth; a sparse copy of the nonzero
/// terms of every basis product is kept alongside it for fast products.
class Algebra {
 public:
  struct Term {
    std::size_t index;
    Rational coeff;
  };

  Algebra(std::size_t dim, std::vector<Rational> constants, std::optional<std::size_t> unit = std::nullopt,
          std::vector<std::string> labels = {})
      : dim_(dim), constants_(std::move(constants)), unit_(unit), labels_(std::move(labels)) {
    if (dim_ == 0) throw DimensionError("algebra dimension must be positive");
    if (constants_.size() != dim_ * dim_ * dim_) throw DimensionError("structure tensor must have dim^3 entries");
    if (unit_ && *unit_ >= dim_) throw DimensionError("unit index out of range");
    if (labels_.empty()) labels_ = default_labels(dim_, unit_);
    if (labels_.size() != dim_) throw DimensionError("label count must equal dimension");
    terms_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          const Rational& c = constants_[(i * dim_ + j) * dim_ + k];
          if (sgn(c) != 0) terms_[i * dim_ + j].push_back({k, c});
        }
    if (unit_) {
      for (std::size_t i = 0; i < dim_; ++i) {
        const auto& left = terms_[*unit_ * dim_ + i];
        const auto& right = terms_[i * dim_ + *unit_];
        auto is_basis = [&](const std::vector<Term>& t) {
          return t.size() == 1 && t[0].index == i && t[0].coeff == 1;
        };
        if (!is_basis(left) || !is_basis(right)) {
          throw PreconditionError("declared unit does not act as identity on " + labels_[i]);
        }
      }
    }
  }

  static std::vector<std::string> default_labels(std::size_t dim, std::optional<std::size_t> unit) {
    std::vector<std::string> labels;
    std::size_t next = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      if (unit && *unit == i) {
        labels.emplace_back("1");
      } else {
        labels.push_back("e" + std::to_string(unit ? next++ : i));
      }
    }
    return labels;
  }

  std::size_t dim() const { return dim_; }
  std::optional<std::size_t> unit() const { return unit_; }
  bool is_unital() const { return unit_.has_value(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Rational>& constants() const { return constants_; }

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }

  const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return terms_[i * dim_ + j]; }

  Vector basis(std::size_t i) const { return unit_vector(dim_, i); }

  Vector one() const {
    if (!unit_) throw PreconditionError("algebra is not unital");
    return basis(*unit_);
  }

  Vector scalar(const Rational& s) const { return s * one(); }

  /// Coefficient of 1 in v when v is a scalar multiple of 1; nullopt otherwise.
  std::optional<Rational> as_scalar(const Vector& v) const {
    if (!unit_) throw PreconditionError("algebra is not unital");
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i != *unit_ && sgn(v[i]) != 0) return std::nullopt;
    }
    return v[*unit_];
  }

  Vector multiply(const Vector& x, const Vector& y) const {
    check(x);
    check(y);
    Vector out = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (sgn(y[j]) == 0) continue;
        Rational xy = x[i] * y[j];
        for (const Term& t : terms_[i * dim_ + j]) out[t.index] += xy * t.coeff;
      }
    }
    return out;
  }

  /// M with M * y = x * y.
  Matrix left_mul_matrix(const Vector& x) const {
    check(x);
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const Term& t : terms_[i * dim_ + j]) m(t.index, j) += x[i] * t.coeff;
    }
    return m;
  }

  /// M with M * y = y * x.
  Matrix right_mul_matrix(const Vector& x) const {
    check(x);
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(x[j]) == 0) continue;
      for (std::size_t i = 0; i < dim_; ++i)
        for (const Term& t : terms_[i * dim_ + j]) m(t.index, i) += x[j] * t.coeff;
    }
    return m;
  }

  /// The same algebra written in a new basis whose vectors are the columns
  /// of `basis` (old coordinates). The unit index follows the column equal
  /// to the old unit, if any.
  Algebra change_basis(const Matrix& basis, std::vector<std::string> labels = {}) const {
    if (basis.rows() != dim_ || basis.cols() != dim_) throw DimensionError("change of basis must be dim x dim");
    auto inv = inverse(basis);
    if (!inv) throw PreconditionError("change of basis is singular");
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < dim_; ++c) cols.push_back(basis.column(c));
    std::vector<Rational> constants(dim_ * dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        Vector p = inv->apply(multiply(cols[i], cols[j]));
        for (std::size_t k = 0; k < dim_; ++k) constants[(i * dim_ + j) * dim_ + k] = p[k];
      }
    std::optional<std::size_t> unit;
    if (unit_) {
      for (std::size_t c = 0; c < dim_; ++c) {
        if (cols[c] == one()) unit = c;
      }
    }
    if (labels.empty() && unit == unit_) labels = labels_;
    return Algebra(dim_, std::move(constants), unit, std::move(labels));
  }

  void check(const Vector& x) const {
    if (x.size() != dim_) throw DimensionError("element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " + std::to_string(dim_));
  }

 private:
  std::size_t dim_;
  std::vector<Rational> constants_;
  std::optional<std::size_t> unit_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> terms_;
};

inline Vector multiply(const Algebra& a, const Vector& x, const Vector& y) { return a.multiply(x, y); }
inline Matrix left_mul_matrix(const Algebra& a, const Vector& x) { return a.left_mul_matrix(x); }
inline Matrix right_mul_matrix(const Algebra& a, const Vector& x) { return a.right_mul_matrix(x); }

/// Outcome of testing 1, x, x^2 for linear dependence.
struct MinimalQuadratic {
  enum class Kind { Scalar, Quadratic, NotQuadratic };
  Kind kind = Kind::NotQuadratic;
  Rational scalar;  // lambda when x = lambda 1
  Rational trace;   // t(x); 2 lambda for scalars
  Rational norm;    // n(x); lambda^2 for scalars
};

/// x^2 - t(x) x + n(x) = 0 when 1, x, x^2 are dependent.
inline MinimalQuadratic minimal_quadratic(const Algebra& a, const Vector& x) {
  if (!a.is_unital()) throw PreconditionError("minimal_quadratic needs a unital algebra");
  a.check(x);
  MinimalQuadratic out;
  if (auto lambda = a.as_scalar(x)) {
    out.kind = MinimalQuadratic::Kind::Scalar;
    out.scalar = *lambda;
    out.trace = 2 * *lambda;
    out.norm = *lambda * *lambda;
    return out;
  }
  // x is not scalar, so x^2 = alpha 1 + beta x has at most one solution.
  Matrix m = Matrix::from_columns({a.one(), x}, a.dim());
  auto sol = solve(m, a.multiply(x, x));
  if (!sol) return out;
  out.kind = MinimalQuadratic::Kind::Quadratic;
  out.trace = (*sol)[1];
  out.norm = -(*sol)[0];
  return out;
}

/// Smallest subspace containing `gens` (and 1 when requested) that is closed
/// under multiplication.
inline Subspace generated_subalgebra(const Algebra& a, const std::vector<Vector>& gens, bool include_unit) {
  const std::size_t n = a.dim();
  std::vector<Vector> elems;
  Subspace span(n);
  auto add = [&](const Vector& v) {
    if (span.contains(v)) return;
    elems.push_back(v);
    span = Subspace::span(elems, n);
  };
  for (const auto& g : gens) {
    a.check(g);
    add(g);
  }
  if (include_unit) add(a.one());
  // Every pair of spanning elements is multiplied once, in both orders.
  for (std::size_t i = 0; i < elems.size() && span.dim() < n; ++i)
    for (std::size_t j = 0; j <= i && span.dim() < n; ++j) {
      add(a.multiply(elems[i], elems[j]));
      if (i != j) add(a.multiply(elems[j], elems[i]));
    }
  if (span.dim() == n) return Subspace::whole(n);
  return span;
}

}  // namespace lcalg
