#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcalg/errors.hpp"

namespace lcalg {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Coordinate vector over the rationals.
using Vector = std::vector<Rational>;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational '" + s + "'");
    mpz_class d(strip_plus(den));
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(mpz_class(strip_plus(num)), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!valid_int(whole) || !valid_int(frac) || frac[0] == '-' || frac[0] == '+') {
      throw ParseError("malformed decimal '" + s + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(mpz_class(whole) * scale + mpz_class(frac), scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  if (!valid_int(s)) throw ParseError("malformed rational '" + s + "'");
  return Rational(mpz_class(strip_plus(s)));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// num / den in lowest terms.
inline Rational ratio(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_perfect_square(const Rational& r) {
  if (sgn(r) < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 && mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

/// Exact square root when r is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (!is_perfect_square(r)) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  Rational out(n, d);
  out.canonicalize();
  return out;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

inline void check_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
}

inline Vector operator+(const Vector& a, const Vector& b) {
  check_same_size(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  check_same_size(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vector operator-(const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline Vector operator*(const Rational& s, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

/// a += s * b
inline void axpy(Vector& a, const Rational& s, const Vector& b) {
  check_same_size(a, b);
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(b[i]) != 0) a[i] += s * b[i];
  }
}

inline Rational dot(const Vector& a, const Vector& b) {
  check_same_size(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionError("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    Vector out = zero_vector(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) == 0) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Rational& m = (*this)(r, c);
        if (sgn(m) != 0) out[r] += m * v[c];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination; the first nonzero entry in each column scan is
/// the pivot.
inline RowEchelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
    Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < cols; ++k) reduced(i, k) = m(i, k);
  return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

/// Basis of { x : m x = 0 }, one vector per free column.
inline std::vector<Vector> kernel(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Some solution x of m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side size mismatch");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  RowEchelon e = row_reduce(aug);
  Vector x = zero_vector(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == n) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, n);
  }
  return x;
}

inline Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Symmetric rational matrix is positive definite (all LDL^T pivots > 0).
inline bool is_positive_definite(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionError("definiteness of a non-square matrix");
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(c, c)) <= 0) return false;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return true;
}

/// Linear subspace of Q^n, stored as its reduced row-echelon basis so that
/// equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    RowEchelon e = row_reduce(Matrix::from_rows(vectors, ambient));
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace whole(std::size_t ambient) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
    return span(rows, ambient);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
    return out;
  }

  /// v minus its reduction against the echelon basis; zero iff v lies in the span.
  Vector residual(Vector v) const {
    if (v.size() != ambient_) throw DimensionError("subspace ambient mismatch");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      Rational f = v[pivots_[r]];
      if (sgn(f) == 0) continue;
      for (std::size_t k = 0; k < ambient_; ++k) {
        if (sgn(basis_(r, k)) != 0) v[k] -= f * basis_(r, k);
      }
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(residual(v)); }

  bool contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r) {
      if (!contains(other.basis_.row(r))) return false;
    }
    return true;
  }

  /// Coordinates of v with respect to the echelon basis rows; v must lie in the span.
  Vector coordinates(const Vector& v) const {
    if (!contains(v)) throw PreconditionError("vector not in subspace");
    Vector c(pivots_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  Subspace operator+(const Subspace& other) const {
    auto rows = basis_vectors();
    for (auto& v : other.basis_vectors()) rows.push_back(std::move(v));
    return span(rows, ambient_);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lcalg
