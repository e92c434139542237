#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "lcalg/cayley_dickson.hpp"
#include "lcalg/decomposition.hpp"

namespace lcalg {

// Exact decision procedures for the algebra classes. Identities that are
// quadratic in one argument are checked on the polarised family
// {e_i} u {e_i + e_j}, which is a proof for the full identity.

/// Answer of a decision procedure with an optional counterexample.
struct Verdict {
  bool holds = true;
  std::string reason;              // human-readable description of the witness
  std::vector<Vector> witness;     // counterexample elements (x, y, ...) when !holds
};

namespace detail {

inline std::vector<Vector> polarised_family(std::size_t dim, std::optional<std::size_t> skip = std::nullopt) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i)
    if (i != skip) out.push_back(unit_vector(dim, i));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (i == skip || j == skip) continue;
      Vector v = unit_vector(dim, i);
      v[j] = 1;
      out.push_back(std::move(v));
    }
  return out;
}

inline std::vector<Vector> polarised_family(const std::vector<Vector>& basis) {
  std::vector<Vector> out = basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) out.push_back(basis[i] + basis[j]);
  return out;
}

inline std::string describe(const Algebra& a, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    std::string coeff = to_string(abs(v[i]));
    bool neg = sgn(v[i]) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (coeff != "1") out += coeff + "*";
    out += a.label(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Whether 1, x, x^2 are dependent for every x. The coordinates of
/// 1 ^ x ^ x^2 are the cubics x_b q_c(x) - x_c q_b(x) (b, c not the unit
/// index, q_k the k-th coordinate of x^2); all their coefficients must vanish.
inline Verdict is_quadratic(const Algebra& a) {
  if (!a.is_unital()) throw PreconditionError("is_quadratic needs a unital algebra");
  const std::size_t n = a.dim();
  const std::size_t u = *a.unit();
  Verdict out;
  if (n <= 2) return out;
  // q_k(x) = sum_{i<=j} sym[k] x_i x_j
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> sym(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational c = a.constant(i, j, k);
        if (i != j) c += a.constant(j, i, k);
        if (sgn(c) != 0) sym[k].emplace_back(i, j, c);
      }
  bool zero = true;
  for (std::size_t b = 0; b < n && zero; ++b) {
    if (b == u) continue;
    for (std::size_t c = b + 1; c < n && zero; ++c) {
      if (c == u) continue;
      std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> poly;
      auto add = [&](std::size_t var, std::size_t k, int sign) {
        for (const auto& [i, j, coeff] : sym[k]) {
          std::size_t m[3] = {var, i, j};
          std::sort(m, m + 3);
          poly[{m[0], m[1], m[2]}] += sign * coeff;
        }
      };
      add(b, c, 1);
      add(c, b, -1);
      for (const auto& [mono, coeff] : poly)
        if (sgn(coeff) != 0) zero = false;
    }
  }
  if (zero) return out;
  // Locate a concrete x with 1, x, x^2 independent.
  auto independent = [&](const Vector& x) {
    return rank(Matrix::from_rows({a.one(), x, a.multiply(x, x)}, n)) == 3;
  };
  std::vector<Vector> candidates = detail::polarised_family(n, u);
  for (const auto& x : candidates) {
    if (independent(x)) {
      out.holds = false;
      out.witness = {x};
      out.reason = "1, x, x^2 are linearly independent for x = " + detail::describe(a, x);
      return out;
    }
  }
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Vector x = zero_vector(n);
    for (auto& c : x) c = dist(rng);
    if (independent(x)) {
      out.holds = false;
      out.witness = {x};
      out.reason = "1, x, x^2 are linearly independent for x = " + detail::describe(a, x);
      return out;
    }
  }
  throw InternalError("nonzero cubic coefficients but no witness found");
}

/// Both alternative laws x^2 y = x(xy) and y x^2 = (yx)x.
inline Verdict is_alternative(const Algebra& a) {
  const std::size_t n = a.dim();
  Verdict out;
  for (const Vector& x : detail::polarised_family(n)) {
    Matrix lx = a.left_mul_matrix(x);
    Matrix rx = a.right_mul_matrix(x);
    Vector xx = a.multiply(x, x);
    Matrix lxx = a.left_mul_matrix(xx);
    Matrix rxx = a.right_mul_matrix(xx);
    Matrix left = lx * lx;
    Matrix right = rx * rx;
    for (std::size_t k = 0; k < n; ++k) {
      if (lxx.column(k) != left.column(k)) {
        out.holds = false;
        out.witness = {x, a.basis(k)};
        out.reason = "x^2 y != x(xy) for x = " + detail::describe(a, x) + ", y = " + a.label(k);
        return out;
      }
      if (rxx.column(k) != right.column(k)) {
        out.holds = false;
        out.witness = {x, a.basis(k)};
        out.reason = "y x^2 != (yx)x for x = " + detail::describe(a, x) + ", y = " + a.label(k);
        return out;
      }
    }
  }
  return out;
}

/// u^2 x = u(ux) and x u^2 = (xu)u for homogeneous u, all x.
inline Verdict is_super_alternative(const Algebra& a, const Grading& g) {
  if (auto d = grading_defect(a, g)) throw PreconditionError("invalid grading: " + *d);
  const std::size_t n = a.dim();
  Verdict out;
  for (const Subspace* part : {&g.even, &g.odd}) {
    for (const Vector& u : detail::polarised_family(part->basis_vectors())) {
      Matrix lu = a.left_mul_matrix(u);
      Matrix ru = a.right_mul_matrix(u);
      Vector uu = a.multiply(u, u);
      Matrix luu = a.left_mul_matrix(uu);
      Matrix ruu = a.right_mul_matrix(uu);
      Matrix left = lu * lu;
      Matrix right = ru * ru;
      for (std::size_t k = 0; k < n; ++k) {
        if (luu.column(k) != left.column(k) || ruu.column(k) != right.column(k)) {
          out.holds = false;
          out.witness = {u, a.basis(k)};
          out.reason = std::string(luu.column(k) != left.column(k) ? "u^2 x != u(ux)" : "x u^2 != (xu)u") +
                       " for u = " + detail::describe(a, u) + ", x = " + a.label(k);
          return out;
        }
      }
    }
  }
  return out;
}

/// The basis {1, e_1, ..., e_{n-1}} with e_i^2 = -square_norms[i-1] and
/// e_i e_j = -e_j e_i. `normalized` means every square norm is 1 (the
/// standard certificate); otherwise no rational rescaling was available.
struct LocallyComplexCertificate {
  std::vector<Vector> basis;
  Matrix change_of_basis;  // columns are the basis elements in the input coordinates
  std::vector<Rational> square_norms;
  bool normalized = true;
};

/// Hard postcondition on a certificate.
inline std::optional<std::string> certificate_defect(const Algebra& a, const LocallyComplexCertificate& c) {
  if (c.basis.size() != a.dim() || c.basis.empty() || c.basis[0] != a.one()) return "basis must start with 1 and have dim elements";
  if (rank(c.change_of_basis) != a.dim()) return "basis is not a basis";
  for (std::size_t i = 1; i < c.basis.size(); ++i) {
    if (a.multiply(c.basis[i], c.basis[i]) != a.scalar(-c.square_norms[i - 1])) return "e_i^2 is wrong for i = " + std::to_string(i);
    for (std::size_t j = i + 1; j < c.basis.size(); ++j) {
      if (a.multiply(c.basis[i], c.basis[j]) != -a.multiply(c.basis[j], c.basis[i])) {
        return "e_i, e_j do not anticommute for i = " + std::to_string(i) + ", j = " + std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

struct LocallyComplexVerdict {
  bool holds = true;
  std::optional<LocallyComplexCertificate> certificate;
  std::string reason;
  std::vector<Vector> witness;
};

/// Every nonscalar element generates a copy of C. Decided through
/// quadraticity plus positive definiteness of -1/2(uv+vu) on U.
inline LocallyComplexVerdict is_locally_complex(const Algebra& a) {
  if (!a.is_unital()) throw PreconditionError("is_locally_complex needs a unital algebra");
  LocallyComplexVerdict out;
  Verdict quad = is_quadratic(a);
  if (!quad.holds) {
    out.holds = false;
    out.reason = "not quadratic: " + quad.reason;
    out.witness = quad.witness;
    return out;
  }
  auto basis = orthogonal_u_basis(a);
  if (auto* bad = std::get_if<IndefiniteWitness>(&basis)) {
    out.holds = false;
    out.witness = {bad->element};
    const Rational sq = -bad->square_norm;  // bad^2 = sq * 1
    if (sgn(sq) == 0) {
      out.reason = "u^2 = 0 for nonzero u = " + detail::describe(a, bad->element);
    } else if (auto root = rational_sqrt(sq)) {
      Vector e = Rational(1, 2) * (a.one() - Rational(1 / *root) * bad->element);
      out.witness = {e};
      out.reason = "nontrivial idempotent " + detail::describe(a, e);
    } else {
      out.reason = "u^2 = " + to_string(sq) + " > 0 for u = " + detail::describe(a, bad->element);
    }
    return out;
  }
  const auto& ub = std::get<OrthogonalUBasis>(basis);
  LocallyComplexCertificate cert;
  cert.basis.push_back(a.one());
  for (const auto& e : ub.elements) cert.basis.push_back(e);
  cert.square_norms = ub.square_norms;
  cert.normalized = ub.normalized;
  cert.change_of_basis = Matrix::from_columns(cert.basis, a.dim());
  if (auto d = certificate_defect(a, cert)) throw InternalError("certificate check failed: " + *d);
  out.certificate = std::move(cert);
  return out;
}

/// e_i e_j lies in span{e_1, ..., e_{n-1}} for i != j in an anticommuting basis.
inline Verdict is_nicely_normed(const Algebra& a) {
  Verdict out;
  if (a.dim() == 1) return out;
  LocallyComplexVerdict lc = is_locally_complex(a);
  if (!lc.holds) {
    out.holds = false;
    out.reason = "not locally complex: " + lc.reason;
    out.witness = lc.witness;
    return out;
  }
  const auto& b = lc.certificate->basis;
  for (std::size_t i = 1; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Vector p = a.multiply(b[i], b[j]);
      if (sgn(p[*a.unit()]) != 0) {
        out.holds = false;
        out.witness = {b[i], b[j]};
        out.reason = "e_i e_j has scalar part " + to_string(p[*a.unit()]) + " for e_i = " + detail::describe(a, b[i]) +
                     ", e_j = " + detail::describe(a, b[j]);
        return out;
      }
    }
  return out;
}

struct CommutativeVerdict {
  bool holds = true;
  std::string reason;
  std::vector<Vector> witness;
  std::optional<Matrix> iso;  // to J_n coordinates; present when the certificate is normalised
};

/// A locally complex algebra of dimension >= 2 is commutative iff it is J_n.
inline CommutativeVerdict is_commutative_Jn(const Algebra& a) {
  if (a.dim() < 2) throw PreconditionError("is_commutative_Jn needs dimension >= 2");
  LocallyComplexVerdict lc = is_locally_complex(a);
  if (!lc.holds) throw PreconditionError("algebra is not locally complex: " + lc.reason);
  CommutativeVerdict out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      if (a.multiply(a.basis(i), a.basis(j)) != a.multiply(a.basis(j), a.basis(i))) {
        out.holds = false;
        out.witness = {a.basis(i), a.basis(j)};
        out.reason = a.label(i) + " " + a.label(j) + " != " + a.label(j) + " " + a.label(i);
        return out;
      }
    }
  if (lc.certificate->normalized) out.iso = inverse(lc.certificate->change_of_basis);
  return out;
}

/// Moufang identity (xy)(zx) = (x(yz))x on basis triples (a sanity check,
/// not a decision procedure).
inline Verdict moufang_holds(const Algebra& a) {
  Verdict out;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
        Vector lhs = a.multiply(a.multiply(x, y), a.multiply(z, x));
        Vector rhs = a.multiply(a.multiply(x, a.multiply(y, z)), x);
        if (lhs != rhs) {
          out.holds = false;
          out.witness = {x, y, z};
          out.reason = "(xy)(zx) != (x(yz))x for " + a.label(i) + ", " + a.label(j) + ", " + a.label(k);
          return out;
        }
      }
  return out;
}

}  // namespace lcalg
