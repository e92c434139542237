#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcalg/cayley_dickson.hpp"
#include "lcalg/decomposition.hpp"
#include "lcalg/properties.hpp"

namespace lcalg {

struct HomomorphismCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violated_pair;
  std::string reason;
};

/// `map` sends A-coordinates to B-coordinates (B.dim x A.dim). Checks
/// map(1) = 1, map(e_i e_j) = map(e_i) map(e_j) and injectivity.
inline HomomorphismCheck check_homomorphism(const Matrix& map, const Algebra& a, const Algebra& b) {
  if (map.rows() != b.dim() || map.cols() != a.dim()) throw DimensionError("map must be dim(B) x dim(A)");
  HomomorphismCheck out;
  if (a.is_unital() && b.is_unital() && map.apply(a.one()) != b.one()) {
    out.ok = false;
    out.reason = "map(1) != 1";
    return out;
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(map.column(i));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (map.apply(a.multiply(a.basis(i), a.basis(j))) != b.multiply(images[i], images[j])) {
        out.ok = false;
        out.violated_pair = std::make_pair(i, j);
        out.reason = "map(" + a.label(i) + " " + a.label(j) + ") != map(" + a.label(i) + ") map(" + a.label(j) + ")";
        return out;
      }
    }
  if (rank(map) != a.dim()) {
    out.ok = false;
    out.reason = "map is not injective";
  }
  return out;
}

/// The subalgebra spanned by `basis` (which must be closed under the product),
/// written in that basis. basis[0] == 1 makes index 0 the unit.
inline Algebra restrict_to_subalgebra(const Algebra& a, const std::vector<Vector>& basis, std::vector<std::string> labels = {}) {
  const std::size_t m = basis.size();
  Matrix cols = Matrix::from_columns(basis, a.dim());
  if (rank(cols) != m) throw PreconditionError("subalgebra basis is not independent");
  std::vector<Rational> c(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto coords = solve(cols, a.multiply(basis[i], basis[j]));
      if (!coords) throw PreconditionError("span is not closed under multiplication");
      for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = (*coords)[k];
    }
  std::optional<std::size_t> unit;
  if (a.is_unital() && basis[0] == a.one()) unit = 0;
  return Algebra(m, std::move(c), unit, std::move(labels));
}

/// tag names one of R, C, H, O, TO, S, TS. `basis` holds, as columns in the
/// input coordinates, the preimages of the named algebra's basis; `iso` is its
/// inverse and maps input coordinates to named coordinates.
struct RecognitionResult {
  std::string tag;
  Matrix iso;
  Matrix basis;
};

namespace detail {

/// Some element of unit length among the candidates, their sums and differences.
inline std::optional<Vector> find_unit(const Algebra& a, const std::vector<Vector>& candidates) {
  for (const auto& v : candidates)
    if (auto u = normalize_exact(a, v)) return u;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      for (int s : {1, -1}) {
        Vector w = candidates[i];
        axpy(w, Rational(s), candidates[j]);
        if (is_zero(w)) continue;
        if (auto u = normalize_exact(a, w)) return u;
      }
  return std::nullopt;
}

/// Unit element from `scaled`, or from the orthogonal family {w, x_1 w, ...}.
inline Vector unit_or_family(const Algebra& a, const ScaledElement& scaled, const std::vector<Vector>& left_factors,
                             const char* what) {
  if (scaled.normalized) return scaled.element;
  std::vector<Vector> family{scaled.element};
  for (const auto& x : left_factors) family.push_back(a.multiply(x, scaled.element));
  if (auto u = unit_in_orthogonal_family(a, family)) return *u;
  throw NormalizationError(std::string("no rational unit-length choice for ") + what);
}

inline RecognitionResult finish_recognition(const Algebra& a, const std::string& tag, const std::vector<Vector>& basis) {
  Matrix b = Matrix::from_columns(basis, a.dim());
  auto iso = inverse(b);
  if (!iso) throw InternalError("constructed basis for " + tag + " is singular");
  NamedAlgebra target = named_algebra(tag);
  HomomorphismCheck h = check_homomorphism(*iso, a, target.algebra);
  if (!h.ok) throw InternalError("constructed map to " + tag + " is not multiplicative: " + h.reason);
  return {tag, *iso, b};
}

}  // namespace detail

/// Frobenius/Zorn recognition of an alternative locally complex algebra:
/// i; j anticommuting with i; k = ij; e4 anticommuting with i, j, k and
/// e5 = e1 e4, e6 = e2 e4, e7 = e3 e4.
inline RecognitionResult recognize_alternative_division(const Algebra& a) {
  if (!a.is_unital()) throw PreconditionError("algebra is not unital");
  Verdict alt = is_alternative(a);
  if (!alt.holds) throw PreconditionError("algebra is not alternative: " + alt.reason);
  LocallyComplexVerdict lc = is_locally_complex(a);
  if (!lc.holds) throw PreconditionError("algebra is not locally complex: " + lc.reason);
  const std::size_t n = a.dim();
  if (n == 1) return detail::finish_recognition(a, "R", {a.one()});
  if (n != 2 && n != 4 && n != 8) throw InternalError("alternative locally complex algebra of dimension " + std::to_string(n));

  std::vector<Vector> candidates = u_generators(a);
  for (std::size_t i = 1; i < lc.certificate->basis.size(); ++i) candidates.push_back(lc.certificate->basis[i]);
  auto i = detail::find_unit(a, candidates);
  if (!i) throw NormalizationError("no element with i^2 = -1 found over the rationals");
  if (n == 2) return detail::finish_recognition(a, "C", {a.one(), *i});

  Vector j = detail::unit_or_family(a, extend_anticommuting_basis(a, {*i}), {*i}, "j");
  Vector k = a.multiply(*i, j);
  if (n == 4) return detail::finish_recognition(a, "H", {a.one(), *i, j, k});

  Vector e4 = detail::unit_or_family(a, extend_anticommuting_basis(a, {*i, j, k}), {*i, j, k}, "e4");
  return detail::finish_recognition(
      a, "O", {a.one(), *i, j, k, e4, a.multiply(*i, e4), a.multiply(j, e4), a.multiply(k, e4)});
}

namespace detail {

/// q = p + (e_i e_j)(e_i (e_j p)).
inline Vector remedy(const Algebra& a, const std::vector<Vector>& e, std::size_t i, std::size_t j, const Vector& p) {
  return p + a.multiply(a.multiply(e[i], e[j]), a.multiply(e[i], a.multiply(e[j], p)));
}

/// (e_i e_j) y - eps e_i (e_j y) as a linear map in y.
inline Matrix sign_defect(const Algebra& a, const std::vector<Vector>& e, std::size_t i, std::size_t j, int eps) {
  Matrix lhs = a.left_mul_matrix(a.multiply(e[i], e[j]));
  Matrix rhs = a.left_mul_matrix(e[i]) * a.left_mul_matrix(e[j]);
  Matrix out(a.dim(), a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = lhs(r, c) - eps * rhs(r, c);
  return out;
}

inline bool sign_holds(const Algebra& a, const std::vector<Vector>& e, std::size_t i, std::size_t j, int eps, const Vector& y) {
  return is_zero(sign_defect(a, e, i, j, eps).apply(y));
}

}  // namespace detail

/// Classification of a super-alternative locally complex algebra with the
/// given grading: R, C, H, O, TO, S or TS.
inline RecognitionResult classify_super_alternative(const Algebra& a, const Grading& g) {
  if (!a.is_unital()) throw PreconditionError("algebra is not unital");
  Verdict sa = is_super_alternative(a, g);
  if (!sa.holds) throw PreconditionError("algebra is not super-alternative: " + sa.reason);
  LocallyComplexVerdict lc = is_locally_complex(a);
  if (!lc.holds) throw PreconditionError("algebra is not locally complex: " + lc.reason);

  std::vector<Vector> even_basis{a.one()};
  {
    Subspace so_far = Subspace::span(even_basis, a.dim());
    for (const auto& v : g.even.basis_vectors()) {
      if (so_far.contains(v)) continue;
      even_basis.push_back(v);
      so_far = Subspace::span(even_basis, a.dim());
    }
  }
  Algebra even = restrict_to_subalgebra(a, even_basis);
  RecognitionResult rec0 = recognize_alternative_division(even);
  std::vector<Vector> e;  // named basis of A_0 in A coordinates
  for (std::size_t c = 0; c < rec0.basis.cols(); ++c) {
    Vector v = zero_vector(a.dim());
    for (std::size_t m = 0; m < even_basis.size(); ++m) axpy(v, rec0.basis(m, c), even_basis[m]);
    e.push_back(std::move(v));
  }
  const std::vector<Vector> odd = g.odd.basis_vectors();
  if (odd.empty()) return detail::finish_recognition(a, rec0.tag, e);
  if (odd.size() != even_basis.size()) {
    throw PreconditionError("dim A_0 = " + std::to_string(even_basis.size()) + " but dim A_1 = " + std::to_string(odd.size()));
  }

  const Vector& w = odd.front();
  auto odd_unit = [&](const std::vector<Vector>& left_factors) {
    ScaledElement s{w, u_norm(a, w), false};
    if (auto unit = normalize_exact(a, w)) s = {*unit, Rational(1), true};
    return detail::unit_or_family(a, s, left_factors, "odd unit");
  };

  if (rec0.tag == "R") return detail::finish_recognition(a, "C", {a.one(), odd_unit({})});
  if (rec0.tag == "C") {
    Vector j = odd_unit({e[1]});
    return detail::finish_recognition(a, "H", {a.one(), e[1], j, a.multiply(e[1], j)});
  }
  if (rec0.tag == "H") {
    Vector f = odd_unit({e[1], e[2], e[3]});
    std::vector<Vector> fam{f, a.multiply(e[1], f), a.multiply(e[2], f), a.multiply(e[3], f)};
    auto lambda = solve(Matrix::from_columns(fam, a.dim()), a.multiply(e[1], a.multiply(e[2], f)));
    if (!lambda) throw InternalError("i(jf) is not in span{f, if, jf, kf}");
    const Rational& l4 = (*lambda)[3];
    std::string tag;
    if (l4 == 1) {
      tag = "TO";
    } else if (l4 == -1) {
      tag = "O";
    } else {
      throw InternalError("lambda_4 = " + to_string(l4) + " is neither 1 nor -1");
    }
    return detail::finish_recognition(a, tag, {a.one(), e[1], e[2], e[3], fam[0], fam[1], fam[2], fam[3]});
  }

  // A_0 = O: remedy a starting u in the order (1,2), (1,4), (2,4), (3,4).
  Vector u = w;
  Vector v = detail::remedy(a, e, 1, 2, u);
  if (is_zero(v)) v = a.multiply(e[3], u);
  Vector ww = detail::remedy(a, e, 1, 4, v);
  if (is_zero(ww)) ww = a.multiply(e[2], v);
  Vector x = detail::remedy(a, e, 2, 4, ww);
  if (is_zero(x)) x = a.multiply(e[1], ww);
  Vector y = detail::remedy(a, e, 3, 4, x);
  if (is_zero(y)) y = x;
  if (is_zero(y)) throw InternalError("remedy pipeline produced zero");
  int eps = 0;
  if (detail::sign_holds(a, e, 3, 4, 1, y)) {
    eps = 1;
  } else if (detail::sign_holds(a, e, 3, 4, -1, y)) {
    eps = -1;
  } else {
    throw InternalError("(e3 e4) y is neither e3(e4 y) nor -e3(e4 y)");
  }
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 4}, std::pair{2, 4}}) {
    if (!detail::sign_holds(a, e, i, j, -1, y)) throw InternalError("remedied element violates a sign condition");
  }
  std::optional<Vector> f8 = normalize_exact(a, y);
  if (!f8) {
    // Any nonzero odd element meeting the same four sign conditions will do.
    Matrix odd_cols = Matrix::from_columns(odd, a.dim());
    std::vector<Vector> rows;
    auto stack = [&](const Matrix& m) {
      Matrix restricted = m * odd_cols;
      for (std::size_t r = 0; r < restricted.rows(); ++r) rows.push_back(restricted.row(r));
    };
    stack(detail::sign_defect(a, e, 1, 2, -1));
    stack(detail::sign_defect(a, e, 1, 4, -1));
    stack(detail::sign_defect(a, e, 2, 4, -1));
    stack(detail::sign_defect(a, e, 3, 4, eps));
    std::vector<Vector> sols;
    for (const auto& c : kernel(Matrix::from_rows(rows, odd.size()))) sols.push_back(odd_cols.apply(c));
    f8 = detail::find_unit(a, sols);
    if (!f8 && !sols.empty()) f8 = unit_in_orthogonal_family(a, {sols.front()});
    if (!f8) throw NormalizationError("no rational unit-length element satisfies the odd sign conditions");
  }
  std::vector<Vector> basis = e;
  basis.push_back(*f8);
  for (std::size_t i = 1; i < 8; ++i) basis.push_back(a.multiply(e[i], *f8));
  return detail::finish_recognition(a, eps == 1 ? "TS" : "S", basis);
}

struct AlterScalarSpace {
  Subspace solutions;
  bool has_alter_scalars = false;
};

/// All a with x^2 a = x(xa) for every x, from the polarised family of x.
inline AlterScalarSpace alter_scalar_space(const Algebra& a) {
  const std::size_t n = a.dim();
  Subspace constraints(n);
  std::vector<Vector> rows;
  for (const Vector& x : detail::polarised_family(n)) {
    Matrix lx = a.left_mul_matrix(x);
    Matrix d = a.left_mul_matrix(a.multiply(x, x));
    Matrix sq = lx * lx;
    for (std::size_t r = 0; r < n; ++r) {
      Vector row = d.row(r) - sq.row(r);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
    if (rows.size() > 4 * n) {
      constraints = constraints + Subspace::span(rows, n);
      rows.clear();
      if (constraints.dim() == n) break;
    }
  }
  if (!rows.empty()) constraints = constraints + Subspace::span(rows, n);
  Subspace sol = constraints.dim() == 0 ? Subspace::whole(n) : Subspace::span(kernel(constraints.basis()), n);
  return {sol, sol.dim() >= 2};
}

/// Ann(x) = { y : xy = 0 }.
inline Subspace annihilator(const Algebra& a, const Vector& x) {
  return Subspace::span(kernel(a.left_mul_matrix(x)), a.dim());
}

}  // namespace lcalg
