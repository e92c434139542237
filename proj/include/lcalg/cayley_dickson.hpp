#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcalg/algebra.hpp"
#include "lcalg/tables.hpp"

namespace lcalg {

/// Algebra with a linear involution x -> x*, given as a matrix acting on
/// coordinates.
struct InvolutiveAlgebra {
  Algebra algebra;
  Matrix star;
};

/// Z2-grading A = A_0 + A_1.
struct Grading {
  Subspace even;
  Subspace odd;

  static Grading from_indices(std::size_t dim, const std::vector<std::size_t>& even, const std::vector<std::size_t>& odd) {
    std::vector<Vector> e, o;
    for (auto i : even) e.push_back(unit_vector(dim, i));
    for (auto i : odd) o.push_back(unit_vector(dim, i));
    return {Subspace::span(e, dim), Subspace::span(o, dim)};
  }

  static Grading trivial(std::size_t dim) { return {Subspace::whole(dim), Subspace(dim)}; }
};

inline Vector involution_apply(const InvolutiveAlgebra& a, const Vector& x) { return a.star.apply(x); }

/// First violated involution axiom, or nullopt when `a` is a valid involutive algebra.
inline std::optional<std::string> involution_defect(const InvolutiveAlgebra& a) {
  const Algebra& alg = a.algebra;
  const std::size_t n = alg.dim();
  if (a.star.rows() != n || a.star.cols() != n) return "involution matrix has the wrong size";
  if (!(a.star * a.star == Matrix::identity(n))) return "star is not an involution";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = a.star.apply(alg.multiply(alg.basis(i), alg.basis(j)));
      Vector rhs = alg.multiply(a.star.apply(alg.basis(j)), a.star.apply(alg.basis(i)));
      if (lhs != rhs) return "(ab)* != b*a* for " + alg.label(i) + ", " + alg.label(j);
    }
  if (alg.is_unital()) {
    auto scalar_checks = [&](const Vector& x) -> std::optional<std::string> {
      Vector xs = a.star.apply(x);
      if (!alg.as_scalar(x + xs)) return "x + x* is not scalar";
      Vector p = alg.multiply(x, xs);
      if (!alg.as_scalar(p) || p != alg.multiply(xs, x)) return "x x* is not a scalar equal to x* x";
      return std::nullopt;
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (auto d = scalar_checks(alg.basis(i))) return *d + " at " + alg.label(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (auto d = scalar_checks(alg.basis(i) + alg.basis(j))) return *d + " at " + alg.label(i) + "+" + alg.label(j);
      }
    }
  }
  return std::nullopt;
}

/// First violated grading axiom, or nullopt when `g` grades `a`.
inline std::optional<std::string> grading_defect(const Algebra& a, const Grading& g) {
  const std::size_t n = a.dim();
  if (g.even.ambient_dim() != n || g.odd.ambient_dim() != n) return "grading ambient dimension mismatch";
  if (g.even.dim() + g.odd.dim() != n || (g.even + g.odd).dim() != n) return "even and odd parts do not span the algebra as a direct sum";
  if (a.is_unital() && !g.even.contains(a.one())) return "unit is not even";
  const auto even = g.even.basis_vectors();
  const auto odd = g.odd.basis_vectors();
  auto check = [&](const std::vector<Vector>& xs, const std::vector<Vector>& ys, const Subspace& target,
                   const char* what) -> std::optional<std::string> {
    for (const auto& x : xs)
      for (const auto& y : ys) {
        if (!target.contains(a.multiply(x, y))) return std::string(what);
      }
    return std::nullopt;
  };
  if (auto d = check(even, even, g.even, "A0 A0 is not contained in A0")) return d;
  if (auto d = check(even, odd, g.odd, "A0 A1 is not contained in A1")) return d;
  if (auto d = check(odd, even, g.odd, "A1 A0 is not contained in A1")) return d;
  if (auto d = check(odd, odd, g.even, "A1 A1 is not contained in A0")) return d;
  return std::nullopt;
}

/// One doubling step: pairs (a, b) with (a,b)(c,d) = (ac - d*b, da + bc*)
/// and (a,b)* = (a*, -b). Index i < n holds (e_i, 0), index n + i holds (0, e_i).
inline InvolutiveAlgebra cayley_dickson(const InvolutiveAlgebra& b) {
  const Algebra& base = b.algebra;
  if (!base.is_unital()) throw PreconditionError("Cayley-Dickson doubling needs a unital algebra");
  if (auto d = involution_defect(b)) throw PreconditionError("invalid involution: " + *d);
  const std::size_t n = base.dim();
  const std::size_t m = 2 * n;
  std::vector<Rational> c(m * m * m, Rational(0));
  auto put = [&](std::size_t i, std::size_t j, std::size_t offset, const Vector& v, int sign) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(v[k]) != 0) c[(i * m + j) * m + offset + k] += sign * v[k];
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    Vector ei = base.basis(i);
    Vector ei_star = b.star.apply(ei);
    for (std::size_t j = 0; j < n; ++j) {
      Vector ej = base.basis(j);
      Vector ej_star = b.star.apply(ej);
      put(i, j, 0, base.multiply(ei, ej), 1);                  // (e_i,0)(e_j,0) = (e_i e_j, 0)
      put(i, n + j, n, base.multiply(ej, ei), 1);              // (e_i,0)(0,e_j) = (0, e_j e_i)
      put(n + i, j, n, base.multiply(ei, ej_star), 1);         // (0,e_i)(e_j,0) = (0, e_i e_j*)
      put(n + i, n + j, 0, base.multiply(ej_star, ei), -1);    // (0,e_i)(0,e_j) = (-e_j* e_i, 0)
    }
  }
  Matrix star(m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      star(i, j) = b.star(i, j);
      star(n + i, n + j) = i == j ? Rational(-1) : Rational(0);
    }
  return {Algebra(m, std::move(c), *base.unit()), std::move(star)};
}

inline InvolutiveAlgebra reals() {
  return {Algebra(1, {Rational(1)}, 0, {"1"}), Matrix::identity(1)};
}

/// The Cayley-Dickson algebra A_k of dimension 2^k.
inline InvolutiveAlgebra cayley_dickson_algebra(std::size_t k) {
  InvolutiveAlgebra a = reals();
  for (std::size_t step = 0; step < k; ++step) a = cayley_dickson(a);
  return a;
}

/// Natural grading of A_k: first half even, second half odd.
inline Grading natural_grading(std::size_t dim) {
  if (dim == 1) return Grading::trivial(1);
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < dim; ++i) (i < dim / 2 ? even : odd).push_back(i);
  return Grading::from_indices(dim, even, odd);
}

/// J_k: e_i e_j = -delta_ij on the non-unit basis.
inline Algebra jordan_algebra(std::size_t k) {
  if (k == 0) throw PreconditionError("J_k needs k >= 1");
  std::vector<Rational> c(k * k * k, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t l) -> Rational& { return c[(i * k + j) * k + l]; };
  for (std::size_t i = 0; i < k; ++i) {
    at(0, i, i) = 1;
    at(i, 0, i) = 1;
  }
  for (std::size_t i = 1; i < k; ++i) at(i, i, 0) = -1;
  return Algebra(k, std::move(c), 0);
}

/// The standard involution 1* = 1, e_i* = -e_i.
inline Matrix standard_star(std::size_t dim) {
  Matrix s = Matrix::identity(dim);
  for (std::size_t i = 1; i < dim; ++i) s(i, i) = -1;
  return s;
}

struct NamedAlgebra {
  std::string name;
  Algebra algebra;
  std::optional<Matrix> star;
  std::optional<Grading> grading;
};

inline std::string canonical_name(std::string name) {
  std::string out;
  for (char ch : name) {
    if (ch != '_' && ch != ' ' && ch != '(' && ch != ')') out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  if (out == "JN") return out;
  if (out.rfind("JN", 0) == 0) out = "J" + out.substr(2);
  return out;
}

/// R, C, H, O, S, A<k>, TO, TS, J<k> (also spelled Jn(k)).
inline NamedAlgebra named_algebra(const std::string& requested) {
  const std::string name = canonical_name(requested);
  auto cd = [&](std::size_t k) {
    InvolutiveAlgebra a = cayley_dickson_algebra(k);
    Grading g = natural_grading(a.algebra.dim());
    return NamedAlgebra{name, std::move(a.algebra), std::move(a.star), std::move(g)};
  };
  if (name == "R") return cd(0);
  if (name == "C") return cd(1);
  if (name == "H") return cd(2);
  if (name == "O") return cd(3);
  if (name == "S") return cd(4);
  if (name == "TO") {
    Algebra a = tables::from_signed_table(tables::twisted_octonion, 'f');
    return {name, a, standard_star(8), Grading::from_indices(8, {0, 1, 2, 3}, {4, 5, 6, 7})};
  }
  if (name == "TS") {
    Algebra a = tables::from_signed_table(tables::twisted_sedenion, 'f');
    std::vector<std::size_t> even, odd;
    for (std::size_t i = 0; i < 16; ++i) (i < 8 ? even : odd).push_back(i);
    return {name, a, standard_star(16), Grading::from_indices(16, even, odd)};
  }
  auto numeric_suffix = [&](char prefix) -> std::optional<std::size_t> {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    return std::stoul(name.substr(1));
  };
  if (auto k = numeric_suffix('A')) {
    if (*k > 6) throw PreconditionError("A_k supported for k <= 6");
    return cd(*k);
  }
  if (auto k = numeric_suffix('J')) {
    if (*k == 0) throw PreconditionError("J_k needs k >= 1");
    return {name, jordan_algebra(*k), standard_star(*k), std::nullopt};
  }
  throw PreconditionError("unknown algebra name '" + requested + "'");
}

}  // namespace lcalg
