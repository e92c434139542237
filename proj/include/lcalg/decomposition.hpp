#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "lcalg/algebra.hpp"

namespace lcalg {

// Quadratic-algebra machinery: the decomposition A = R 1 + U, the form
// <u,v> = -1/2 (uv + vu) on U, Gram-Schmidt in U, and exact normalisation
// to u^2 = -1 where a rational square root is available.

/// -1/2 (uv + vu), which is a scalar for u, v in U.
inline Rational u_inner(const Algebra& a, const Vector& u, const Vector& v) {
  Vector s = a.multiply(u, v) + a.multiply(v, u);
  auto scalar = a.as_scalar(s);
  if (!scalar) throw PreconditionError("uv + vu is not a scalar; elements are not in U");
  return -*scalar / 2;
}

/// -u^2 for u in U, i.e. the squared length of u.
inline Rational u_norm(const Algebra& a, const Vector& u) {
  auto scalar = a.as_scalar(a.multiply(u, u));
  if (!scalar) throw PreconditionError("u^2 is not a scalar; element is not in U");
  return -*scalar;
}

/// b - t(b)/2 for every non-unit basis vector b, in basis order.
inline std::vector<Vector> u_generators(const Algebra& a) {
  if (!a.is_unital()) throw PreconditionError("U decomposition needs a unital algebra");
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i == *a.unit()) continue;
    Vector b = a.basis(i);
    MinimalQuadratic q = minimal_quadratic(a, b);
    if (q.kind != MinimalQuadratic::Kind::Quadratic) {
      throw PreconditionError("algebra is not quadratic: 1, " + a.label(i) + ", " + a.label(i) + "^2 are independent");
    }
    axpy(b, -q.trace / 2, a.one());
    gens.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!a.as_scalar(a.multiply(gens[i], gens[i]))) throw PreconditionError("u^2 is not scalar on the U basis");
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!a.as_scalar(a.multiply(gens[i], gens[j]) + a.multiply(gens[j], gens[i]))) {
        throw PreconditionError("uv + vu is not scalar on the U basis");
      }
    }
  }
  return gens;
}

/// U = { u not in R : u^2 in R } + {0} of a quadratic algebra.
inline Subspace compute_U(const Algebra& a) { return Subspace::span(u_generators(a), a.dim()); }

/// An element of U together with its square -square_norm. `normalized`
/// means square_norm == 1.
struct ScaledElement {
  Vector element;
  Rational square_norm;
  bool normalized = false;
};

/// v / sqrt(-v^2) when -v^2 is a positive rational square.
inline std::optional<Vector> normalize_exact(const Algebra& a, const Vector& v) {
  Rational n = u_norm(a, v);
  if (sgn(n) <= 0) return std::nullopt;
  auto root = rational_sqrt(n);
  if (!root) return std::nullopt;
  return Rational(1 / *root) * v;
}

namespace detail {

/// m / s^2 for the largest square s^2 found by trial division up to `bound`.
inline mpz_class strip_square_factors(mpz_class m, unsigned long bound = 1000000) {
  mpz_class out = 1;
  for (unsigned long p = 2; p <= bound; ++p) {
    mpz_class pp = static_cast<unsigned long>(p) * p;
    if (pp > m) break;
    unsigned count = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++count;
    }
    if (count % 2 == 1) out *= p;
  }
  if (mpz_perfect_square_p(m.get_mpz_t()) == 0) out *= m;
  return out;
}

/// Representation of m as a sum of `count` integer squares (count 1, 2 or 4),
/// searched exhaustively up to an iteration budget.
inline std::optional<std::vector<mpz_class>> sum_of_squares(const mpz_class& m, std::size_t count,
                                                             std::size_t budget = 20000000) {
  auto isqrt = [](const mpz_class& v) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
  };
  auto is_sq = [](const mpz_class& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0; };
  if (count == 1) {
    if (is_sq(m)) return std::vector<mpz_class>{isqrt(m)};
    return std::nullopt;
  }
  std::size_t steps = 0;
  if (count == 2) {
    for (mpz_class a = isqrt(m); a >= 0; --a) {
      if (++steps > budget) return std::nullopt;
      mpz_class r = m - a * a;
      if (is_sq(r)) return std::vector<mpz_class>{a, isqrt(r)};
    }
    return std::nullopt;
  }
  if (count == 4) {
    for (mpz_class a = isqrt(m); a >= 0; --a) {
      mpz_class ra = m - a * a;
      for (mpz_class b = isqrt(ra); b >= 0; --b) {
        mpz_class rb = ra - b * b;
        for (mpz_class c = isqrt(rb); c >= 0; --c) {
          if (++steps > budget) return std::nullopt;
          mpz_class rc = rb - c * c;
          if (is_sq(rc)) return std::vector<mpz_class>{a, b, c, isqrt(rc)};
        }
      }
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

/// Given mutually orthogonal w_0..w_{k-1} in U of one common squared length N
/// (k = 1, 2 or >= 4), finds integer c with sum c_i w_i of rational unit length.
/// Uses N (c_1^2 + ... ) = square whenever c_1^2 + ... = p q / s^2 for N = p/q.
inline std::optional<Vector> unit_in_orthogonal_family(const Algebra& a, const std::vector<Vector>& family) {
  if (family.empty()) return std::nullopt;
  Rational n = u_norm(a, family[0]);
  if (sgn(n) <= 0) return std::nullopt;
  const std::size_t k = family.size() >= 4 ? 4 : family.size() >= 2 ? 2 : 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (u_norm(a, family[i]) != n) return std::nullopt;
    for (std::size_t j = i + 1; j < k; ++j)
      if (sgn(u_inner(a, family[i], family[j])) != 0) return std::nullopt;
  }
  mpz_class target = detail::strip_square_factors(mpz_class(n.get_num() * n.get_den()));
  auto coeffs = detail::sum_of_squares(target, k);
  if (!coeffs) return std::nullopt;
  Vector w = zero_vector(a.dim());
  for (std::size_t i = 0; i < k; ++i) axpy(w, Rational((*coeffs)[i]), family[i]);
  return normalize_exact(a, w);
}

/// u minus its <,>-projection onto the span of the mutually orthogonal
/// `basis` whose squared lengths are `norms`.
inline Vector project_out(const Algebra& a, Vector u, const std::vector<Vector>& basis, const std::vector<Rational>& norms) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rational coeff = u_inner(a, u, basis[i]) / norms[i];
    axpy(u, -coeff, basis[i]);
  }
  return u;
}

/// Given e_1..e_k in U with e_i^2 = -1, pairwise anticommuting, returns a new
/// element anticommuting with all of them: v = u + sum alpha_i e_i with
/// alpha_i = 1/2 (u e_i + e_i u), scaled to v^2 = -1 when -v^2 is a rational
/// square. Candidates u run over the U basis; the first one with an exact
/// normalisation wins, otherwise the first nonzero v is returned unscaled.
inline ScaledElement extend_anticommuting_basis(const Algebra& a, const std::vector<Vector>& existing) {
  for (std::size_t i = 0; i < existing.size(); ++i) {
    a.check(existing[i]);
    if (a.multiply(existing[i], existing[i]) != -a.one()) {
      throw PreconditionError("existing element " + std::to_string(i + 1) + " does not square to -1");
    }
    for (std::size_t j = i + 1; j < existing.size(); ++j) {
      if (a.multiply(existing[i], existing[j]) != -a.multiply(existing[j], existing[i])) {
        throw PreconditionError("existing elements do not anticommute");
      }
    }
  }
  const std::vector<Rational> ones(existing.size(), Rational(1));
  std::optional<ScaledElement> fallback;
  for (const Vector& u : u_generators(a)) {
    Vector v = project_out(a, u, existing, ones);
    if (is_zero(v)) continue;
    Rational n = u_norm(a, v);
    if (sgn(n) <= 0) throw PreconditionError("form -1/2(uv+vu) is not positive definite on U");
    if (auto unit = normalize_exact(a, v)) return {*unit, Rational(1), true};
    if (!fallback) fallback = ScaledElement{v, n, false};
  }
  if (!fallback) throw PreconditionError("existing elements already span U");
  return *fallback;
}

/// Orthogonal basis of U: every element squares to -square_norms[i] and distinct elements anticommute.
struct OrthogonalUBasis {
  std::vector<Vector> elements;
  std::vector<Rational> square_norms;
  bool normalized = false;  // every square norm equals 1
};

/// Vector u in U with -u^2 <= 0, witnessing that the form is not positive definite.
struct IndefiniteWitness {
  Vector element;
  Rational square_norm;
};

/// Gram-Schmidt over U. Prefers candidates whose projection has a rational
/// unit normalisation (single generators, then sums and differences of two).
inline std::variant<OrthogonalUBasis, IndefiniteWitness> orthogonal_u_basis(const Algebra& a) {
  const std::vector<Vector> gens = u_generators(a);
  OrthogonalUBasis out;
  out.normalized = true;
  const std::size_t target = gens.size();
  while (out.elements.size() < target) {
    std::vector<Vector> projected;
    for (const auto& g : gens) {
      Vector v = project_out(a, g, out.elements, out.square_norms);
      if (is_zero(v)) continue;
      Rational n = u_norm(a, v);
      if (sgn(n) <= 0) return IndefiniteWitness{v, n};
      projected.push_back(std::move(v));
    }
    if (projected.empty()) throw InternalError("Gram-Schmidt ran out of candidates");
    std::optional<Vector> chosen;
    for (const auto& v : projected) {
      if ((chosen = normalize_exact(a, v))) break;
    }
    for (std::size_t i = 0; !chosen && i < projected.size(); ++i)
      for (std::size_t j = i + 1; !chosen && j < projected.size(); ++j) {
        for (int s : {1, -1}) {
          Vector w = projected[i];
          axpy(w, Rational(s), projected[j]);
          if (is_zero(w)) continue;
          if (sgn(u_norm(a, w)) <= 0) return IndefiniteWitness{w, u_norm(a, w)};
          if ((chosen = normalize_exact(a, w))) break;
        }
      }
    if (chosen) {
      out.square_norms.push_back(Rational(1));
      out.elements.push_back(std::move(*chosen));
    } else {
      out.normalized = false;
      out.square_norms.push_back(u_norm(a, projected.front()));
      out.elements.push_back(projected.front());
    }
  }
  return out;
}

}  // namespace lcalg
