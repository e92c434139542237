#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lcalg/cayley_dickson.hpp"

namespace lcalg {

/// Seed used wherever a caller does not supply one.
inline constexpr std::uint64_t default_seed = 20240607;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Vector random_vector(Rng& rng, std::size_t n, int max_num = 5, int max_den = 4) {
  Vector v(n);
  for (auto& c : v) c = random_rational(rng, max_num, max_den);
  return v;
}

/// Rational orthogonal matrix with determinant 1: the Cayley transform
/// (I - K)(I + K)^-1 of a random skew matrix K.
inline Matrix random_orthogonal(Rng& rng, std::size_t n, int max_num = 3, int max_den = 2) {
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      k(i, j) = random_rational(rng, max_num, max_den);
      k(j, i) = -k(i, j);
    }
  Matrix plus = Matrix::identity(n), minus = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      plus(i, j) += k(i, j);
      minus(i, j) -= k(i, j);
    }
  auto inv = inverse(plus);
  if (!inv) throw InternalError("I + K is singular for skew K");
  return minus * *inv;
}

/// New basis (as columns) for a unital algebra: the non-unit basis vectors
/// are rotated by rational orthogonal matrices and shifted by random scalars.
/// With `groups`, each index group is rotated separately (unit excluded) and
/// only indices in groups[0] receive scalar shifts; this keeps a coordinate
/// grading with even part groups[0] intact.
inline Matrix random_rotation_basis(const Algebra& a, Rng& rng, std::vector<std::vector<std::size_t>> groups = {}) {
  if (!a.is_unital()) throw PreconditionError("random rotations need a unital algebra");
  const std::size_t n = a.dim();
  const std::size_t unit = *a.unit();
  if (groups.empty()) {
    groups.emplace_back();
    for (std::size_t i = 0; i < n; ++i) groups[0].push_back(i);
  }
  Matrix basis(n, n);
  basis(unit, unit) = 1;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    std::vector<std::size_t> idx;
    for (auto i : groups[gi])
      if (i != unit) idx.push_back(i);
    if (idx.empty()) continue;
    Matrix q = random_orthogonal(rng, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
      for (std::size_t r = 0; r < idx.size(); ++r) basis(idx[r], idx[c]) = q(r, c);
      if (gi == 0) basis(unit, idx[c]) = random_rational(rng, 3, 2);
    }
  }
  return basis;
}

/// Coordinate index sets of a grading whose parts are spanned by basis vectors.
inline std::optional<std::vector<std::vector<std::size_t>>> coordinate_groups(const Grading& g) {
  std::vector<std::vector<std::size_t>> groups(2);
  const std::size_t n = g.even.ambient_dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(n, i);
    if (g.even.contains(e)) {
      groups[0].push_back(i);
    } else if (g.odd.contains(e)) {
      groups[1].push_back(i);
    } else {
      return std::nullopt;
    }
  }
  return groups;
}

/// The grading `g` expressed in the coordinates of the new basis.
inline Grading transform_grading(const Grading& g, const Matrix& basis) {
  auto inv = inverse(basis);
  if (!inv) throw PreconditionError("change of basis is singular");
  auto map = [&](const Subspace& s) {
    std::vector<Vector> vs;
    for (const auto& v : s.basis_vectors()) vs.push_back(inv->apply(v));
    return Subspace::span(vs, s.ambient_dim());
  };
  return {map(g.even), map(g.odd)};
}

}  // namespace lcalg
