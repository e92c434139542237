#include <gtest/gtest.h>

#include <variant>

#include "lcalg/cayley_dickson.hpp"
#include "lcalg/decomposition.hpp"
#include "lcalg/random.hpp"

using namespace lcalg;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Diagonal 3x3 matrices: unital, commutative, associative, full of idempotents.
Algebra diagonal3() {
  // Basis 1, p, q with p^2 = p, q^2 = q, pq = qp = 0.
  std::vector<Rational> c(27, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * 3 + j) * 3 + k]; };
  for (std::size_t i = 0; i < 3; ++i) {
    at(0, i, i) = 1;
    at(i, 0, i) = 1;
  }
  at(1, 1, 1) = 1;
  at(2, 2, 2) = 1;
  return Algebra(3, c, 0, {"1", "p", "q"});
}

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), ratio(1, 2));
  EXPECT_EQ(parse_rational("-0.25"), ratio(-1, 4));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational(" 12 "), Rational(12));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/-"), ParseError);
}

TEST(Rational, ExactSquareRoots) {
  EXPECT_EQ(*rational_sqrt(ratio(9, 4)), ratio(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-4)).has_value());
  EXPECT_EQ(ratio(6, 4), ratio(3, 2));
}

TEST(Matrix, DeterminantInverseSolve) {
  Matrix m = Matrix::from_rows({vec({2, 1, 0}), vec({1, 3, 1}), vec({0, 1, 4})}, 3);
  EXPECT_EQ(determinant(m), Rational(18));
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, Matrix::identity(3));
  auto x = solve(m, vec({3, 5, 5}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, vec({1, 1, 1}));
  Matrix singular = Matrix::from_rows({vec({1, 2}), vec({2, 4})}, 2);
  EXPECT_FALSE(inverse(singular).has_value());
  EXPECT_EQ(rank(singular), 1u);
  auto k = kernel(singular);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(singular.apply(k[0])));
}

TEST(Matrix, PositiveDefiniteness) {
  EXPECT_TRUE(is_positive_definite(Matrix::from_rows({vec({2, 1}), vec({1, 2})}, 2)));
  EXPECT_FALSE(is_positive_definite(Matrix::from_rows({vec({1, 2}), vec({2, 1})}, 2)));
  EXPECT_FALSE(is_positive_definite(Matrix::from_rows({vec({1, 0}), vec({0, 0})}, 2)));
}

TEST(Subspace, EqualityIsCanonical) {
  Subspace a = Subspace::span({vec({1, 1, 0}), vec({0, 1, 1})}, 3);
  Subspace b = Subspace::span({vec({1, 2, 1}), vec({2, 1, -1}), vec({1, 0, -1})}, 3);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
  EXPECT_TRUE(a.contains(vec({1, 0, -1})));
  EXPECT_FALSE(a.contains(vec({0, 0, 1})));
  EXPECT_EQ((a + Subspace::span({vec({0, 0, 1})}, 3)), Subspace::whole(3));
}

TEST(Algebra, QuaternionProducts) {
  Algebra h = named_algebra("H").algebra;
  EXPECT_EQ(h.multiply(h.basis(1), h.basis(2)), h.basis(3));
  EXPECT_EQ(h.multiply(h.basis(2), h.basis(1)), -h.basis(3));
  EXPECT_EQ(h.multiply(h.basis(1), h.basis(1)), -h.one());
}

TEST(Algebra, RejectsBadInput) {
  EXPECT_THROW(Algebra(2, std::vector<Rational>(7)), DimensionError);
  Algebra h = named_algebra("H").algebra;
  EXPECT_THROW(h.multiply(vec({1, 0}), h.basis(1)), DimensionError);
}

TEST(Algebra, Bilinearity) {
  Rng rng(default_seed);
  for (const char* name : {"O", "TO", "S"}) {
    Algebra a = named_algebra(name).algebra;
    for (int k = 0; k < 10; ++k) {
      Rational al = random_rational(rng), be = random_rational(rng);
      Vector x = random_vector(rng, a.dim()), y = random_vector(rng, a.dim()), z = random_vector(rng, a.dim());
      EXPECT_EQ(a.multiply(al * x + be * y, z), al * a.multiply(x, z) + be * a.multiply(y, z));
      EXPECT_EQ(a.multiply(z, al * x + be * y), al * a.multiply(z, x) + be * a.multiply(z, y));
    }
  }
}

TEST(Algebra, MultiplicationMatricesAgree) {
  Algebra a = named_algebra("TS").algebra;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      EXPECT_EQ(a.left_mul_matrix(a.basis(i)).apply(a.basis(j)), a.multiply(a.basis(i), a.basis(j)));
      EXPECT_EQ(a.right_mul_matrix(a.basis(j)).apply(a.basis(i)), a.multiply(a.basis(i), a.basis(j)));
    }
}

TEST(Algebra, ChangeOfBasisIsConsistent) {
  Rng rng(7);
  Algebra o = named_algebra("O").algebra;
  Matrix b = random_rotation_basis(o, rng);
  Algebra r = o.change_basis(b);
  ASSERT_TRUE(r.is_unital());
  for (int k = 0; k < 10; ++k) {
    Vector x = random_vector(rng, 8), y = random_vector(rng, 8);
    EXPECT_EQ(b.apply(r.multiply(x, y)), o.multiply(b.apply(x), b.apply(y)));
  }
}

TEST(Algebra, MinimalQuadratic) {
  Algebra o = named_algebra("O").algebra;
  Vector x = o.one() + o.basis(1) + Rational(2) * o.basis(2);
  MinimalQuadratic q = minimal_quadratic(o, x);
  EXPECT_EQ(q.kind, MinimalQuadratic::Kind::Quadratic);
  EXPECT_EQ(q.trace, Rational(2));
  EXPECT_EQ(q.norm, Rational(6));
  EXPECT_EQ(minimal_quadratic(o, Rational(3) * o.one()).kind, MinimalQuadratic::Kind::Scalar);
  Algebra d = diagonal3();
  EXPECT_EQ(minimal_quadratic(d, d.basis(1) + Rational(2) * d.basis(2)).kind, MinimalQuadratic::Kind::NotQuadratic);
}

TEST(Algebra, GeneratedSubalgebra) {
  Algebra o = named_algebra("O").algebra;
  EXPECT_EQ(generated_subalgebra(o, {o.basis(1)}, true).dim(), 2u);
  Subspace q = generated_subalgebra(o, {o.basis(1), o.basis(2)}, true);
  EXPECT_EQ(q, Subspace::span({o.one(), o.basis(1), o.basis(2), o.basis(3)}, 8));
  EXPECT_EQ(generated_subalgebra(o, {o.basis(1), o.basis(2), o.basis(4)}, true).dim(), 8u);
  EXPECT_EQ(generated_subalgebra(o, {}, false).dim(), 0u);
}

TEST(Algebra, GeneratedSubalgebraIsIdempotent) {
  Rng rng(3);
  Algebra ts = named_algebra("TS").algebra;
  for (int k = 0; k < 5; ++k) {
    Vector x = ts.basis(1 + k) + ts.basis(15 - k);
    Subspace s = generated_subalgebra(ts, {x}, true);
    EXPECT_EQ(generated_subalgebra(ts, s.basis_vectors(), true), s);
  }
}

TEST(Decomposition, UnitComplement) {
  Algebra o = named_algebra("O").algebra;
  Subspace u = compute_U(o);
  EXPECT_EQ(u.dim(), 7u);
  EXPECT_FALSE(u.contains(o.one()));
  EXPECT_EQ(u_norm(o, o.basis(3)), Rational(1));
  EXPECT_EQ(u_inner(o, o.basis(1), o.basis(2)), Rational(0));
  EXPECT_EQ(u_inner(o, o.basis(1) + o.basis(2), o.basis(1)), Rational(1));
}

TEST(Decomposition, ExtendsAnticommutingFamilies) {
  Algebra h = named_algebra("H").algebra;
  ScaledElement e = extend_anticommuting_basis(h, {h.basis(1)});
  EXPECT_EQ(h.multiply(e.element, h.basis(1)), -h.multiply(h.basis(1), e.element));
  EXPECT_EQ(h.multiply(e.element, e.element), -e.square_norm * h.one());
  EXPECT_THROW(extend_anticommuting_basis(h, {h.basis(1), h.basis(2), h.basis(3)}), PreconditionError);
}

TEST(Decomposition, NormalisesWithTwoAndFourSquares) {
  Algebra o = named_algebra("O").algebra;
  // -(2 e1 + e2)^2 = 5 is not a square; the family trick still finds a unit.
  auto unit = unit_in_orthogonal_family(o, {Rational(2) * o.basis(1) + o.basis(2), o.basis(1) - Rational(2) * o.basis(2)});
  ASSERT_TRUE(unit.has_value());
  EXPECT_EQ(o.multiply(*unit, *unit), -o.one());
  EXPECT_FALSE(normalize_exact(o, o.basis(1) + o.basis(2)).has_value());
  auto n = normalize_exact(o, Rational(3) * o.basis(1) + Rational(4) * o.basis(2));
  ASSERT_TRUE(n.has_value());
  EXPECT_EQ(o.multiply(*n, *n), -o.one());
}

TEST(Decomposition, OrthogonalBasisOrWitness) {
  Rng rng(11);
  Algebra rot = named_algebra("O").algebra.change_basis(random_rotation_basis(named_algebra("O").algebra, rng));
  auto r = orthogonal_u_basis(rot);
  ASSERT_TRUE(std::holds_alternative<OrthogonalUBasis>(r));
  const auto& b = std::get<OrthogonalUBasis>(r);
  ASSERT_EQ(b.elements.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) EXPECT_EQ(u_inner(rot, b.elements[i], b.elements[j]), Rational(0));
  // Split complex numbers: j^2 = 1.
  std::vector<Rational> c(8, Rational(0));
  c[0] = 1;
  c[3] = 1;
  c[5] = 1;
  c[6] = 1;
  Algebra split(2, c, 0, {"1", "j"});
  EXPECT_TRUE(std::holds_alternative<IndefiniteWitness>(orthogonal_u_basis(split)));
}
