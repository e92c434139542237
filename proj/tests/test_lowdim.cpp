#include <gtest/gtest.h>

#include "lcalg/lcalg.hpp"

using namespace lcalg;

namespace {

Matrix block_map(const Matrix& q) {
  Matrix m = Matrix::identity(4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i + 1, j + 1) = q(i, j);
  return m;
}

Matrix negated(Matrix q) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) q(i, j) = -q(i, j);
  return q;
}

Params4Exact params(std::vector<std::vector<long>> t, std::vector<long> u) {
  Params4Exact p;
  for (std::size_t i = 0; i < 3; ++i) {
    p.u[i] = u[i];
    for (std::size_t j = 0; j < 3; ++j) p.T(i, j) = t[i][j];
  }
  return p;
}

}  // namespace

TEST(ThreeDim, BuildIsLocallyComplex) {
  Algebra a = build_A_ts(Rational(2), Rational(1));
  EXPECT_TRUE(is_locally_complex(a).holds);
  EXPECT_EQ(a.multiply(a.basis(1), a.basis(2)), Rational(2) * a.one() + a.basis(1));
  EXPECT_FALSE(is_nicely_normed(a).holds);
}

TEST(ThreeDim, RoundTripAndRawInputs) {
  for (int t = 0; t <= 6; ++t)
    for (int s = 0; s <= 6; ++s) {
      CanonicalForm3 c = canonical_3d(build_A_ts(ratio(t, 2), ratio(s, 2)));
      ASSERT_TRUE(c.t_exact && c.s_exact);
      EXPECT_EQ(*c.t_exact, ratio(t, 2));
      EXPECT_EQ(*c.s_exact, ratio(s, 2));
    }
  CanonicalForm3 raw = canonical_3d(build_A_tz(Rational(-2), ratio(9, 5), ratio(12, 5)));
  EXPECT_EQ(*raw.t_exact, Rational(2));
  EXPECT_EQ(*raw.s_exact, Rational(3));
  CanonicalForm3 irrational = canonical_3d(build_A_tz(Rational(1), Rational(1), Rational(1)));
  EXPECT_EQ(irrational.s_squared, Rational(2));
  EXPECT_FALSE(irrational.s_exact.has_value());
  EXPECT_NEAR(irrational.s, std::sqrt(2.0), 1e-12);
}

TEST(ThreeDim, IsomorphismIsBasisIndependent) {
  Rng rng(default_seed + 5);
  Algebra a = build_A_ts(ratio(1, 3), Rational(2));
  for (int k = 0; k < 5; ++k) {
    Algebra rot = a.change_basis(random_rotation_basis(a, rng));
    EXPECT_TRUE(iso_3d(canonical_3d(a), canonical_3d(rot), 0));
  }
  EXPECT_FALSE(iso_3d(canonical_3d(a), canonical_3d(build_A_ts(ratio(1, 3), Rational(1))), 0));
  EXPECT_THROW(canonical_3d(named_algebra("H").algebra), DimensionError);
}

TEST(FourDim, RoundTrip) {
  Rng rng(default_seed + 6);
  for (int k = 0; k < 20; ++k) {
    Params4Exact p = detail::random_params4(rng);
    ExtractedParams4 e = extract_Tu(build_A_Tu(p));
    ASSERT_TRUE(e.exact.has_value());
    EXPECT_EQ(e.exact->T, p.T);
    EXPECT_EQ(e.exact->u, p.u);
  }
}

TEST(FourDim, ExtractFromRotatedAlgebra) {
  Rng rng(default_seed + 7);
  Params4Exact p = detail::random_params4(rng);
  Algebra a = build_A_Tu(p);
  Algebra rot = a.change_basis(random_rotation_basis(a, rng));
  ExtractedParams4 e = extract_Tu(rot);
  Params4 got = e.exact ? to_double(*e.exact) : e.approx;
  EXPECT_TRUE(equiv_4d(to_double(p), got).equivalent);
}

TEST(FourDim, OrbitSoundness) {
  Rng rng(default_seed + 8);
  for (int k = 0; k < 20; ++k) {
    Params4Exact p = detail::random_params4(rng);
    Matrix q = random_orthogonal(rng, 3);
    if (k % 2) q = negated(q);
    Params4Exact moved = detail::transport(p, q);
    Equiv4Result r = equiv_4d(to_double(p), to_double(moved));
    EXPECT_TRUE(r.equivalent) << r.reason;
    EXPECT_TRUE(check_homomorphism(block_map(q), build_A_Tu(p), build_A_Tu(moved)).ok);
    PropertyReport ra = property_report(build_A_Tu(p), std::nullopt, {"quadratic", "locally_complex", "alternative", "nicely_normed", "commutative"});
    PropertyReport rb = property_report(build_A_Tu(moved), std::nullopt, {"quadratic", "locally_complex", "alternative", "nicely_normed", "commutative"});
    for (std::size_t i = 0; i < ra.entries.size(); ++i) EXPECT_EQ(ra.entries[i].value, rb.entries[i].value);
    GeometricType ga = geometric_type(to_double(p).T), gb = geometric_type(to_double(moved).T);
    EXPECT_EQ(ga.kind, gb.kind);
    EXPECT_EQ(ga.rank, gb.rank);
  }
}

TEST(FourDim, SignFlip) {
  Rng rng(default_seed + 9);
  for (int k = 0; k < 5; ++k) {
    Params4 p = to_double(detail::random_params4(rng));
    Params4 f = p;
    f.T = -f.T;
    EXPECT_TRUE(equiv_4d(p, f).equivalent);
  }
}

TEST(FourDim, Separation) {
  Params4 a = to_double(params({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, {0, 0, 0}));
  Params4 b = to_double(params({{1, 0, 0}, {0, 2, 0}, {0, 0, 4}}, {0, 0, 0}));
  Params4 c = to_double(params({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, {1, 0, 0}));
  Params4 d = to_double(params({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, {0, 1, 0}));
  EXPECT_FALSE(equiv_4d(a, b).equivalent);
  EXPECT_FALSE(equiv_4d(a, c).equivalent);
  // Same |u| along different eigen-directions of a non-degenerate P.
  EXPECT_FALSE(equiv_4d(c, d).equivalent);
  Params4 e = to_double(params({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, {-1, 0, 0}));
  EXPECT_TRUE(equiv_4d(c, e).equivalent);
}

TEST(FourDim, DivisionConsistency) {
  Rng rng(default_seed + 10);
  int division = 0, not_division = 0;
  for (int k = 0; k < 50; ++k) {
    Params4Exact p = detail::random_params4(rng);
    if (k % 3 == 0) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) p.T(j, i) = -p.T(i, j);
        p.T(i, i) = ratio(static_cast<long>(i) + 1, 3);
      }
    }
    Algebra a = build_A_Tu(p);
    Division4Result d = is_division_4d(p);
    GeometricType g = geometric_type(to_double(p).T);
    EXPECT_EQ(d.division, g.kind == GeometricKind::Ellipsoid);
    if (d.division) {
      ++division;
      for (const auto& x : detail::signed_pair_family(4)) EXPECT_EQ(rank(a.left_mul_matrix(x)), 4u);
    } else {
      ++not_division;
      if (d.pair) {
        EXPECT_FALSE(is_zero(d.pair->first));
        EXPECT_FALSE(is_zero(d.pair->second));
        EXPECT_TRUE(is_zero(a.multiply(d.pair->first, d.pair->second)));
      } else {
        ASSERT_TRUE(d.pair_approx.has_value());
        EXPECT_LT(d.product_norm, 1e-8);
      }
    }
    Division4Result f = is_division_4d(to_double(p));
    EXPECT_EQ(f.division, d.division);
  }
  EXPECT_GT(division, 0);
  EXPECT_GT(not_division, 0);
}

TEST(FourDim, GeometricTypes) {
  EXPECT_EQ(geometric_type(to_double(params({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, {0, 0, 0})).T).kind, GeometricKind::Ellipsoid);
  EXPECT_EQ(geometric_type(to_double(params({{1, 0, 0}, {0, 2, 0}, {0, 0, -3}}, {0, 0, 0})).T).kind, GeometricKind::Hyperboloid);
  GeometricType flipped = geometric_type(to_double(params({{-1, 0, 0}, {0, -2, 0}, {0, 0, 3}}, {0, 0, 0})).T);
  EXPECT_EQ(flipped.kind, GeometricKind::Hyperboloid);
  EXPECT_TRUE(flipped.flipped);
  EXPECT_EQ(geometric_type(to_double(params({{1, 0, 0}, {0, 2, 0}, {0, 0, 0}}, {0, 0, 0})).T).kind, GeometricKind::EllipticCylinder);
  EXPECT_EQ(geometric_type(to_double(params({{1, 0, 0}, {0, -2, 0}, {0, 0, 0}}, {0, 0, 0})).T).kind, GeometricKind::HyperbolicCylinder);
  EXPECT_EQ(geometric_type(to_double(params({{0, 1, 0}, {-1, 0, 0}, {0, 0, 5}}, {0, 0, 0})).T).rank, 1);
  EXPECT_EQ(geometric_type(rank0_T(2)).kind, GeometricKind::Rank0);
}

TEST(FourDim, HyperboloidConfiguration) {
  Rng rng(default_seed + 11);
  for (int k = 0; k < 10; ++k) {
    Params4Exact p = detail::random_params4(rng);
    if (geometric_type(to_double(p).T).kind != GeometricKind::Hyperboloid) continue;
    HyperboloidConfig h = hyperboloid_config(to_double(p));
    EXPECT_GE(h.delta(0), h.delta(1) - 1e-12);
    EXPECT_GT(h.delta(1), 0);
    EXPECT_LT(h.delta(2), 0);
    EXPECT_NEAR(h.Q.determinant(), 1.0, 1e-9);
    EXPECT_TRUE(equiv_4d(to_double(p), from_config(h)).equivalent);
    for (const auto& s : hyperboloid_symmetries()) {
      HyperboloidConfig g = h;
      g.u = s * h.u;
      g.c = s * h.c;
      EXPECT_TRUE(equiv_4d(from_config(h), from_config(g)).equivalent);
    }
  }
}

TEST(RankZero, Equivalence) {
  const Eigen::Vector3d e3(0, 0, 1), e1(1, 0, 0);
  EXPECT_TRUE(rank0_equiv(1, e3, 1, -e3));
  EXPECT_FALSE(rank0_equiv(1, e3, 1, e1));
  EXPECT_TRUE(rank0_equiv(0, e3, 0, e1));
  EXPECT_FALSE(rank0_equiv(1, e3, 2, e3));
  EXPECT_THROW(rank0_equiv(-1, e3, 1, e3), PreconditionError);
}

TEST(RankZero, AgreesWithGeneralTest) {
  Rng rng(default_seed + 12);
  std::uniform_int_distribution<int> pick(-2, 2);
  for (int k = 0; k < 30; ++k) {
    double d1 = std::abs(pick(rng)), d2 = std::abs(pick(rng));
    Eigen::Vector3d u1(pick(rng), pick(rng), pick(rng)), u2(pick(rng), pick(rng), pick(rng));
    if (k % 3 == 0) {
      d2 = d1;
      u2 = Eigen::Vector3d(u1(1), -u1(0), -u1(2));
    }
    Params4 a{rank0_T(d1), u1}, b{rank0_T(d2), u2};
    EXPECT_EQ(rank0_equiv(d1, u1, d2, u2), equiv_4d(a, b).equivalent) << d1 << " " << u1.transpose() << " / " << d2 << " " << u2.transpose();
  }
}

TEST(RankZero, ExplicitIsomorphismForOppositeAxis) {
  Params4Exact a = params({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}, {0, 0, 1});
  Params4Exact b = params({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}, {0, 0, -1});
  Matrix q = Matrix::identity(3);
  q(0, 0) = -1;
  Params4Exact moved = detail::transport(a, q);
  EXPECT_EQ(moved.T, b.T);
  EXPECT_EQ(moved.u, b.u);
  EXPECT_TRUE(check_homomorphism(block_map(q), build_A_Tu(a), build_A_Tu(b)).ok);
}
