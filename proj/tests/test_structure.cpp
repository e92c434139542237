#include <gtest/gtest.h>

#include "lcalg/lcalg.hpp"

using namespace lcalg;

namespace {

bool is_iso_to(const RecognitionResult& r, const Algebra& a) {
  return check_homomorphism(r.iso, a, named_algebra(r.tag).algebra).ok && inverse(r.iso).has_value();
}

std::vector<std::size_t> indices_of(const Subspace& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (s.contains(unit_vector(n, i))) out.push_back(i);
  return out;
}

}  // namespace

TEST(Homomorphism, DetectsViolations) {
  Algebra h = named_algebra("H").algebra, o = named_algebra("O").algebra;
  Matrix incl(8, 4);
  for (std::size_t i = 0; i < 4; ++i) incl(i, i) = 1;
  EXPECT_TRUE(check_homomorphism(incl, h, o).ok);
  incl(3, 3) = -1;
  HomomorphismCheck bad = check_homomorphism(incl, h, o);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.violated_pair.has_value());
  Matrix zero(8, 4);
  EXPECT_FALSE(check_homomorphism(zero, h, o).ok);
}

TEST(Homomorphism, EmbeddingOfTwistedOctonions) {
  Algebra to = named_algebra("TO").algebra, s = named_algebra("S").algebra;
  EXPECT_TRUE(check_homomorphism(detail::to_into_s_map(), to, s).ok);
  HomomorphismCheck bad = check_homomorphism(detail::to_into_s_map(true), to, s);
  EXPECT_FALSE(bad.ok);
  EXPECT_TRUE(bad.violated_pair.has_value());
}

TEST(Recognize, NamedAlgebras) {
  for (const char* name : {"R", "C", "H", "O"}) {
    Algebra a = named_algebra(name).algebra;
    RecognitionResult r = recognize_alternative_division(a);
    EXPECT_EQ(r.tag, name);
    EXPECT_TRUE(is_iso_to(r, a));
  }
}

TEST(Recognize, BasisIndependent) {
  Rng rng(default_seed + 1);
  for (const char* name : {"H", "O"}) {
    Algebra a = named_algebra(name).algebra;
    for (int k = 0; k < 10; ++k) {
      Algebra rot = a.change_basis(random_rotation_basis(a, rng));
      RecognitionResult r = recognize_alternative_division(rot);
      EXPECT_EQ(r.tag, name);
      EXPECT_TRUE(is_iso_to(r, rot));
    }
  }
}

TEST(Recognize, SubalgebraOfOctonions) {
  Algebra o = named_algebra("O").algebra;
  Subspace q = generated_subalgebra(o, {o.basis(2) + o.basis(5), o.basis(4)}, true);
  ASSERT_EQ(q.dim(), 4u);
  Algebra restricted = restrict_to_subalgebra(o, q.basis_vectors());
  EXPECT_EQ(recognize_alternative_division(restricted).tag, "H");
}

TEST(Recognize, RejectsNonAlternative) {
  EXPECT_THROW(recognize_alternative_division(named_algebra("S").algebra), PreconditionError);
  EXPECT_THROW(recognize_alternative_division(named_algebra("TO").algebra), PreconditionError);
}

TEST(ClassifySuper, NamedAlgebras) {
  for (const char* name : {"C", "H", "O"}) {
    Algebra a = named_algebra(name).algebra;
    RecognitionResult r = classify_super_alternative(a, Grading::trivial(a.dim()));
    EXPECT_EQ(r.tag, name);
  }
  for (const char* name : {"C", "H", "O", "S", "TO", "TS"}) {
    NamedAlgebra na = named_algebra(name);
    RecognitionResult r = classify_super_alternative(na.algebra, *na.grading);
    EXPECT_EQ(r.tag, name);
    EXPECT_TRUE(is_iso_to(r, na.algebra));
  }
}

TEST(ClassifySuper, GradingPreservingRotations) {
  Rng rng(default_seed + 2);
  for (const char* name : {"S", "TO", "TS"}) {
    NamedAlgebra na = named_algebra(name);
    auto groups = coordinate_groups(*na.grading);
    ASSERT_TRUE(groups.has_value());
    for (int k = 0; k < 3; ++k) {
      Matrix b = random_rotation_basis(na.algebra, rng, *groups);
      Algebra rot = na.algebra.change_basis(b);
      RecognitionResult r = classify_super_alternative(rot, transform_grading(*na.grading, b));
      EXPECT_EQ(r.tag, name);
      EXPECT_TRUE(is_iso_to(r, rot));
    }
  }
}

TEST(ClassifySuper, RejectsBadInput) {
  NamedAlgebra a5 = named_algebra("A5");
  EXPECT_THROW(classify_super_alternative(a5.algebra, *a5.grading), PreconditionError);
  Algebra o = named_algebra("O").algebra;
  EXPECT_THROW(classify_super_alternative(o, Grading::from_indices(8, {0, 1, 2, 4}, {3, 5, 6, 7})), PreconditionError);
}

TEST(HomogeneousElements, ProductRules) {
  for (const char* name : {"S", "TO", "TS"}) {
    NamedAlgebra na = named_algebra(name);
    const Algebra& a = na.algebra;
    const std::size_t n = a.dim();
    auto even = indices_of(na.grading->even, n), odd = indices_of(na.grading->odd, n);
    auto same_degree = [&](std::size_t i, std::size_t j) {
      bool ei = std::find(even.begin(), even.end(), i) != even.end();
      bool ej = std::find(even.begin(), even.end(), j) != even.end();
      return ei == ej;
    };
    for (std::size_t i = 1; i < n; ++i) {
      Vector u = a.basis(i);
      // Odd elements square to a negative scalar; no homogeneous element is a zero divisor.
      auto sq = a.as_scalar(a.multiply(u, u));
      ASSERT_TRUE(sq.has_value());
      EXPECT_LT(*sq, 0);
      EXPECT_EQ(rank(a.left_mul_matrix(u)), n) << name << " " << a.label(i);
      for (std::size_t j = 1; j < n; ++j) {
        if (i == j) continue;
        Vector v = a.basis(j);
        EXPECT_EQ(a.multiply(u, v), -a.multiply(v, u));
        if (same_degree(i, j)) {
          for (std::size_t k = 0; k < n; ++k) {
            Vector x = a.basis(k);
            EXPECT_EQ(a.multiply(u, a.multiply(v, x)), -a.multiply(v, a.multiply(u, x)));
            EXPECT_EQ(a.multiply(a.multiply(x, u), v), -a.multiply(a.multiply(x, v), u));
          }
        }
      }
    }
    for (std::size_t i : even) {
      if (i == 0) continue;
      for (std::size_t j : odd) {
        Vector u = a.basis(i), v = a.basis(j), uv = a.multiply(u, v);
        EXPECT_EQ(a.multiply(v, uv), u);
        EXPECT_EQ(a.multiply(uv, u), v);
        EXPECT_EQ(a.multiply(uv, uv), -a.one());
      }
    }
    EXPECT_EQ(even.size(), odd.size());
  }
}

TEST(AlterScalars, Spaces) {
  Algebra s = named_algebra("S").algebra;
  AlterScalarSpace as = alter_scalar_space(s);
  EXPECT_EQ(as.solutions, Subspace::span({s.one(), s.basis(8)}, 16));
  EXPECT_TRUE(as.has_alter_scalars);
  EXPECT_EQ(alter_scalar_space(named_algebra("TO").algebra).solutions.dim(), 1u);
  EXPECT_EQ(alter_scalar_space(named_algebra("TS").algebra).solutions.dim(), 1u);
  EXPECT_EQ(alter_scalar_space(named_algebra("O").algebra).solutions.dim(), 8u);
}

TEST(AlterScalars, AgreeWithRandomOracle) {
  Rng rng(default_seed + 3);
  for (const char* name : {"S", "TO", "TS"}) {
    Algebra a = named_algebra(name).algebra;
    AlterScalarSpace as = alter_scalar_space(a);
    std::vector<Vector> xs;
    for (int k = 0; k < 50; ++k) xs.push_back(random_vector(rng, a.dim()));
    for (const auto& sol : as.solutions.basis_vectors())
      for (const auto& x : xs) EXPECT_EQ(a.multiply(a.multiply(x, x), sol), a.multiply(x, a.multiply(x, sol)));
    // Every basis vector outside the space fails for some random x.
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (as.solutions.contains(a.basis(i))) continue;
      bool fails = false;
      for (const auto& x : xs) fails = fails || a.multiply(a.multiply(x, x), a.basis(i)) != a.multiply(x, a.multiply(x, a.basis(i)));
      EXPECT_TRUE(fails) << name << " " << a.label(i);
    }
  }
}

TEST(Annihilators, TwistedExamples) {
  Algebra to = named_algebra("TO").algebra;
  Subspace ann = annihilator(to, parse_element("f1 - f4", to));
  EXPECT_EQ(ann, Subspace::span({parse_element("f2 + f7", to), parse_element("f3 - f6", to)}, 8));
  Algebra ts = named_algebra("TS").algebra;
  EXPECT_EQ(annihilator(ts, parse_element("f3 + f12", ts)).dim(), 6u);
  EXPECT_EQ(annihilator(ts, ts.basis(3)).dim(), 0u);
}

TEST(Annihilators, SedenionZeroDivisorsHaveFourDimensionalAnnihilators) {
  Algebra s = named_algebra("S").algebra;
  std::size_t zero_divisors = 0;
  for (const auto& x : detail::signed_pair_family(16)) {
    std::size_t d = annihilator(s, x).dim();
    EXPECT_TRUE(d == 0 || d == 4);
    if (d == 4) ++zero_divisors;
  }
  EXPECT_EQ(zero_divisors, 84u);
}

TEST(Annihilators, MultiplesOfFourInA5) {
  Algebra a = named_algebra("A5").algebra;
  Rng rng(default_seed + 4);
  std::uniform_int_distribution<std::size_t> idx(0, 31);
  for (int k = 0; k < 60; ++k) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Vector x = a.basis(i);
    x[j] = (k % 2) ? 1 : -1;
    EXPECT_EQ(annihilator(a, x).dim() % 4, 0u);
  }
}

TEST(ZeroDivisors, Search) {
  for (const char* name : {"TO", "S", "TS"}) {
    Algebra a = named_algebra(name).algebra;
    ZeroDivisorResult r = zero_divisor_search(a);
    ASSERT_EQ(r.status, ZeroDivisorResult::Status::Found) << name;
    EXPECT_FALSE(is_zero(*r.x));
    EXPECT_FALSE(is_zero(*r.y));
    EXPECT_TRUE(is_zero(a.multiply(*r.x, *r.y)));
  }
  for (const char* name : {"H", "O", "C"}) {
    ZeroDivisorResult r = zero_divisor_search(named_algebra(name).algebra);
    EXPECT_EQ(r.status, ZeroDivisorResult::Status::NoneFound);
    EXPECT_TRUE(r.definitive);
  }
}

TEST(ZeroDivisors, RandomStageIsThreadCountIndependent) {
  Rng rng(41);
  Algebra s = named_algebra("S").algebra;
  Algebra rot = s.change_basis(random_rotation_basis(s, rng));
  ZeroDivisorResult a = zero_divisor_search(rot, {60, 9, 1});
  ZeroDivisorResult b = zero_divisor_search(rot, {60, 9, 4});
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.random_trials, b.random_trials);
}

TEST(Subalgebras, Census) {
  Algebra ts = named_algebra("TS").algebra;
  SubalgebraCensus c = subalgebra_census(ts, {5}, 50);
  ASSERT_TRUE(c.spans.count(5));
  const Subspace& s = c.spans.at(5);
  for (const auto& x : s.basis_vectors())
    for (const auto& y : s.basis_vectors()) EXPECT_TRUE(s.contains(ts.multiply(x, y)));
  Algebra o = named_algebra("O").algebra;
  SubalgebraCensus co = subalgebra_census(o, {1, 2, 4, 8}, 50);
  EXPECT_EQ(co.spans.size(), 4u);
  EXPECT_FALSE(co.spans.count(3));
}
