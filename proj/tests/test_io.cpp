#include <gtest/gtest.h>

#include "lcalg/lcalg.hpp"

using namespace lcalg;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(ParseElement, Examples) {
  Algebra to = named_algebra("TO").algebra;
  EXPECT_EQ(parse_element("f1-f4", to), vec({0, 1, 0, 0, -1, 0, 0, 0}));
  EXPECT_EQ(parse_element("1", to), to.one());
  EXPECT_EQ(parse_element(" -2/3*f7 + 1/2 ", to), ratio(1, 2) * to.one() - ratio(2, 3) * to.basis(7));
  Algebra s = named_algebra("S").algebra;
  EXPECT_EQ(parse_element("e_8/2 + e8/2", s), s.basis(8));
  EXPECT_EQ(parse_element("0.5*e3 + e3*3", s), ratio(7, 2) * s.basis(3));
}

TEST(ParseElement, Errors) {
  Algebra to = named_algebra("TO").algebra;
  EXPECT_THROW(parse_element("f9", to), ParseError);
  EXPECT_THROW(parse_element("e1", to), ParseError);
  EXPECT_THROW(parse_element("f1 f2", to), ParseError);
  EXPECT_THROW(parse_element("f1*f2", to), ParseError);
  EXPECT_THROW(parse_element("(f1)", to), ParseError);
  EXPECT_THROW(parse_element("f1/0", to), ParseError);
  EXPECT_THROW(parse_element("", to), ParseError);
  EXPECT_THROW(parse_element("f1 +", to), ParseError);
}

TEST(FormatElement, RoundTrips) {
  Algebra o = named_algebra("O").algebra;
  Vector x = Rational(2) * o.one() - o.basis(1) + ratio(3, 4) * o.basis(5);
  EXPECT_EQ(format_element(o, x), "2 - e1 + 3/4*e5");
  EXPECT_EQ(parse_element(format_element(o, x), o), x);
  EXPECT_EQ(format_element(o, zero_vector(8)), "0");
  EXPECT_EQ(format_element(o, -o.basis(3)), "-e3");
}

TEST(Json, AlgebraRoundTrip) {
  for (const char* name : {"H", "TO", "A5"}) {
    NamedAlgebra na = named_algebra(name);
    json j = algebra_json(na.algebra, na.grading);
    AlgebraFile back = algebra_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.algebra.constants(), na.algebra.constants()) << name;
    EXPECT_EQ(back.algebra.labels(), na.algebra.labels());
    EXPECT_EQ(back.algebra.unit(), na.algebra.unit());
    ASSERT_TRUE(back.grading.has_value());
    EXPECT_EQ(back.grading->even, na.grading->even);
    EXPECT_EQ(back.grading->odd, na.grading->odd);
  }
}

TEST(Json, NonCoordinateGrading) {
  Algebra c = named_algebra("C").algebra;
  Grading g{Subspace::span({vec({1, 1})}, 2), Subspace::span({vec({1, -1})}, 2)};
  json j = algebra_json(c, g);
  EXPECT_TRUE(j["grading"]["even"][0].is_array());
  AlgebraFile back = algebra_from_json(j);
  EXPECT_EQ(back.grading->even, g.even);
}

TEST(Json, RejectsMalformedFiles) {
  EXPECT_THROW(algebra_from_json(json::parse("[1, 2]")), ParseError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 2})")), ParseError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 1, "constants": [[[0.5]]]})")), ParseError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 1, "constants": [[[1, 0]]]})")), ParseError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 1, "constants": [[["x"]]]})")), ParseError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 1, "constants": [[[1]]], "grading": {"even": [3]}})")), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/algebra.json"), ParseError);
  AlgebraFile ok = algebra_from_json(json::parse(R"({"dim": 1, "unit": 0, "constants": [[["1"]]]})"));
  EXPECT_EQ(ok.algebra.dim(), 1u);
}

TEST(Json, Params) {
  Params4Exact p;
  p.T = Matrix::from_rows({vec({1, 2, 0}), vec({0, -1, 3}), vec({1, 0, 2})}, 3);
  p.u = {ratio(1, 3), Rational(0), Rational(-2)};
  Params4Exact back = params4_from_json(json::parse(params4_json(p).dump()));
  EXPECT_EQ(back.T, p.T);
  EXPECT_EQ(back.u, p.u);
  EXPECT_THROW(params4_from_json(json::parse(R"({"T": [[1, 2], [3, 4]]})")), ParseError);
  EXPECT_THROW(params4_from_json(json::parse(R"({"T": [[1,0,0],[0,1,0],[0,0,1]], "u": [1, 2]})")), ParseError);
  EXPECT_THROW(params4_from_json(json::parse(R"({"u": [1, 2, 3]})")), ParseError);
  EXPECT_EQ(params4_from_json(json::parse(R"({"T": [[1,0,0],[0,1,0],[0,0,1]]})")).u, zero_vector(3));
}

TEST(Tables, Markdown) {
  const std::string md = table_markdown(named_algebra("C").algebra);
  EXPECT_EQ(md, "| | 1 | e1 |\n|---|---|---|\n| **1** | 1 | e1 |\n| **e1** | e1 | -1 |\n");
  const std::string csv = table_csv(named_algebra("C").algebra);
  EXPECT_EQ(csv, ",1,e1\n1,1,e1\ne1,e1,-1\n");
}
