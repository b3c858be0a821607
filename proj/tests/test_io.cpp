#include <doctest.h>

#include "chebylie/io.hpp"
#include "support.hpp"

using namespace chebylie;
using testing::chars;
using testing::poly;

TEST_CASE("polynomial formatting") {
  CHECK(format_polynomial(poly("y1^2 - 2*y1 - 2*y2 - 6", 2)) == "y1^2 - 2*y1 - 2*y2 - 6");
  CHECK(format_polynomial(YPolynomial(3)) == "0");
  CHECK(format_polynomial(YPolynomial::constant(1, -4)) == "-4");
  CHECK(format_polynomial(poly("-y1*y2^3 + y2", 2)) == "-y1*y2^3 + y2");
}

TEST_CASE("character formatting") {
  CHECK(format_characters(chars(2, {{2, {1, 0}}, {-4, {0, 0}}})) == "2*chi_{1,0} - 4*chi_{0,0}");
  CHECK(format_characters(chars(1, {{3, {2}}})) == "3*chi_{2}");
  CHECK(format_characters(CharCombination(2)) == "0");
}

TEST_CASE("JSON round trips") {
  const Weight w{3, -1, 0};
  CHECK(weight_from_json(to_json(w)) == w);

  const ExpSum a = ExpSum::from_terms(2, {{Weight{1, 0}, Integer(5)}, {Weight{-2, 1}, Integer(-7)}});
  CHECK(exp_sum_from_json(2, to_json(a)) == a);

  const YPolynomial p = poly("y1^3*y2 - 12*y2 + 1", 2);
  CHECK(poly_from_json(2, to_json(p)) == p);

  ChebyshevEngine engine(testing::group("G2"));
  const PolyMap map = engine.chebyshev_map(3);
  const PolyMap back = poly_map_from_json(to_json(map));
  CHECK(back == map);
  CHECK(back.k == 3);
  CHECK(back.type == map.type);

  const CharCombination c = chars(2, {{4, {1, 0}}, {2, {0, 1}}, {2, {0, 0}}});
  CHECK(char_combination_from_json(2, to_json(c)) == c);
}

TEST_CASE("big coefficients survive serialization") {
  const Integer big = parse_decimal("-123456789012345678901234567890");
  const YPolynomial p = YPolynomial::monomial(Exponents{2, 1}, big);
  const Json j = to_json(p);
  CHECK(j.dump().find("-123456789012345678901234567890") != std::string::npos);
  CHECK(poly_from_json(2, j) == p);
  CHECK_THROWS_AS(parse_decimal("12x"), DomainError);
  CHECK_THROWS_AS(parse_decimal(""), DomainError);
}

TEST_CASE("malformed JSON input") {
  CHECK_THROWS(exp_sum_from_json(2, Json::parse(R"([{"weight":[1],"coeff":"1"}])")));
  CHECK_THROWS(poly_from_json(2, Json::parse(R"([{"exps":[1,0],"coeff":"a"}])")));
  CHECK_THROWS(char_combination_from_json(2, Json::parse(R"([{"highest_weight":[-1,0],"coeff":"1"}])")));
}

TEST_CASE("Weyl elements listing") {
  const auto grp = testing::group("A2");
  const Json j = weyl_elements_json(*grp);
  REQUIRE(j.size() == 6);
  CHECK(j[0]["length"] == 0);
  CHECK(j[0]["det"] == 1);
  CHECK(j[0]["matrix"] == Json::parse("[[1,0],[0,1]]"));
  int odd = 0;
  for (const auto& e : j) odd += e["det"].get<int>() == -1;
  CHECK(odd == 3);
}
