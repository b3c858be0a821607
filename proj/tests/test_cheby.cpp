#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace chebylie;
using testing::poly;

namespace {

// Coefficient of x^{k-2j} in T_k: (-1)^j k/(k-j) binom(k-j, j).
YPolynomial chebyshev_explicit(int k) {
  std::vector<YPolynomial::Term> terms;
  for (int j = 0; 2 * j <= k; ++j) {
    Integer binom = 1;
    for (int i = 0; i < j; ++i) binom = binom * (k - j - i) / (i + 1);
    const Integer c = binom * k / (k - j);
    terms.emplace_back(Exponents{static_cast<std::uint16_t>(k - 2 * j)}, j % 2 ? Integer(-c) : c);
  }
  return YPolynomial::from_terms(1, std::move(terms));
}

}  // namespace

TEST_CASE("YPolynomial arithmetic and ordering") {
  const YPolynomial p = poly("y1^2 - 2*y2 - 2*y1 - 6", 2);
  REQUIRE(p.size() == 4);
  CHECK(p.terms()[0].first == Exponents{2, 0});
  CHECK(p.terms()[1].first == Exponents{1, 0});
  CHECK(p.terms()[2].first == Exponents{0, 1});
  CHECK(p.terms()[3].first == Exponents{0, 0});
  CHECK(p.total_degree() == 2);
  CHECK(graded_lex_before(Exponents{0, 3}, Exponents{2, 0}));
  CHECK(graded_lex_before(Exponents{1, 1}, Exponents{0, 2}));
  const YPolynomial q = poly("y1 + 1", 2);
  CHECK(q * q == poly("y1^2 + 2*y1 + 1", 2));
  CHECK(q.pow(3) == q * q * q);
  CHECK((p - p).is_zero());
  CHECK(p.scaled(0).is_zero());
  CHECK_THROWS_AS(p + poly("y1", 3), DimensionError);
}

TEST_CASE("differentiation and substitution") {
  const YPolynomial p = poly("y2^2 - 2*y1^3 + 6*y1*y2 + 10*y2 + 18*y1 + 18", 2);
  CHECK(differentiate(p, 0) == poly("-6*y1^2 + 6*y2 + 18", 2));
  CHECK(differentiate(p, 1) == poly("2*y2 + 6*y1 + 10", 2));
  const std::vector<YPolynomial> vals{poly("y1 + y2", 2), poly("3", 2)};
  CHECK(substitute(poly("y1^2 - y2", 2), vals) == poly("y1^2 + 2*y1*y2 + y2^2 - 3", 2));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const YPolynomial a = poly(std::to_string(d(rng)) + "*y1^2*y2 + y1 - " + std::to_string(d(rng) + 4), 2);
    const YPolynomial b = poly("y1*y2 + " + std::to_string(d(rng) + 4) + "*y2^3", 2);
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(differentiate(a * b, j) == differentiate(a, j) * b + a * differentiate(b, j));
  }
}

TEST_CASE("G2 Chebyshev map for k = 2") {
  ChebyshevEngine engine(testing::group("G2"));
  const PolyMap p = engine.chebyshev_map(2);
  CHECK(p.type == "G2");
  CHECK(p.k == 2);
  REQUIRE(p.components.size() == 2);
  CHECK(p.components[0] == poly("y1^2 - 2*y2 - 2*y1 - 6", 2));
  CHECK(p.components[1] == poly("y2^2 - 2*y1^3 + 6*y1*y2 + 10*y2 + 18*y1 + 18", 2));
  const PolyMatrix jac = engine.jacobian_symbolic(2);
  CHECK(jac(0, 0) == poly("2*y1 - 2", 2));
  CHECK(jac(0, 1) == poly("-2", 2));
  CHECK(jac(1, 0) == poly("-6*y1^2 + 6*y2 + 18", 2));
  CHECK(jac(1, 1) == poly("6*y1 + 2*y2 + 10", 2));
}

TEST_CASE("A1 maps are the normalized Chebyshev polynomials") {
  ChebyshevEngine engine(testing::group("A1"));
  const auto t = testing::chebyshev_recurrence(12);
  for (int k = 1; k <= 12; ++k) {
    CAPTURE(k);
    const PolyMap p = engine.chebyshev_map(k);
    CHECK(p.components[0] == t[k]);
    CHECK(p.components[0] == chebyshev_explicit(k));
  }
}

TEST_CASE("composition law") {
  for (const char* type : {"A2", "B2", "G2"}) {
    CAPTURE(type);
    ChebyshevEngine engine(testing::group(type));
    for (int k : {2, 3})
      for (int l : {2, 3}) CHECK(compose(engine.chebyshev_map(k), engine.chebyshev_map(l)) == engine.chebyshev_map(k * l));
  }
}

TEST_CASE("express_in_y inverts expand") {
  ChebyshevEngine engine(testing::group("B3"));
  const YPolynomial p = poly("y1^2*y3 - 4*y2 + 7*y1*y2*y3 - 1", 3);
  const ExpSum e = engine.expand(p);
  CHECK(is_invariant(engine.root_system(), e));
  CHECK(engine.express_in_y(e) == p);
  CHECK(engine.express_in_y(engine.expand_orbits(p)) == p);
  CHECK(engine.y_monomial(Exponents{1, 0, 2}) == engine.expand(poly("y1*y3^2", 3)));
  CHECK_THROWS_AS((engine.express_in_y(ExpSum::monomial(Weight{1, 0, 0}))), DomainError);
  CHECK(engine.express_in_y(ExpSum(3)).is_zero());
}

TEST_CASE("characters as polynomials in y") {
  ChebyshevEngine engine(testing::group("G2"));
  CHECK(engine.character_polynomial(Weight{0, 0}) == poly("1", 2));
  CHECK(engine.character_polynomial(Weight{1, 0}) == poly("y1 + 1", 2));
  CHECK(engine.character_polynomial(Weight{0, 1}) == poly("y1 + y2 + 2", 2));
  CHECK(engine.character_polynomial(Weight{2, 0}) == poly("y1^2 - y2 - 3", 2));
  CHECK(engine.character_polynomial(Weight{1, 1}).scaled(4) == poly("4*y1*y2 + 8*y1 + 8*y2 + 16", 2));
}

TEST_CASE("invalid k") {
  ChebyshevEngine engine(testing::group("A2"));
  CHECK_THROWS_AS(engine.chebyshev_map(0), ConstraintError);
  CHECK_THROWS_AS(engine.jacobian_symbolic(-1), ConstraintError);
  CHECK(engine.chebyshev_map(1).components[1] == poly("y2", 2));
}
