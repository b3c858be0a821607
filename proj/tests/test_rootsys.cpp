#include <doctest.h>

#include "support.hpp"

using namespace chebylie;

TEST_CASE("rank-two Cartan matrices") {
  CHECK(RootSystem::parse("A2").cartan() == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(RootSystem::parse("B2").cartan() == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(RootSystem::parse("G2").cartan() == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(RootSystem::parse("C2").cartan() == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(RootSystem::parse("A1").cartan() == IntMatrix{{2}});
}

TEST_CASE("Cartan matrices are generalized Cartan and invertible") {
  for (const char* t : {"A1", "A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "A2xG2"}) {
    CAPTURE(t);
    const RootSystem rs = RootSystem::parse(t);
    const std::size_t n = rs.rank();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) CHECK(rs.cartan()(i, j) == 2);
        else CHECK(rs.cartan()(i, j) <= 0);
        Rational s(0);
        for (std::size_t m = 0; m < n; ++m) s += Rational(rs.cartan()(i, m)) * rs.cartan_inverse()(m, j);
        CHECK(s == Rational(i == j ? 1 : 0));
      }
  }
}

TEST_CASE("degrees and Weyl orders") {
  const RootSystem g2 = RootSystem::parse("G2");
  CHECK(g2.degrees() == std::vector<int>{2, 6});
  CHECK(g2.weyl_order() == 12);
  CHECK(g2.highest_root_coefficient() == 3);
  CHECK(RootSystem::parse("E6").degrees() == std::vector<int>{2, 5, 6, 8, 9, 12});
  CHECK(RootSystem::parse("D5").degrees() == std::vector<int>{2, 4, 6, 8, 5});
  CHECK(RootSystem::parse("E8").weyl_order() == 696729600ULL);
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 6}, {Family::B, 5}, {Family::C, 3}, {Family::D, 4},
                                                          {Family::E, 7}, {Family::F, 4}, {Family::G, 2}}) {
    const RootSystem rs(make_lie_type(f, n));
    CAPTURE(rs.name());
    CHECK(rs.weyl_order() == testing::table_weyl_order(f, n));
    CHECK(rs.highest_root_coefficient() == testing::table_highest_coefficient(f, n));
  }
}

TEST_CASE("semisimple sums are block diagonal") {
  const RootSystem rs = RootSystem::parse(" a2 x G2 ");
  CHECK(rs.name() == "A2xG2");
  CHECK(rs.rank() == 4);
  CHECK(rs.cartan() == IntMatrix{{2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -3, 2}});
  CHECK(rs.degrees() == std::vector<int>{2, 3, 2, 6});
  CHECK(rs.weyl_order() == 72);
  CHECK(rs.highest_root_coefficient() == 3);
}

TEST_CASE("invalid types are rejected with the violated bound") {
  CHECK_THROWS_AS(make_lie_type(Family::B, 1), ConstraintError);
  CHECK_THROWS_AS(make_lie_type(Family::E, 9), ConstraintError);
  CHECK_THROWS_AS(make_lie_type(Family::F, 3), ConstraintError);
  CHECK_THROWS_AS(make_lie_type(Family::G, 3), ConstraintError);
  CHECK_THROWS_AS(make_lie_type(Family::A, 0), ConstraintError);
  CHECK_THROWS_WITH_AS(RootSystem::parse("D3"), doctest::Contains("A3"), ConstraintError);
  CHECK_THROWS_AS(RootSystem::parse("Q2"), ConstraintError);
  CHECK_THROWS_AS(RootSystem::parse(""), ConstraintError);
  CHECK_THROWS_AS(RootSystem::parse("A2x"), ConstraintError);
}

TEST_CASE("root coordinates of fundamental weights") {
  const RootSystem g2 = RootSystem::parse("G2");
  CHECK(g2.root_coords(g2.fundamental_weight(0)) == std::vector<Rational>{2, 1});
  CHECK(g2.root_coords(g2.fundamental_weight(1)) == std::vector<Rational>{3, 2});
  const RootSystem a2 = RootSystem::parse("A2");
  CHECK(a2.root_coords(a2.fundamental_weight(0)) == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
  CHECK(weight_to_root_coords(a2, a2.simple_root(1)) == std::vector<Rational>{0, 1});
}

TEST_CASE("dominance order") {
  const RootSystem g2 = RootSystem::parse("G2");
  const Weight w1{1, 0}, w2{0, 1}, zero{0, 0};
  CHECK(g2.dominance_leq(w1, w2));
  CHECK_FALSE(g2.dominance_leq(w2, w1));
  CHECK(g2.dominance_leq(zero, w1));
  CHECK(g2.dominance_leq(w1, w1));
  const RootSystem a2 = RootSystem::parse("A2");
  CHECK_FALSE(a2.dominance_leq(Weight{1, 0}, Weight{0, 1}));
  CHECK_FALSE(a2.dominance_leq(Weight{0, 1}, Weight{1, 0}));
}

TEST_CASE("simple reflections") {
  const RootSystem g2 = RootSystem::parse("G2");
  CHECK(g2.reflect(0, Weight{1, 0}) == Weight{-1, 1});
  CHECK(g2.reflect(1, Weight{0, 1}) == Weight{3, -1});
  CHECK(g2.reflect(0, g2.simple_root(0)) == -g2.simple_root(0));
  CHECK(g2.reflect(1, g2.simple_coroot(1)) == -g2.simple_coroot(1));
  for (std::size_t i = 0; i < 2; ++i) {
    const Weight l{3, -5};
    const CorootVector c{2, 7};
    CHECK(inner_product(g2.reflect(i, l), g2.reflect(i, c)) == inner_product(l, c));
    CHECK(g2.reflect(i, g2.reflect(i, l)) == l);
  }
  int parity = 0;
  CHECK(g2.dominant_representative(Weight{-1, 0}, &parity) == Weight{1, 0});
}

TEST_CASE("lattice arithmetic is overflow checked") {
  const Weight big{std::numeric_limits<std::int64_t>::max(), 0};
  CHECK_THROWS_AS((big + Weight{1, 0}), OverflowError);
  CHECK_THROWS_AS(2 * big, OverflowError);
  CHECK_THROWS_AS((inner_product(Weight{1, 2}, CorootVector{1, 2, 3})), DimensionError);
  CHECK_THROWS_AS((Weight{1} + Weight{1, 2}), DimensionError);
  CHECK(inner_product(Weight{2, -3}, CorootVector{5, 1}) == 7);
}
