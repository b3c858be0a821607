#include <doctest.h>

#include <unordered_map>

#include "support.hpp"

using namespace chebylie;
using testing::chars;
using testing::poly;

namespace {

// Sum over all of W, then halve (each coset of Stab(rho - omega_j) counted twice).
ExpSumMatrix adjugate_by_halving(const WeylGroup& grp) {
  const RootSystem& rs = grp.root_system();
  const std::size_t n = rs.rank();
  ExpSumMatrix m(n, n, ExpSum(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::map<Weight, Integer> acc;
      for (std::size_t w = 0; w < grp.order(); ++w) {
        const Integer c = grp.det_sign(w) * inner_product(rs.fundamental_weight(i),
                                                          grp.act_on_coroot(w, rs.simple_coroot(j)));
        acc[grp.act_on_weight(w, rs.rho() - rs.fundamental_weight(j))] += c;
      }
      std::vector<ExpSum::Term> terms;
      for (const auto& [w, c] : acc) {
        REQUIRE(c % 2 == 0);
        terms.emplace_back(w, c / 2);
      }
      m(i, j) = ExpSum::from_terms(n, std::move(terms));
    }
  return m;
}

// Adjugate from cofactors of Jac(1).
ExpSumMatrix adjugate_by_cofactors(const ExpSumMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t rank = a(0, 0).rank();
  ExpSumMatrix out(n, n, ExpSum(rank));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (n == 1) {
        out(0, 0) = ExpSum::constant(rank, 1);
        continue;
      }
      ExpSumMatrix minor(n - 1, n - 1, ExpSum(rank));
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != i) minor(rr, cc++) = a(r, c);
        ++rr;
      }
      const ExpSum d = determinant(minor);
      out(i, j) = (i + j) % 2 ? -d : d;
    }
  return out;
}

PolyMatrix constant_matrix(std::size_t n, const std::vector<std::vector<int>>& rows) {
  PolyMatrix m(n, n, YPolynomial(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = YPolynomial::constant(n, rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("G2 Jacobian of P^2 as characters") {
  const auto grp = testing::group("G2");
  const CharMatrix m = jacobian_characters(*grp, 2);
  CHECK(m(0, 0) == chars(2, {{2, {1, 0}}, {-4, {0, 0}}}));
  CHECK(m(0, 1) == chars(2, {{-2, {0, 0}}}));
  CHECK(m(1, 0) == chars(2, {{-6, {2, 0}}}));
  CHECK(m(1, 1) == chars(2, {{4, {1, 0}}, {2, {0, 1}}, {2, {0, 0}}}));
  JacobianOptions full;
  full.evaluation = Evaluation::full_group;
  CHECK(testing::matrices_equal(jacobian_characters(*grp, 2, full), m));
  ChebyshevEngine engine(grp);
  const PolyMatrix p = expand_to_polynomials(engine, m);
  CHECK(testing::matrices_equal(p, engine.jacobian_symbolic(2)));
  CHECK(determinant(p) == poly("4*y1*y2 + 8*y1 + 8*y2 + 16", 2));
}

TEST_CASE("full and coset-pruned sums agree") {
  for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA2"}) {
    CAPTURE(type);
    const auto grp = testing::group(type);
    for (int k = 1; k <= 3; ++k) {
      JacobianOptions full, serial;
      full.evaluation = Evaluation::full_group;
      serial.parallel = false;
      const CharMatrix pruned = jacobian_characters(*grp, k);
      CHECK(testing::matrices_equal(jacobian_characters(*grp, k, full), pruned));
      CHECK(testing::matrices_equal(jacobian_characters(*grp, k, serial), pruned));
    }
  }
}

TEST_CASE("d coefficients for k = 1") {
  for (const char* type : {"G2", "A3"}) {
    CAPTURE(type);
    const auto grp = testing::group(type);
    const RootSystem& rs = grp->root_system();
    const std::size_t n = rs.rank();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < grp->order(); ++a)
          for (std::size_t b = 0; b < grp->order(); b += 2) {
            const auto d = d_coefficient(*grp, i, j, 1, grp->element(a), grp->element(b));
            const bool expected = i == j && grp->act_on_weight(a, rs.fundamental_weight(i)) == rs.fundamental_weight(i) &&
                                  grp->act_on_weight(b, rs.rho() - rs.fundamental_weight(i)) ==
                                      rs.rho() - rs.fundamental_weight(i);
            CHECK(d == (expected ? 1 : 0));
          }
  }
  const auto grp = testing::group("G2");
  CHECK_THROWS_AS(d_coefficient(*grp, 2, 0, 1, grp->element(0), grp->element(0)), ConstraintError);
}

TEST_CASE("Steinberg identity and the closed adjugate formula") {
  for (const char* type : {"A1", "A2", "A3", "B2", "G2", "B3", "C3", "A1xG2"}) {
    CAPTURE(type);
    const auto grp = testing::group(type);
    const RootSystem& rs = grp->root_system();
    const ExpSumMatrix jac1 = jac_matrix(*grp, 1);
    const ExpSum denominator = alternating_sum(*grp, rs.rho());
    CHECK(determinant(jac1) == denominator);
    const ExpSumMatrix adj = adjugate_jac1(*grp);
    CHECK(testing::matrices_equal(adj, adjugate_by_halving(*grp)));
    const ExpSumMatrix product = multiply(jac1, adj);
    for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(product(i, i) == denominator);
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (std::size_t j = 0; j < rs.rank(); ++j) CHECK(is_anti_invariant(rs, product(i, j)));
  }
  for (const char* type : {"A1", "A2", "A3", "B2", "G2", "D4"}) {
    CAPTURE(type);
    const auto grp = testing::group(type);
    CHECK(testing::matrices_equal(adjugate_jac1(*grp), adjugate_by_cofactors(jac_matrix(*grp, 1))));
  }
}

TEST_CASE("closed adjugate formula is off-diagonal defective for B3 and C3") {
  ChebyshevEngine b3(testing::group("B3"));
  CHECK(testing::matrices_equal(adjugate_defect(b3), constant_matrix(3, {{1, 0, 0}, {-1, 1, 0}, {0, 0, 1}})));
  ChebyshevEngine c3(testing::group("C3"));
  CHECK(testing::matrices_equal(adjugate_defect(c3), constant_matrix(3, {{1, 0, 0}, {0, 1, 0}, {-2, 0, 1}})));
  ChebyshevEngine g2(testing::group("G2"));
  CHECK(testing::matrices_equal(adjugate_defect(g2), constant_matrix(2, {{1, 0}, {0, 1}})));
}

TEST_CASE("defect-corrected character formula matches symbolic differentiation") {
  for (const char* type : {"B3", "C3", "A2", "G2"}) {
    CAPTURE(type);
    ChebyshevEngine engine(testing::group(type));
    for (int k = 1; k <= 3; ++k) {
      const PolyMatrix symbolic = engine.jacobian_symbolic(k);
      CHECK(testing::matrices_equal(jacobian_corrected(engine, k), symbolic));
      CHECK(testing::matrices_equal(jacobian_via_denominator(engine, k),
                                    expand_to_polynomials(engine, jacobian_characters(engine.group(), k))));
    }
  }
}

TEST_CASE("closed-form tables") {
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(testing::matrices_equal(closed_form_table(make_lie_type(Family::A, 1), k),
                                  jacobian_characters(*testing::group("A1"), k)));
  }
  const auto a2 = testing::group("A2");
  CHECK(testing::matrices_equal(closed_form_table(make_lie_type(Family::A, 2), 3),
                                CharMatrix{{chars(2, {{3, {2, 0}}}), chars(2, {{-3, {1, 0}}})},
                                           {chars(2, {{-3, {0, 1}}}), chars(2, {{3, {0, 2}}})}}));
  const auto g2 = testing::group("G2");
  for (int k = 3; k <= 5; ++k)
    CHECK(testing::matrices_equal(closed_form_table(make_lie_type(Family::G, 2), k), jacobian_characters(*g2, k)));
  CHECK_FALSE(testing::matrices_equal(closed_form_table(make_lie_type(Family::G, 2), 3), jacobian_characters(*g2, 2)));
  CHECK_THROWS_AS(closed_form_table(make_lie_type(Family::G, 2), 2), ConstraintError);
  CHECK_THROWS_AS(closed_form_table(make_lie_type(Family::B, 2), 1), ConstraintError);
  CHECK_THROWS_AS(closed_form_table(make_lie_type(Family::D, 4), 2), ConstraintError);
  const auto a3 = testing::group("A3");
  for (int k = 1; k <= 4; ++k)
    CHECK(testing::matrices_equal(closed_form_table(make_lie_type(Family::A, 3), k), jacobian_characters(*a3, k)));
}

TEST_CASE("B2 table in both labelings") {
  const auto b2 = testing::group("B2");
  const auto c2 = testing::group("C2");
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    const CharMatrix relabeled = closed_form_table(make_lie_type(Family::B, 2), k);
    CHECK(testing::matrices_equal(relabeled, jacobian_characters(*b2, k)));
    if (k == 2) continue;  // the printed chi_{-1,0} is zero; chars() only takes dominant subscripts
    // As printed, with the short simple root first, i.e. C2.
    const CharMatrix printed{
        {chars(2, {{k, {k - 1, 0}}, {k, {k - 3, 0}}}), chars(2, {{-k, {k - 2, 0}}})},
        {chars(2, {{-2 * k, {1, k - 2}}}), chars(2, {{k, {0, k - 1}}, {k, {0, k - 2}}})},
    };
    CHECK(testing::matrices_equal(printed, jacobian_characters(*c2, k)));
  }
}

TEST_CASE("pruning claim for k >= m_g") {
  CHECK(highest_coeff_pruning_check(*testing::group("G2"), 3));
  CHECK(highest_coeff_pruning_check(*testing::group("G2"), 4));
  CHECK(highest_coeff_pruning_check(*testing::group("A2"), 1));
  CHECK(highest_coeff_pruning_check(*testing::group("A3"), 2));
  CHECK_FALSE(highest_coeff_pruning_check(*testing::group("G2"), 2));
  CHECK_FALSE(highest_coeff_pruning_check(*testing::group("A4"), 2));
  const auto g2 = testing::group("G2");
  JacobianOptions shortcut;
  shortcut.highest_weight_shortcut = true;
  CHECK(testing::matrices_equal(jacobian_characters(*g2, 4, shortcut), jacobian_characters(*g2, 4)));
}

TEST_CASE("budget and argument errors") {
  const auto f4 = testing::group("F4");
  JacobianOptions tight;
  tight.pair_budget = 1000;
  CHECK_THROWS_WITH_AS(jacobian_characters(*f4, 1, tight), doctest::Contains("budget"), LimitExceeded);
  tight.evaluation = Evaluation::full_group;
  CHECK_THROWS_AS(jacobian_characters(*f4, 1, tight), LimitExceeded);
  CHECK_THROWS_AS(jacobian_characters(*testing::group("A2"), 0), ConstraintError);
  CHECK_THROWS_AS(jac_matrix(*testing::group("A2"), 0), ConstraintError);
  CharCombination c(2);
  CHECK_THROWS_AS((c.add_term(Weight{-1, 2}, 1)), DomainError);
}

TEST_CASE("determinant identity") {
  for (const char* type : {"A2", "B2", "G2", "B3"}) {
    CAPTURE(type);
    ChebyshevEngine engine(testing::group(type));
    const RootSystem& rs = engine.root_system();
    for (int k = 1; k <= 3; ++k) {
      Integer scale = 1;
      for (std::size_t i = 0; i < rs.rank(); ++i) scale *= k;
      const YPolynomial expected = engine.character_polynomial((k - 1) * rs.rho()).scaled(scale);
      CHECK(determinant(engine.jacobian_symbolic(k)) == expected);
      CHECK(determinant(expand_to_polynomials(engine, jacobian_characters(engine.group(), k))) == expected);
    }
  }
}
