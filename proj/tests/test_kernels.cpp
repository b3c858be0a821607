#include <doctest.h>

#include <random>

#include "chebylie/kernels.hpp"
#include "chebylie/parallel.hpp"
#include "support.hpp"

using namespace chebylie;

namespace {

ExpSum random_exp_sum(std::mt19937_64& rng, std::size_t rank, std::size_t terms) {
  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  std::uniform_int_distribution<int> coeff(-50, 50);
  std::vector<ExpSum::Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    Weight w(rank);
    for (std::size_t c = 0; c < rank; ++c) w[c] = coord(rng);
    out.emplace_back(std::move(w), Integer(coeff(rng)));
  }
  return ExpSum::from_terms(rank, std::move(out));
}

struct WorkerScope {
  int saved = worker_count();
  ~WorkerScope() { set_worker_count(saved); }
};

}  // namespace

TEST_CASE("multiply kernels agree") {
  WorkerScope scope;
  std::mt19937_64 rng(20261014);
  for (std::size_t rank : {1u, 2u, 3u, 5u}) {
    for (std::size_t size : {0u, 1u, 17u, 400u}) {
      const ExpSum a = random_exp_sum(rng, rank, size);
      const ExpSum b = random_exp_sum(rng, rank, size / 2 + 3);
      const auto reference = kernels::serial::multiply_terms(a.terms(), b.terms());
      for (int workers : {1, 2, 4}) {
        set_worker_count(workers);
        CHECK(kernels::omp::multiply_terms(a.terms(), b.terms()) == reference);
      }
    }
  }
}

TEST_CASE("multiply kernel against a term-by-term product") {
  std::mt19937_64 rng(7);
  const ExpSum a = random_exp_sum(rng, 3, 30);
  const ExpSum b = random_exp_sum(rng, 3, 25);
  ExpSum expected(3);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) expected += ExpSum::monomial(wa + wb, ca * cb);
  CHECK(ExpSum::from_terms(3, kernels::omp::multiply_terms(a.terms(), b.terms())) == expected);
  CHECK(a * b == expected);
}

TEST_CASE("jacobian entry kernels agree across worker counts") {
  WorkerScope scope;
  for (const char* type : {"A3", "B3", "G2", "D4"}) {
    CAPTURE(type);
    const auto grp = testing::group(type);
    const RootSystem& rs = grp->root_system();
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      const auto coroots = kernels::signed_coroot_orbit(rs, j);
      CHECK(coroots.size() * 2 == grp->order());
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        const auto weights = orbit(rs, 3 * rs.fundamental_weight(i));
        const auto reference = kernels::serial::jacobian_entry(rs, weights, coroots);
        for (int workers : {1, 3, 8}) {
          set_worker_count(workers);
          CHECK(kernels::omp::jacobian_entry(rs, weights, coroots) == reference);
        }
      }
    }
  }
}

TEST_CASE("signed coroot orbit is consistent with the group") {
  const auto grp = testing::group("B3");
  const RootSystem& rs = grp->root_system();
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    const auto table = kernels::signed_coroot_orbit(rs, j);
    const Weight start = rs.rho() - rs.fundamental_weight(j);
    for (std::size_t w = 0; w < grp->order(); ++w) {
      const Weight p = grp->act_on_weight(w, start);
      const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.point == p; });
      REQUIRE(it != table.end());
      CHECK(it->signed_coroot == grp->det_sign(w) * grp->act_on_coroot(w, rs.simple_coroot(j)));
    }
  }
  CHECK_THROWS_AS(kernels::signed_coroot_orbit(rs, 3), ConstraintError);
}

TEST_CASE("worker count configuration") {
  WorkerScope scope;
  set_worker_count(2);
  CHECK(worker_count() == 2);
  const auto grp = testing::group("G2");
  set_worker_count(1);
  const CharMatrix one = jacobian_characters(*grp, 5);
  set_worker_count(4);
  CHECK(jacobian_characters(*grp, 5) == one);
}
