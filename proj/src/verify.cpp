#include "chebylie/verify.hpp"

#include <algorithm>
#include <functional>

namespace chebylie {

namespace {

class Suite {
 public:
  void run(std::string name, const std::function<std::string()>& check) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string with_k(const std::string& name, int k) { return name + " [k=" + std::to_string(k) + "]"; }

template <typename T>
std::string first_mismatch(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") differs";
  return {};
}

std::uint64_t degree_product(const RootSystem& rs) {
  std::uint64_t p = 1;
  for (int d : rs.degrees()) p *= static_cast<std::uint64_t>(d);
  return p;
}

}  // namespace

std::vector<CheckResult> run_identity_suite(ChebyshevEngine& engine, const VerifyOptions& options) {
  const WeylGroup& grp = engine.group();
  const RootSystem& rs = grp.root_system();
  const std::size_t n = rs.rank();
  Suite suite;

  suite.run("weyl order equals product of degrees", [&]() -> std::string {
    const auto expected = degree_product(rs);
    if (grp.order() == expected) return {};
    return "enumerated " + std::to_string(grp.order()) + ", expected " + std::to_string(expected);
  });
  suite.run("max |T_w entry| equals m_g", [&]() -> std::string {
    const int got = max_abs_entry(grp);
    if (got == rs.highest_root_coefficient()) return {};
    return "got " + std::to_string(got) + ", expected " + std::to_string(rs.highest_root_coefficient());
  });

  const ExpSum denominator = alternating_sum(grp, rs.rho());
  std::optional<ExpSumMatrix> jac1;
  std::optional<ExpSumMatrix> adj;
  suite.run("steinberg: det Jac(1) = J(e^rho)", [&]() -> std::string {
    jac1 = jac_matrix(grp, 1);
    return determinant(*jac1) == denominator ? std::string{} : "determinant differs from J(e^rho)";
  });
  suite.run("adjugate: Jac(1) Adj(Jac(1)) = J(e^rho) I", [&]() -> std::string {
    if (!jac1) jac1 = jac_matrix(grp, 1);
    adj = adjugate_jac1(grp);
    ExpSumMatrix expected(n, n, ExpSum(n));
    for (std::size_t i = 0; i < n; ++i) expected(i, i) = denominator;
    return first_mismatch(multiply(*jac1, *adj), expected);
  });

  const std::uint64_t order = grp.order();
  const bool full_group_fits = order <= options.jacobian.pair_budget / std::max<std::uint64_t>(order, 1);
  const auto single = rs.components().size() == 1 ? std::optional<LieType>(rs.components()[0]) : std::nullopt;

  for (int k : options.ks) {
    std::optional<CharMatrix> chars;
    std::optional<PolyMatrix> symbolic;
    suite.run(with_k("character formula matches symbolic jacobian", k), [&]() -> std::string {
      chars = jacobian_characters(grp, k, options.jacobian);
      symbolic = engine.jacobian_symbolic(k);
      return first_mismatch(expand_to_polynomials(engine, *chars), *symbolic);
    });
    if (full_group_fits)
      suite.run(with_k("full W x W sum matches coset-pruned sum", k), [&]() -> std::string {
        JacobianOptions full = options.jacobian;
        full.evaluation = Evaluation::full_group;
        if (!chars) chars = jacobian_characters(grp, k, options.jacobian);
        return first_mismatch(jacobian_characters(grp, k, full), *chars);
      });
    suite.run(with_k("det J(P^k) = k^n chi_{(k-1)rho}", k), [&]() -> std::string {
      if (!symbolic) symbolic = engine.jacobian_symbolic(k);
      Integer scale = 1;
      for (std::size_t i = 0; i < n; ++i) scale *= k;
      const YPolynomial expected = engine.character_polynomial((k - 1) * rs.rho()).scaled(scale);
      if (!(determinant(*symbolic) == expected)) return "symbolic determinant differs";
      if (chars && !(determinant(expand_to_polynomials(engine, *chars)) == expected))
        return "character-formula determinant differs";
      return {};
    });
    suite.run(with_k("entries of Jac(k) Adj(Jac(1)) are anti-invariant", k), [&]() -> std::string {
      if (!adj) adj = adjugate_jac1(grp);
      const ExpSumMatrix product = multiply(jac_matrix(grp, k), *adj);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!is_anti_invariant(rs, product(i, j)))
            return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not anti-invariant";
      return {};
    });
    suite.run(with_k("Jac(k) Adj(Jac(1)) / J(e^rho) matches symbolic jacobian", k), [&]() -> std::string {
      if (!symbolic) symbolic = engine.jacobian_symbolic(k);
      return first_mismatch(jacobian_via_denominator(engine, k), *symbolic);
    });
    suite.run(with_k("defect-corrected character formula matches symbolic jacobian", k), [&]() -> std::string {
      if (!symbolic) symbolic = engine.jacobian_symbolic(k);
      return first_mismatch(jacobian_corrected(engine, k, options.jacobian), *symbolic);
    });
    if (k >= rs.highest_root_coefficient())
      suite.run(with_k("only w1 in Stab(omega_i) contributes for k >= m_g", k), [&]() -> std::string {
        return highest_coeff_pruning_check(grp, k) ? std::string{} : "found a contribution with w1(k omega_i) != k omega_i";
      });
    if (single) {
      bool available = false;
      try {
        available = k >= closed_form_min_k(*single);
      } catch (const ConstraintError&) {
      }
      if (available)
        suite.run(with_k("closed-form table", k), [&]() -> std::string {
          if (!chars) chars = jacobian_characters(grp, k, options.jacobian);
          return first_mismatch(*chars, closed_form_table(*single, k));
        });
    }
  }

  for (int k : options.ks)
    for (int l : options.ks) {
      if (k < 2 || l < 2 || k > l || k * l > 9) continue;
      suite.run("P^" + std::to_string(k) + " o P^" + std::to_string(l) + " = P^" + std::to_string(k * l),
                [&]() -> std::string {
                  const PolyMap a = engine.chebyshev_map(k);
                  const PolyMap b = engine.chebyshev_map(l);
                  const PolyMap kl = engine.chebyshev_map(k * l);
                  if (!(compose(a, b) == kl)) return "P^k o P^l differs";
                  if (!(compose(b, a) == kl)) return "P^l o P^k differs";
                  return {};
                });
    }

  suite.run("characters of fundamental weights", [&]() -> std::string {
    for (std::size_t i = 0; i < n; ++i) {
      const Weight w = rs.fundamental_weight(i);
      const ExpSum chi = engine.character(w);
      if (!is_invariant(rs, chi)) return "chi_{omega_" + std::to_string(i + 1) + "} is not invariant";
      if (!(engine.expand(engine.character_polynomial(w)) == chi))
        return "chi_{omega_" + std::to_string(i + 1) + "} does not round-trip through y";
      if (chi.coefficient(w) != 1) return "highest weight of chi_{omega_" + std::to_string(i + 1) + "} has multiplicity != 1";
    }
    return {};
  });

  return suite.take();
}

bool all_passed(std::span<const CheckResult> results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace chebylie
