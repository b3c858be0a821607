#include "chebylie/jacchar.hpp"

#include <limits>

#include "chebylie/kernels.hpp"

namespace chebylie {

namespace {

void require_k(int k, const char* what) {
  if (k < 1) throw ConstraintError(std::string(what) + ": k must be >= 1, got " + std::to_string(k));
}

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

CharCombination from_accumulator(std::size_t rank, const std::map<Weight, Integer>& acc) {
  CharCombination out(rank);
  for (const auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

}  // namespace

Integer CharCombination::coefficient(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void CharCombination::add_term(const Weight& lambda, const Integer& c) {
  if (lambda.rank() != rank_) throw DimensionError("CharCombination: rank mismatch");
  if (!is_dominant(lambda))
    throw DomainError("CharCombination: highest weight " + lambda.to_string() + " is not dominant");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CharCombination& CharCombination::operator+=(const CharCombination& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

CharCombination CharCombination::scaled(const Integer& s) const {
  CharCombination out(rank_);
  if (s == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * s);
  return out;
}

ExpSumMatrix jac_matrix(const WeylGroup& grp, int k) {
  require_k(k, "jac_matrix");
  const RootSystem& rs = grp.root_system();
  const std::size_t n = rs.rank();
  ExpSumMatrix m(n, n, ExpSum(n));
  for (std::size_t i = 0; i < n; ++i) {
    const ExpSum s = orbit_sum(rs, k * rs.fundamental_weight(i));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = derivation(j, s);
  }
  return m;
}

ExpSumMatrix adjugate_jac1(const WeylGroup& grp) {
  const RootSystem& rs = grp.root_system();
  const std::size_t n = rs.rank();
  ExpSumMatrix m(n, n, ExpSum(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto points = kernels::signed_coroot_orbit(rs, j);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<ExpSum::Term> terms;
      for (const auto& [nu, v] : points)
        if (v[i] != 0) terms.emplace_back(nu, v[i]);
      m(i, j) = ExpSum::from_terms(n, std::move(terms));
    }
  }
  return m;
}

std::int64_t d_coefficient(const WeylGroup& grp, std::size_t i, std::size_t j, int k, const WeylElement& w1,
                           const WeylElement& w2) {
  require_k(k, "d_coefficient");
  const RootSystem& rs = grp.root_system();
  if (i >= rs.rank() || j >= rs.rank()) throw ConstraintError("d_coefficient: index out of range");
  const Weight mu = act_on_weight(w1, k * rs.fundamental_weight(i));
  const Weight nu = act_on_weight(w2, rs.rho() - rs.fundamental_weight(j));
  if (!is_strictly_dominant(mu + nu)) return 0;
  return w2.det_sign() * inner_product(mu, act_on_coroot(w2, rs.simple_coroot(j)));
}

namespace {

CharMatrix jacobian_full_group(const WeylGroup& grp, int k, const JacobianOptions& options) {
  const RootSystem& rs = grp.root_system();
  const std::size_t n = rs.rank();
  const std::uint64_t order = grp.order();
  if (checked_product(order, order) > options.pair_budget)
    throw LimitExceeded("jacobian_characters: |W|^2 = " + std::to_string(order) + "^2 exceeds the pair budget of " +
                        std::to_string(options.pair_budget) + " (raise it with --max-pair-budget)");
  const Weight rho = rs.rho();
  CharMatrix out(n, n, CharCombination(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Weight top = k * rs.fundamental_weight(i);
    std::vector<Weight> mus;
    mus.reserve(order);
    for (std::size_t w1 = 0; w1 < order; ++w1) mus.push_back(grp.act_on_weight(w1, top));
    const std::int64_t divisor = 2 * static_cast<std::int64_t>(stabilizer_size(grp, rs.fundamental_weight(i)));
    for (std::size_t j = 0; j < n; ++j) {
      const Weight base = rho - rs.fundamental_weight(j);
      const CorootVector coroot = rs.simple_coroot(j);
      std::map<Weight, Integer> numerators;
      for (std::size_t w2 = 0; w2 < order; ++w2) {
        const Weight nu = grp.act_on_weight(w2, base);
        const CorootVector v = grp.act_on_coroot(w2, coroot);
        const int det = grp.det_sign(w2);
        for (const Weight& mu : mus) {
          const Weight lambda = mu + nu;
          if (!is_strictly_dominant(lambda)) continue;
          const std::int64_t d = det * inner_product(mu, v);
          if (d != 0) numerators[lambda - rho] += d;
        }
      }
      std::map<Weight, Integer> coeffs;
      for (const auto& [w, c] : numerators) {
        if (c == 0) continue;
        if (c % divisor != 0)
          throw ConsistencyError("jacobian_characters: numerator " + to_decimal(c) + " at " + w.to_string() +
                                 " is not divisible by 2 s_i = " + std::to_string(divisor));
        coeffs.emplace(w, c / divisor);
      }
      out(i, j) = from_accumulator(n, coeffs);
    }
  }
  return out;
}

CharMatrix jacobian_coset_pruned(const WeylGroup& grp, int k, const JacobianOptions& options) {
  const RootSystem& rs = grp.root_system();
  const std::size_t n = rs.rank();
  const bool shortcut = options.highest_weight_shortcut && k >= rs.highest_root_coefficient();
  std::vector<std::vector<Weight>> weight_orbits(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Weight top = k * rs.fundamental_weight(i);
    weight_orbits[i] = shortcut ? std::vector<Weight>{top} : orbit(rs, top);
    if (checked_product(weight_orbits[i].size(), grp.order() / 2) > options.pair_budget)
      throw LimitExceeded("jacobian_characters: coset pair count for row " + std::to_string(i + 1) +
                          " exceeds the pair budget of " + std::to_string(options.pair_budget) +
                          " (raise it with --max-pair-budget)");
  }
  CharMatrix out(n, n, CharCombination(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto coroot_orbit = kernels::signed_coroot_orbit(rs, j);
    if (coroot_orbit.size() * 2 != grp.order())
      throw ConsistencyError("orbit of rho - omega_j does not have |W|/2 points");
    for (std::size_t i = 0; i < n; ++i) {
      const auto acc = options.parallel ? kernels::omp::jacobian_entry(rs, weight_orbits[i], coroot_orbit)
                                        : kernels::serial::jacobian_entry(rs, weight_orbits[i], coroot_orbit);
      out(i, j) = from_accumulator(n, acc);
    }
  }
  return out;
}

}  // namespace

CharMatrix jacobian_characters(const WeylGroup& grp, int k, const JacobianOptions& options) {
  require_k(k, "jacobian_characters");
  return options.evaluation == Evaluation::full_group ? jacobian_full_group(grp, k, options)
                                                      : jacobian_coset_pruned(grp, k, options);
}

PolyMatrix expand_to_polynomials(ChebyshevEngine& engine, const CharMatrix& m) {
  const std::size_t n = engine.rank();
  PolyMatrix out(m.rows(), m.cols(), YPolynomial(n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      YPolynomial p(n);
      for (const auto& [w, c] : m(i, j).terms()) p += engine.character_polynomial(w).scaled(c);
      out(i, j) = std::move(p);
    }
  return out;
}

PolyMatrix jacobian_via_denominator(ChebyshevEngine& engine, int k) {
  const WeylGroup& grp = engine.group();
  const std::size_t n = engine.rank();
  const ExpSumMatrix product = multiply(jac_matrix(grp, k), adjugate_jac1(grp));
  PolyMatrix out(n, n, YPolynomial(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = engine.express_in_y(divide_by_denominator(grp, product(i, j)));
  return out;
}

PolyMatrix adjugate_defect(ChebyshevEngine& engine) {
  const WeylGroup& grp = engine.group();
  const std::size_t n = engine.rank();
  const ExpSumMatrix product = multiply(jac_matrix(grp, 1), adjugate_jac1(grp));
  PolyMatrix out(n, n, YPolynomial(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = engine.express_in_y(divide_by_denominator(grp, product(i, j)));
  return out;
}

PolyMatrix adjugate(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t nvars = n ? m(0, 0).nvars() : 0;
  PolyMatrix out(n, n, YPolynomial(nvars));
  if (n == 1) {
    out(0, 0) = YPolynomial::constant(nvars, 1);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1, YPolynomial(nvars));
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != i) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      YPolynomial cof = determinant(minor);
      out(i, j) = (i + j) % 2 ? -cof : cof;
    }
  return out;
}

PolyMatrix jacobian_corrected(ChebyshevEngine& engine, int k, const JacobianOptions& options) {
  const PolyMatrix defect = adjugate_defect(engine);
  const std::size_t n = engine.rank();
  if (!(determinant(defect) == YPolynomial::constant(n, 1)))
    throw ConsistencyError("jacobian_corrected: Jac(1) Adj(Jac(1)) / J(e^rho) does not have determinant 1");
  const PolyMatrix formula = expand_to_polynomials(engine, jacobian_characters(engine.group(), k, options));
  return multiply(formula, adjugate(defect));
}

YPolynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows() ? m(0, 0).nvars() : 0;
  std::size_t nvars = n;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) nvars = std::max(nvars, m(i, j).nvars());
  return determinant(m, YPolynomial(nvars), YPolynomial::constant(nvars, 1));
}

ExpSum determinant(const ExpSumMatrix& m) {
  const std::size_t rank = m.rows() ? m(0, 0).rank() : 0;
  return determinant(m, ExpSum(rank), ExpSum::constant(rank, 1));
}

int closed_form_min_k(const LieType& type) {
  switch (type.family) {
    case Family::A:
      if (type.rank <= 3) return 1;
      break;
    case Family::B:
      if (type.rank == 2) return 2;
      break;
    case Family::G:
      return 3;
    default:
      break;
  }
  throw ConstraintError("closed_form_table: no closed form for " + type.to_string() +
                        " (available: A1, A2, A3, B2, G2)");
}

CharMatrix closed_form_table(const LieType& type, int k) {
  const int min_k = closed_form_min_k(type);
  if (k < min_k)
    throw ConstraintError("closed_form_table: " + type.to_string() + " requires k >= " + std::to_string(min_k));
  const auto n = static_cast<std::size_t>(type.rank);
  // chi(c, {a, b, ...}) adds c chi_{a omega_1 + b omega_2 + ...}; negative
  // subscripts denote zero.
  auto chi = [n](std::initializer_list<std::pair<int, std::vector<int>>> parts) {
    CharCombination out(n);
    for (const auto& [c, sub] : parts) {
      bool negative = false;
      Weight w(n);
      for (std::size_t i = 0; i < n; ++i) {
        negative |= sub[i] < 0;
        w[i] = sub[i];
      }
      if (!negative) out.add_term(w, c);
    }
    return out;
  };
  CharMatrix m(n, n, CharCombination(n));
  if (type.family == Family::A && n == 1) {
    m(0, 0) = chi({{1, {k - 1}}});
  } else if (type.family == Family::A && n == 2) {
    m(0, 0) = chi({{1, {k - 1, 0}}});
    m(0, 1) = chi({{-1, {k - 2, 0}}});
    m(1, 0) = chi({{-1, {0, k - 2}}});
    m(1, 1) = chi({{1, {0, k - 1}}});
  } else if (type.family == Family::B) {
    // Printed with the short simple root first; swap both nodes to reach the
    // B2 Cartan matrix [[2,-2],[-1,2]] used here.
    m(1, 1) = chi({{1, {0, k - 1}}, {1, {0, k - 3}}});
    m(1, 0) = chi({{-1, {0, k - 2}}});
    m(0, 1) = chi({{-2, {k - 2, 1}}});
    m(0, 0) = chi({{1, {k - 1, 0}}, {1, {k - 2, 0}}});
  } else if (type.family == Family::G) {
    m(0, 0) = chi({{1, {k - 1, 0}}, {1, {k - 4, 0}}, {2, {k - 4, 1}}});
    m(0, 1) = chi({{-1, {k - 2, 0}}, {-1, {k - 3, 0}}});
    m(1, 0) = chi({{-3, {2, k - 2}}, {-3, {2, k - 3}}});
    m(1, 1) = chi({{1, {0, k - 1}}, {1, {0, k - 2}}, {2, {1, k - 2}}});
  } else {
    m(0, 0) = chi({{1, {k - 1, 0, 0}}});
    m(0, 1) = chi({{-1, {k - 2, 0, 0}}});
    m(0, 2) = chi({{1, {k - 3, 0, 0}}});
    m(1, 0) = chi({{1, {1, k - 3, 0}}, {-1, {0, k - 2, 1}}});
    m(1, 1) = chi({{1, {0, k - 1, 0}}, {-1, {0, k - 3, 0}}});
    m(1, 2) = chi({{1, {0, k - 3, 1}}, {-1, {1, k - 2, 0}}});
    m(2, 0) = chi({{1, {0, 0, k - 3}}});
    m(2, 1) = chi({{-1, {0, 0, k - 2}}});
    m(2, 2) = chi({{1, {0, 0, k - 1}}});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).scaled(k);
  return m;
}

bool highest_coeff_pruning_check(const WeylGroup& grp, int k) {
  require_k(k, "highest_coeff_pruning_check");
  const RootSystem& rs = grp.root_system();
  const std::size_t n = rs.rank();
  for (std::size_t j = 0; j < n; ++j) {
    const auto coroot_orbit = kernels::signed_coroot_orbit(rs, j);
    for (std::size_t i = 0; i < n; ++i) {
      const Weight top = k * rs.fundamental_weight(i);
      for (const Weight& mu : orbit(rs, top)) {
        if (mu == top) continue;
        for (const auto& [nu, v] : coroot_orbit)
          if (is_strictly_dominant(mu + nu) && inner_product(mu, v) != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace chebylie
