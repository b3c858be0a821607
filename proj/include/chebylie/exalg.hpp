#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "chebylie/integer.hpp"
#include "chebylie/weyl.hpp"

namespace chebylie {

/// Finite formal sum sum_lambda c_lambda e^lambda in Z[Lambda].
///
/// Terms are kept sorted by weight (lexicographic on coordinates) with no
/// zero coefficients, so equality is structural and iteration order is
/// deterministic.
class ExpSum {
 public:
  using Term = std::pair<Weight, Integer>;

  ExpSum() = default;
  explicit ExpSum(std::size_t rank) : rank_(rank) {}

  static ExpSum monomial(Weight lambda, Integer coeff = 1);
  static ExpSum constant(std::size_t rank, Integer coeff);
  /// Combines like terms and drops zeros.
  static ExpSum from_terms(std::size_t rank, std::vector<Term> terms);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  Integer coefficient(const Weight& lambda) const;
  /// Value at the identity of the torus: the sum of all coefficients.
  Integer coefficient_sum() const;

  ExpSum& operator+=(const ExpSum& o);
  ExpSum& operator-=(const ExpSum& o);
  friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
  friend ExpSum operator-(ExpSum a, const ExpSum& b) { return a -= b; }
  friend ExpSum operator-(ExpSum a) { return a.scaled(-1); }
  friend ExpSum operator*(const ExpSum& a, const ExpSum& b);
  ExpSum scaled(const Integer& s) const;

  friend bool operator==(const ExpSum&, const ExpSum&) = default;

  void require_same_rank(const ExpSum& o) const;

 private:
  std::size_t rank_ = 0;
  std::vector<Term> terms_;
};

ExpSum weyl_action(const WeylElement& w, const ExpSum& a);
/// Action of simple reflection sigma_i.
ExpSum reflect(const RootSystem& rs, std::size_t i, const ExpSum& a);

bool is_invariant(const RootSystem& rs, const ExpSum& a);
bool is_anti_invariant(const RootSystem& rs, const ExpSum& a);

/// S(e^lambda): the orbit sum of a dominant weight.
ExpSum orbit_sum(const WeylGroup& grp, const Weight& lambda);
ExpSum orbit_sum(const RootSystem& rs, const Weight& lambda);
/// J(e^lambda) = sum_w det(w) e^{w(lambda)}.
ExpSum alternating_sum(const WeylGroup& grp, const Weight& lambda);

/// D_j: e^lambda -> (lambda, alpha_j^vee) e^lambda.
ExpSum derivation(std::size_t j, const ExpSum& a);

/// Terms whose weights are maximal in the dominance order.
std::vector<ExpSum::Term> maximal_terms(const RootSystem& rs, const ExpSum& a);

/// q with q * J(e^rho) = a for anti-invariant a, by leading-term reduction.
ExpSum divide_by_denominator(const WeylGroup& grp, const ExpSum& a);

/// Coefficients c_lambda of an anti-invariant a = sum c_lambda J(e^lambda)
/// over strictly dominant lambda.
std::vector<ExpSum::Term> alternating_decomposition(const WeylGroup& grp, const ExpSum& a);

/// chi_lambda = J(e^{rho+lambda}) / J(e^rho).
ExpSum character(const WeylGroup& grp, const Weight& lambda);

/// An invariant element written in the orbit-sum basis,
/// a = sum_{lambda dominant} c_lambda S(e^lambda). Since an invariant has
/// constant coefficients along orbits, the keys are exactly its dominant
/// support and the values its coefficients there.
class OrbitExpansion {
 public:
  OrbitExpansion() = default;
  explicit OrbitExpansion(std::size_t rank) : rank_(rank) {}

  /// Fails with DomainError unless a is W-invariant.
  static OrbitExpansion from_exp_sum(const RootSystem& rs, const ExpSum& a);
  static OrbitExpansion single(Weight dominant, Integer coeff = 1);

  std::size_t rank() const { return rank_; }
  const std::map<Weight, Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(const Weight& dominant) const;

  void add_term(const Weight& dominant, const Integer& c);
  OrbitExpansion& operator+=(const OrbitExpansion& o);
  OrbitExpansion scaled(const Integer& s) const;

  /// Product with S(e^{omega_i}).
  OrbitExpansion times_fundamental(const RootSystem& rs, std::size_t i) const;
  /// Product with S(e^{omega_i}) given the orbit W(omega_i).
  OrbitExpansion times_orbit(const RootSystem& rs, std::span<const Weight> fundamental_orbit) const;
  ExpSum to_exp_sum(const RootSystem& rs) const;

  friend bool operator==(const OrbitExpansion&, const OrbitExpansion&) = default;

 private:
  std::size_t rank_ = 0;
  std::map<Weight, Integer> coeffs_;
};

}  // namespace chebylie
