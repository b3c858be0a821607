#pragma once

#include <cstdint>
#include <map>

#include "chebylie/cheby.hpp"

namespace chebylie {

/// sum_lambda c_lambda chi_lambda over dominant highest weights.
class CharCombination {
 public:
  CharCombination() = default;
  explicit CharCombination(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Weight, Integer>& terms() const { return terms_; }
  Integer coefficient(const Weight& lambda) const;

  /// Adds c chi_lambda; lambda must be dominant.
  void add_term(const Weight& lambda, const Integer& c);

  CharCombination& operator+=(const CharCombination& o);
  CharCombination scaled(const Integer& s) const;

  friend bool operator==(const CharCombination&, const CharCombination&) = default;

 private:
  std::size_t rank_ = 0;
  std::map<Weight, Integer> terms_;
};

using ExpSumMatrix = Matrix<ExpSum>;
using CharMatrix = Matrix<CharCombination>;

/// Jac(k) = [D_j S(e^{k omega_i})].
ExpSumMatrix jac_matrix(const WeylGroup& grp, int k);

/// Adj(Jac(1)) from the closed formula
/// (1/2) sum_w det(w) (omega_i, w(alpha_j^vee)) e^{w(rho - omega_j)},
/// summed once per coset of Stab(rho - omega_j) = {1, sigma_j}.
ExpSumMatrix adjugate_jac1(const WeylGroup& grp);

/// d_ij^k(w1, w2) = det(w2) (w1(k omega_i), w2(alpha_j^vee)) when
/// w1(k omega_i) + w2(rho - omega_j) is strictly dominant, else 0.
/// Indices are 0-based.
std::int64_t d_coefficient(const WeylGroup& grp, std::size_t i, std::size_t j, int k, const WeylElement& w1,
                           const WeylElement& w2);

enum class Evaluation {
  /// Sum over all of W x W, then divide by 2 s_i.
  full_group,
  /// Sum over the orbit of k omega_i and coset representatives of
  /// Stab(rho - omega_j); no division needed.
  coset_pruned,
};

struct JacobianOptions {
  static constexpr std::uint64_t kDefaultPairBudget = 100'000'000;

  Evaluation evaluation = Evaluation::coset_pruned;
  std::uint64_t pair_budget = kDefaultPairBudget;
  bool parallel = true;
  /// For k >= m_g only w1 in Stab(omega_i) contributes, so the orbit of
  /// k omega_i may be replaced by k omega_i alone.
  bool highest_weight_shortcut = false;
};

/// The Jacobian of P^k as integer combinations of irreducible characters.
CharMatrix jacobian_characters(const WeylGroup& grp, int k, const JacobianOptions& options = {});

/// Each entry expanded to a polynomial in y through the Weyl character formula.
PolyMatrix expand_to_polynomials(ChebyshevEngine& engine, const CharMatrix& m);

/// Jacobian of P^k computed as Jac(k) Adj(Jac(1)) / J(e^rho) in the group
/// algebra, then written in y.
PolyMatrix jacobian_via_denominator(ChebyshevEngine& engine, int k);

/// E = Jac(1) B / J(e^rho) in y, where B is the matrix returned by
/// adjugate_jac1. E is the identity exactly when B is the adjugate of Jac(1);
/// otherwise it is still unimodular (det E = 1).
PolyMatrix adjugate_defect(ChebyshevEngine& engine);

/// The Jacobian of P^k from the character formula, multiplied on the right
/// by E^{-1} = Adj(E). Equals the symbolic Jacobian for every type, including
/// those where E is not the identity.
PolyMatrix jacobian_corrected(ChebyshevEngine& engine, int k, const JacobianOptions& options = {});

YPolynomial determinant(const PolyMatrix& m);
/// Transpose of the cofactor matrix.
PolyMatrix adjugate(const PolyMatrix& m);
ExpSum determinant(const ExpSumMatrix& m);

/// The closed-form character matrices printed for A1, A2, B2, G2 and A3
/// (including the factor k). Characters whose subscript has a negative entry
/// are zero. The B2 table is returned in the labeling of cartan() for B2,
/// i.e. with the long simple root first.
CharMatrix closed_form_table(const LieType& type, int k);
/// Smallest k for which closed_form_table applies.
int closed_form_min_k(const LieType& type);

/// True if every nonzero d_ij^k(w1, w2) has w1 in Stab(omega_i), i.e.
/// w1(k omega_i) = k omega_i. Holds for k >= m_g.
bool highest_coeff_pruning_check(const WeylGroup& grp, int k);

}  // namespace chebylie
