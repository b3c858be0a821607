#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "chebylie/exalg.hpp"

namespace chebylie {

using Exponents = boost::container::small_vector<std::uint16_t, 8>;

/// Sparse integer polynomial in y_1..y_n. Terms are stored in descending
/// graded-lex order with no zero coefficients.
class YPolynomial {
 public:
  using Term = std::pair<Exponents, Integer>;

  YPolynomial() = default;
  explicit YPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static YPolynomial constant(std::size_t nvars, Integer c);
  /// y_{i+1} (0-based index i).
  static YPolynomial variable(std::size_t nvars, std::size_t i);
  static YPolynomial monomial(Exponents e, Integer c = 1);
  static YPolynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  Integer coefficient(const Exponents& e) const;
  int total_degree() const;

  YPolynomial& operator+=(const YPolynomial& o);
  YPolynomial& operator-=(const YPolynomial& o);
  friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
  friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
  friend YPolynomial operator-(const YPolynomial& a) { return a.scaled(-1); }
  friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
  YPolynomial scaled(const Integer& s) const;
  YPolynomial pow(unsigned e) const;

  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

 private:
  void require_compatible(const YPolynomial& o) const;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Descending graded-lex comparison: true if a comes before b.
bool graded_lex_before(const Exponents& a, const Exponents& b);

YPolynomial differentiate(const YPolynomial& p, std::size_t j);
/// p(q_1, ..., q_n).
YPolynomial substitute(const YPolynomial& p, std::span<const YPolynomial> values);

using PolyMatrix = Matrix<YPolynomial>;

/// A polynomial map (g_1, ..., g_n). For P^k of a root system, `type` names it
/// and `k` is the dilation factor.
struct PolyMap {
  std::string type;
  int k = 1;
  std::vector<YPolynomial> components;

  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.components == b.components; }
};

/// Formal substitution of q into p: (p o q)_i = p_i(q_1, ..., q_n).
PolyMap compose(const PolyMap& p, const PolyMap& q);

/// Translation between invariant exponential sums and polynomials in the
/// generalized cosines y_i = S(e^{omega_i}), for one enumerated Weyl group.
///
/// Products of the y_i are memoized in orbit-sum form. The caches are guarded
/// by a mutex, so one engine can be shared between threads.
class ChebyshevEngine {
 public:
  explicit ChebyshevEngine(std::shared_ptr<const WeylGroup> group);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const RootSystem& root_system() const { return group_->root_system(); }
  std::size_t rank() const { return root_system().rank(); }

  /// prod_i S(e^{omega_i})^{e_i}, expanded.
  ExpSum y_monomial(const Exponents& e);
  /// The same product in the orbit-sum basis.
  OrbitExpansion y_monomial_orbits(const Exponents& e);

  /// The unique integer polynomial p with phi(p) = a, where phi substitutes
  /// y_i -> S(e^{omega_i}). Fails with DomainError if a is not invariant.
  YPolynomial express_in_y(const ExpSum& a);
  YPolynomial express_in_y(const OrbitExpansion& a);

  /// phi(p).
  ExpSum expand(const YPolynomial& p);
  OrbitExpansion expand_orbits(const YPolynomial& p);

  /// P^k: component i is S(e^{k omega_i}) written in the y variables.
  PolyMap chebyshev_map(int k);
  /// [d g_i / d y_j] of P^k by formal differentiation.
  PolyMatrix jacobian_symbolic(int k);

  /// chi_lambda as an exponential sum and as a polynomial in y, memoized.
  ExpSum character(const Weight& lambda);
  YPolynomial character_polynomial(const Weight& lambda);

 private:
  const OrbitExpansion& power_locked(const Exponents& e);

  std::shared_ptr<const WeylGroup> group_;
  std::vector<std::vector<Weight>> fundamental_orbits_;
  std::recursive_mutex mutex_;
  std::map<Exponents, OrbitExpansion> powers_;
  std::map<Weight, ExpSum> characters_;
  std::map<Weight, YPolynomial> character_polys_;
};

}  // namespace chebylie
