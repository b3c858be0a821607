#include "chebylie/exalg.hpp"

#include <algorithm>
#include <unordered_map>

#include "chebylie/detail/reduction.hpp"
#include "chebylie/kernels.hpp"
#include "chebylie/parallel.hpp"

namespace chebylie {

namespace {

bool weight_less(const ExpSum::Term& a, const ExpSum::Term& b) { return a.first < b.first; }

std::vector<ExpSum::Term> merge_combine(std::span<const ExpSum::Term> x, std::span<const ExpSum::Term> y,
                                        int sign) {
  std::vector<ExpSum::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, sign > 0 ? y[j].second : Integer(-y[j].second));
      ++j;
    } else {
      Integer c = sign > 0 ? x[i].second + y[j].second : x[i].second - y[j].second;
      if (c != 0) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

ExpSum relabel(const ExpSum& a, auto&& map_weight) {
  std::vector<ExpSum::Term> terms;
  terms.reserve(a.size());
  for (const auto& [w, c] : a.terms()) terms.emplace_back(map_weight(w), c);
  std::sort(terms.begin(), terms.end(), weight_less);
  return ExpSum::from_terms(a.rank(), std::move(terms));
}

std::vector<Weight> maximal_weights(const RootSystem& rs, const ExpSum& a) {
  std::vector<Weight> out;
  for (const auto& t : maximal_terms(rs, a)) out.push_back(t.first);
  return out;
}

void require_anti_invariant(const RootSystem& rs, const ExpSum& a, const char* what) {
  rs.require_rank(a.rank(), what);
  if (!is_anti_invariant(rs, a)) throw DomainError(std::string(what) + ": input is not anti-invariant");
}

}  // namespace

ExpSum ExpSum::monomial(Weight lambda, Integer coeff) {
  ExpSum s(lambda.rank());
  if (coeff != 0) s.terms_.emplace_back(std::move(lambda), std::move(coeff));
  return s;
}

ExpSum ExpSum::constant(std::size_t rank, Integer coeff) { return monomial(Weight(rank), std::move(coeff)); }

ExpSum ExpSum::from_terms(std::size_t rank, std::vector<Term> terms) {
  ExpSum s(rank);
  for (const auto& t : terms)
    if (t.first.rank() != rank) throw DimensionError("ExpSum term has wrong rank");
  if (!std::is_sorted(terms.begin(), terms.end(), weight_less))
    std::sort(terms.begin(), terms.end(), weight_less);
  for (auto& t : terms) {
    if (!s.terms_.empty() && s.terms_.back().first == t.first) {
      s.terms_.back().second += t.second;
      if (s.terms_.back().second == 0) s.terms_.pop_back();
    } else if (t.second != 0) {
      s.terms_.push_back(std::move(t));
    }
  }
  return s;
}

void ExpSum::require_same_rank(const ExpSum& o) const {
  if (o.rank_ != rank_)
    throw DimensionError("ExpSum rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
}

Integer ExpSum::coefficient(const Weight& lambda) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{lambda, 0}, weight_less);
  return (it != terms_.end() && it->first == lambda) ? it->second : Integer(0);
}

Integer ExpSum::coefficient_sum() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

ExpSum& ExpSum::operator+=(const ExpSum& o) {
  if (o.terms_.empty() && o.rank_ == 0) return *this;
  require_same_rank(o);
  terms_ = merge_combine(terms_, o.terms_, +1);
  return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& o) {
  require_same_rank(o);
  terms_ = merge_combine(terms_, o.terms_, -1);
  return *this;
}

ExpSum ExpSum::scaled(const Integer& s) const {
  ExpSum out(rank_);
  if (s == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.terms_.emplace_back(w, c * s);
  return out;
}

ExpSum operator*(const ExpSum& a, const ExpSum& b) {
  a.require_same_rank(b);
  const bool parallel = worker_count() > 1 && a.size() * b.size() > 4096;
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  auto terms = parallel ? kernels::omp::multiply_terms(big.terms(), small.terms())
                        : kernels::serial::multiply_terms(big.terms(), small.terms());
  ExpSum out(a.rank());
  out.terms_ = std::move(terms);
  return out;
}

ExpSum weyl_action(const WeylElement& w, const ExpSum& a) {
  if (w.rank() != a.rank()) throw DimensionError("weyl_action: rank mismatch");
  return relabel(a, [&](const Weight& lambda) { return act_on_weight(w, lambda); });
}

ExpSum reflect(const RootSystem& rs, std::size_t i, const ExpSum& a) {
  rs.require_rank(a.rank(), "reflect");
  return relabel(a, [&](const Weight& lambda) { return rs.reflect(i, lambda); });
}

bool is_invariant(const RootSystem& rs, const ExpSum& a) {
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (reflect(rs, i, a) != a) return false;
  return true;
}

bool is_anti_invariant(const RootSystem& rs, const ExpSum& a) {
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (reflect(rs, i, a) != -a) return false;
  return true;
}

ExpSum orbit_sum(const RootSystem& rs, const Weight& lambda) {
  rs.require_rank(lambda.rank(), "orbit_sum");
  if (!is_dominant(lambda)) throw DomainError("orbit_sum: weight " + lambda.to_string() + " is not dominant");
  std::vector<ExpSum::Term> terms;
  for (auto& mu : orbit(rs, lambda)) terms.emplace_back(std::move(mu), 1);
  return ExpSum::from_terms(rs.rank(), std::move(terms));
}

ExpSum orbit_sum(const WeylGroup& grp, const Weight& lambda) { return orbit_sum(grp.root_system(), lambda); }

ExpSum alternating_sum(const WeylGroup& grp, const Weight& lambda) {
  grp.root_system().require_rank(lambda.rank(), "alternating_sum");
  std::unordered_map<Weight, Integer, LatticeHash> acc;
  for (std::size_t idx = 0; idx < grp.order(); ++idx) acc[grp.act_on_weight(idx, lambda)] += grp.det_sign(idx);
  std::vector<ExpSum::Term> terms;
  for (auto& [w, c] : acc)
    if (c != 0) terms.emplace_back(w, std::move(c));
  return ExpSum::from_terms(lambda.rank(), std::move(terms));
}

ExpSum derivation(std::size_t j, const ExpSum& a) {
  if (j >= a.rank()) throw ConstraintError("derivation: index out of range");
  std::vector<ExpSum::Term> terms;
  for (const auto& [w, c] : a.terms())
    if (w[j] != 0) terms.emplace_back(w, c * w[j]);
  return ExpSum::from_terms(a.rank(), std::move(terms));
}

std::vector<ExpSum::Term> maximal_terms(const RootSystem& rs, const ExpSum& a) {
  if (a.is_zero()) throw DomainError("maximal_terms: the zero element has no maximal terms");
  rs.require_rank(a.rank(), "maximal_terms");
  std::vector<std::pair<CoordStorage, const ExpSum::Term*>> keyed;
  for (const auto& t : a.terms()) keyed.emplace_back(rs.scaled_root_coords(t.first), &t);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return y.first < x.first; });
  std::vector<std::pair<CoordStorage, const ExpSum::Term*>> maxima;
  for (const auto& k : keyed) {
    bool dominated = false;
    for (const auto& m : maxima) {
      bool geq = true;
      for (std::size_t c = 0; c < k.first.size() && geq; ++c) geq = m.first[c] >= k.first[c];
      if (geq) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maxima.push_back(k);
  }
  std::vector<ExpSum::Term> out;
  for (const auto& m : maxima) out.push_back(*m.second);
  std::sort(out.begin(), out.end(), weight_less);
  return out;
}

ExpSum divide_by_denominator(const WeylGroup& grp, const ExpSum& a) {
  const RootSystem& rs = grp.root_system();
  require_anti_invariant(rs, a, "divide_by_denominator");
  ExpSum quotient(rs.rank());
  if (a.is_zero()) return quotient;
  const Weight rho = rs.rho();
  const ExpSum denominator = alternating_sum(grp, rho);
  detail::LeadingTermQueue rem(rs);
  for (const auto& [w, c] : a.terms()) rem.add(w, c);
  detail::TerminationGuard guard(rs, maximal_weights(rs, a), "divide_by_denominator");
  CoordStorage floor = rs.scaled_root_coords(a.terms().front().first);
  for (const auto& [w, c] : a.terms()) {
    const auto key = rs.scaled_root_coords(w);
    for (std::size_t i = 0; i < key.size(); ++i) floor[i] = std::min(floor[i], key[i]);
  }
  guard.set_floor(std::move(floor));
  std::vector<ExpSum::Term> out;
  while (!rem.empty()) {
    const Weight lambda = rem.leading_weight();
    const Integer c = rem.leading_coeff();
    guard.check(lambda, rem.leading_key());
    const Weight shift = lambda - rho;
    out.emplace_back(shift, c);
    for (const auto& [w, s] : denominator.terms()) rem.add(shift + w, -c * s);
  }
  return ExpSum::from_terms(rs.rank(), std::move(out));
}

std::vector<ExpSum::Term> alternating_decomposition(const WeylGroup& grp, const ExpSum& a) {
  const RootSystem& rs = grp.root_system();
  require_anti_invariant(rs, a, "alternating_decomposition");
  std::vector<ExpSum::Term> out;
  if (a.is_zero()) return out;
  detail::LeadingTermQueue rem(rs);
  for (const auto& [w, c] : a.terms()) rem.add(w, c);
  detail::TerminationGuard guard(rs, maximal_weights(rs, a), "alternating_decomposition");
  while (!rem.empty()) {
    const Weight lambda = rem.leading_weight();
    const Integer c = rem.leading_coeff();
    if (!is_strictly_dominant(lambda))
      throw ConsistencyError("alternating_decomposition: leading weight is not strictly dominant");
    guard.check(lambda, rem.leading_key());
    out.emplace_back(lambda, c);
    const ExpSum alt = alternating_sum(grp, lambda);
    for (const auto& [w, s] : alt.terms()) rem.add(w, -c * s);
  }
  std::sort(out.begin(), out.end(), weight_less);
  return out;
}

ExpSum character(const WeylGroup& grp, const Weight& lambda) {
  const RootSystem& rs = grp.root_system();
  rs.require_rank(lambda.rank(), "character");
  if (!is_dominant(lambda)) throw DomainError("character: weight " + lambda.to_string() + " is not dominant");
  return divide_by_denominator(grp, alternating_sum(grp, rs.rho() + lambda));
}

OrbitExpansion OrbitExpansion::from_exp_sum(const RootSystem& rs, const ExpSum& a) {
  rs.require_rank(a.rank(), "OrbitExpansion::from_exp_sum");
  if (!is_invariant(rs, a)) throw DomainError("input is not W-invariant");
  OrbitExpansion out(rs.rank());
  for (const auto& [w, c] : a.terms())
    if (is_dominant(w)) out.coeffs_.emplace(w, c);
  return out;
}

OrbitExpansion OrbitExpansion::single(Weight dominant, Integer coeff) {
  OrbitExpansion out(dominant.rank());
  out.add_term(dominant, coeff);
  return out;
}

Integer OrbitExpansion::coefficient(const Weight& dominant) const {
  auto it = coeffs_.find(dominant);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void OrbitExpansion::add_term(const Weight& dominant, const Integer& c) {
  if (c == 0) return;
  if (dominant.rank() != rank_) throw DimensionError("OrbitExpansion: rank mismatch");
  if (!is_dominant(dominant)) throw DomainError("OrbitExpansion: key " + dominant.to_string() + " is not dominant");
  auto [it, inserted] = coeffs_.try_emplace(dominant, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

OrbitExpansion& OrbitExpansion::operator+=(const OrbitExpansion& o) {
  for (const auto& [w, c] : o.coeffs_) add_term(w, c);
  return *this;
}

OrbitExpansion OrbitExpansion::scaled(const Integer& s) const {
  OrbitExpansion out(rank_);
  if (s == 0) return out;
  for (const auto& [w, c] : coeffs_) out.coeffs_.emplace(w, c * s);
  return out;
}

OrbitExpansion OrbitExpansion::times_fundamental(const RootSystem& rs, std::size_t i) const {
  rs.require_rank(rank_, "times_fundamental");
  const auto tau = orbit(rs, rs.fundamental_weight(i));
  return times_orbit(rs, tau);
}

OrbitExpansion OrbitExpansion::times_orbit(const RootSystem& rs, std::span<const Weight> tau) const {
  rs.require_rank(rank_, "times_orbit");
  // Every dominant weight in the product support is dom(mu + tau) for some
  // dominant key mu; its coefficient is sum_tau x[dom(lambda - tau)].
  std::map<Weight, Integer> candidates;
  for (const auto& [mu, c] : coeffs_)
    for (const auto& t : tau) candidates.try_emplace(rs.dominant_representative(mu + t), 0);
  OrbitExpansion out(rank_);
  for (auto& [lambda, acc] : candidates) {
    for (const auto& t : tau) {
      auto it = coeffs_.find(rs.dominant_representative(lambda - t));
      if (it != coeffs_.end()) acc += it->second;
    }
    if (acc != 0) out.coeffs_.emplace(lambda, std::move(acc));
  }
  return out;
}

ExpSum OrbitExpansion::to_exp_sum(const RootSystem& rs) const {
  rs.require_rank(rank_, "OrbitExpansion::to_exp_sum");
  std::vector<ExpSum::Term> terms;
  for (const auto& [lambda, c] : coeffs_)
    for (auto& mu : orbit(rs, lambda)) terms.emplace_back(std::move(mu), c);
  return ExpSum::from_terms(rank_, std::move(terms));
}

}  // namespace chebylie
