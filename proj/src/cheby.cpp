#include "chebylie/cheby.hpp"

#include <algorithm>
#include <limits>

#include "chebylie/detail/reduction.hpp"

namespace chebylie {

namespace {

int degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

struct GradedLexBefore {
  bool operator()(const Exponents& a, const Exponents& b) const { return graded_lex_before(a, b); }
};

using TermMap = std::map<Exponents, Integer, GradedLexBefore>;

YPolynomial from_map(std::size_t nvars, TermMap&& m) {
  std::vector<YPolynomial::Term> terms;
  terms.reserve(m.size());
  for (auto& [e, c] : m)
    if (c != 0) terms.emplace_back(e, std::move(c));
  return YPolynomial::from_terms(nvars, std::move(terms));
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned s = unsigned{a[i]} + b[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw OverflowError("monomial exponent exceeds 16 bits");
    out[i] = static_cast<std::uint16_t>(s);
  }
  return out;
}

Exponents exponents_of(const Weight& dominant) {
  Exponents e(dominant.rank());
  for (std::size_t i = 0; i < dominant.rank(); ++i) {
    if (dominant[i] < 0 || dominant[i] > std::numeric_limits<std::uint16_t>::max())
      throw OverflowError("weight coordinate does not fit a monomial exponent");
    e[i] = static_cast<std::uint16_t>(dominant[i]);
  }
  return e;
}

}  // namespace

bool graded_lex_before(const Exponents& a, const Exponents& b) {
  const int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

YPolynomial YPolynomial::constant(std::size_t nvars, Integer c) {
  YPolynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Exponents(nvars, 0), std::move(c));
  return p;
}

YPolynomial YPolynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw ConstraintError("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

YPolynomial YPolynomial::monomial(Exponents e, Integer c) {
  YPolynomial p(e.size());
  if (c != 0) p.terms_.emplace_back(std::move(e), std::move(c));
  return p;
}

YPolynomial YPolynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.first.size() != nvars) throw DimensionError("YPolynomial term has wrong number of variables");
  auto before = [](const Term& a, const Term& b) { return graded_lex_before(a.first, b.first); };
  if (!std::is_sorted(terms.begin(), terms.end(), before)) std::stable_sort(terms.begin(), terms.end(), before);
  YPolynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Integer YPolynomial::coefficient(const Exponents& e) const {
  for (const auto& [x, c] : terms_)
    if (x == e) return c;
  return 0;
}

int YPolynomial::total_degree() const { return terms_.empty() ? -1 : degree(terms_.front().first); }

void YPolynomial::require_compatible(const YPolynomial& o) const {
  if (nvars_ != o.nvars_)
    throw DimensionError("YPolynomial variable count mismatch: " + std::to_string(nvars_) + " vs " +
                         std::to_string(o.nvars_));
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
  if (nvars_ == 0 && terms_.empty()) {
    *this = o;
    return *this;
  }
  if (o.nvars_ == 0 && o.terms_.empty()) return *this;
  require_compatible(o);
  TermMap m;
  for (const auto& [e, c] : terms_) m[e] += c;
  for (const auto& [e, c] : o.terms_) m[e] += c;
  *this = from_map(nvars_, std::move(m));
  return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) { return *this += o.scaled(-1); }

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
  if (a.nvars_ == 0 && a.terms_.empty()) return a;
  if (b.nvars_ == 0 && b.terms_.empty()) return b;
  a.require_compatible(b);
  TermMap m;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) m[add_exponents(ea, eb)] += ca * cb;
  return from_map(a.nvars_, std::move(m));
}

YPolynomial YPolynomial::scaled(const Integer& s) const {
  YPolynomial p(nvars_);
  if (s == 0) return p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_back(e, c * s);
  return p;
}

YPolynomial YPolynomial::pow(unsigned e) const {
  YPolynomial result = constant(nvars_, 1);
  YPolynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

YPolynomial differentiate(const YPolynomial& p, std::size_t j) {
  if (j >= p.nvars()) throw ConstraintError("differentiate: variable index out of range");
  std::vector<YPolynomial::Term> terms;
  for (const auto& [e, c] : p.terms()) {
    if (e[j] == 0) continue;
    Exponents d = e;
    --d[j];
    terms.emplace_back(std::move(d), c * e[j]);
  }
  return YPolynomial::from_terms(p.nvars(), std::move(terms));
}

YPolynomial substitute(const YPolynomial& p, std::span<const YPolynomial> values) {
  if (values.size() != p.nvars()) throw DimensionError("substitute: need one value per variable");
  if (values.empty()) return p;
  const std::size_t m = values.front().nvars();
  for (const auto& v : values)
    if (v.nvars() != m) throw DimensionError("substitute: values have different variable counts");
  std::vector<std::vector<YPolynomial>> powers(values.size());
  auto power = [&](std::size_t i, unsigned e) -> const YPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(YPolynomial::constant(m, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
    return cache[e];
  };
  YPolynomial out(m);
  for (const auto& [e, c] : p.terms()) {
    YPolynomial term = YPolynomial::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

PolyMap compose(const PolyMap& p, const PolyMap& q) {
  if (p.components.size() != q.components.size())
    throw DimensionError("compose: rank mismatch " + std::to_string(p.components.size()) + " vs " +
                         std::to_string(q.components.size()));
  PolyMap out;
  out.type = p.type;
  out.k = p.k * q.k;
  for (const auto& g : p.components) out.components.push_back(substitute(g, q.components));
  return out;
}

ChebyshevEngine::ChebyshevEngine(std::shared_ptr<const WeylGroup> group) : group_(std::move(group)) {
  if (!group_) throw ConstraintError("ChebyshevEngine needs a Weyl group");
  for (std::size_t i = 0; i < rank(); ++i)
    fundamental_orbits_.push_back(orbit(root_system(), root_system().fundamental_weight(i)));
}

const OrbitExpansion& ChebyshevEngine::power_locked(const Exponents& e) {
  if (auto it = powers_.find(e); it != powers_.end()) return it->second;
  std::size_t last = e.size();
  for (std::size_t i = e.size(); i-- > 0;)
    if (e[i]) {
      last = i;
      break;
    }
  OrbitExpansion value;
  if (last == e.size()) {
    value = OrbitExpansion::single(root_system().zero_weight());
  } else {
    Exponents lower = e;
    --lower[last];
    value = power_locked(lower).times_orbit(root_system(), fundamental_orbits_[last]);
  }
  return powers_.emplace(e, std::move(value)).first->second;
}

OrbitExpansion ChebyshevEngine::y_monomial_orbits(const Exponents& e) {
  if (e.size() != rank()) throw DimensionError("y_monomial: exponent vector has wrong length");
  std::lock_guard lock(mutex_);
  return power_locked(e);
}

ExpSum ChebyshevEngine::y_monomial(const Exponents& e) { return y_monomial_orbits(e).to_exp_sum(root_system()); }

YPolynomial ChebyshevEngine::express_in_y(const ExpSum& a) {
  return express_in_y(OrbitExpansion::from_exp_sum(root_system(), a));
}

YPolynomial ChebyshevEngine::express_in_y(const OrbitExpansion& a) {
  const RootSystem& rs = root_system();
  rs.require_rank(a.rank(), "express_in_y");
  YPolynomial out(rank());
  if (a.is_zero()) return out;

  detail::LeadingTermQueue rem(rs);
  std::vector<Weight> keys;
  for (const auto& [w, c] : a.coefficients()) {
    rem.add(w, c);
    keys.push_back(w);
  }
  std::vector<Weight> ceiling;
  for (const auto& w : keys) {
    bool dominated = false;
    for (const auto& v : keys)
      if (v != w && rs.dominance_leq(w, v)) {
        dominated = true;
        break;
      }
    if (!dominated) ceiling.push_back(w);
  }
  detail::TerminationGuard guard(rs, std::move(ceiling), "express_in_y");

  std::vector<YPolynomial::Term> terms;
  std::lock_guard lock(mutex_);
  while (!rem.empty()) {
    const Weight lambda = rem.leading_weight();
    const Integer c = rem.leading_coeff();
    if (!is_dominant(lambda))
      throw ConsistencyError("express_in_y: leading weight " + lambda.to_string() + " is not dominant");
    guard.check(lambda, rem.leading_key());
    const Exponents e = exponents_of(lambda);
    terms.emplace_back(e, c);
    for (const auto& [w, d] : power_locked(e).coefficients()) rem.add(w, -c * d);
  }
  return YPolynomial::from_terms(rank(), std::move(terms));
}

OrbitExpansion ChebyshevEngine::expand_orbits(const YPolynomial& p) {
  if (p.nvars() != rank() && !(p.nvars() == 0 && p.is_zero()))
    throw DimensionError("expand: polynomial has wrong number of variables");
  std::lock_guard lock(mutex_);
  OrbitExpansion out(rank());
  for (const auto& [e, c] : p.terms()) out += power_locked(e).scaled(c);
  return out;
}

ExpSum ChebyshevEngine::expand(const YPolynomial& p) { return expand_orbits(p).to_exp_sum(root_system()); }

PolyMap ChebyshevEngine::chebyshev_map(int k) {
  if (k < 1) throw ConstraintError("chebyshev_map: k must be >= 1");
  PolyMap out;
  out.type = root_system().name();
  out.k = k;
  for (std::size_t i = 0; i < rank(); ++i)
    out.components.push_back(express_in_y(OrbitExpansion::single(k * root_system().fundamental_weight(i))));
  return out;
}

PolyMatrix ChebyshevEngine::jacobian_symbolic(int k) {
  const PolyMap p = chebyshev_map(k);
  const std::size_t n = rank();
  PolyMatrix m(n, n, YPolynomial(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = differentiate(p.components[i], j);
  return m;
}

ExpSum ChebyshevEngine::character(const Weight& lambda) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = characters_.find(lambda); it != characters_.end()) return it->second;
  }
  ExpSum chi = chebylie::character(*group_, lambda);
  std::lock_guard lock(mutex_);
  return characters_.emplace(lambda, std::move(chi)).first->second;
}

YPolynomial ChebyshevEngine::character_polynomial(const Weight& lambda) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = character_polys_.find(lambda); it != character_polys_.end()) return it->second;
  }
  YPolynomial p = express_in_y(character(lambda));
  std::lock_guard lock(mutex_);
  return character_polys_.emplace(lambda, std::move(p)).first->second;
}

}  // namespace chebylie
