#include "chebylie/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace chebylie {

namespace {

std::string family_name(Family f) { return std::string(1, static_cast<char>(f)); }

void link(IntMatrix& c, std::size_t i, std::size_t j, std::int64_t cij = -1, std::int64_t cji = -1) {
  c(i, j) = cij;
  c(j, i) = cji;
}

IntMatrix simple_cartan(const LieType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  IntMatrix c(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -2, -1);  // alpha_n short
      break;
    case Family::C:
      for (std::size_t i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -1, -2);  // alpha_n long
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 1);
      break;
    case Family::E:
      link(c, 0, 2);
      link(c, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Family::F:
      link(c, 0, 1);
      link(c, 1, 2, -2, -1);
      link(c, 2, 3);
      break;
    case Family::G:
      link(c, 0, 1, -1, -3);
      break;
  }
  return c;
}

std::vector<int> simple_degrees(const LieType& t) {
  const int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      d = {2, 6, 8, 12};
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  return d;
}

int simple_highest_coefficient(const LieType& t) {
  switch (t.family) {
    case Family::A: return 1;
    case Family::B:
    case Family::C:
    case Family::D: return 2;
    case Family::E: return t.rank == 6 ? 3 : (t.rank == 7 ? 4 : 6);
    case Family::F: return 4;
    case Family::G: return 3;
  }
  return 1;
}

RationalMatrix rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix a(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));
    a(i, n + i) = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).numerator() == 0) ++piv;
    if (piv == n) throw ConsistencyError("Cartan matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(piv, j), a(col, j));
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) a(col, j) /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).numerator() == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < 2 * n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  RationalMatrix inv(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

// Fraction-free Bareiss elimination.
std::int64_t integer_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix a = m;
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = checked::sub(checked::mul(a(i, j), a(k, k)), checked::mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

std::string LieType::to_string() const { return family_name(family) + std::to_string(rank); }

LieType make_lie_type(Family family, int rank) {
  auto fail = [&](const std::string& bound) {
    throw ConstraintError("invalid Lie type " + family_name(family) + std::to_string(rank) +
                          ": requires " + bound);
  };
  switch (family) {
    case Family::A:
      if (rank < 1) fail("rank >= 1");
      break;
    case Family::B:
      if (rank < 2) fail("rank >= 2");
      break;
    case Family::C:
      if (rank < 2) fail("rank >= 2");
      break;
    case Family::D:
      if (rank == 3) fail("rank >= 4 (D3 is A3; request A3)");
      if (rank < 4) fail("rank >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("rank in {6,7,8}");
      break;
    case Family::F:
      if (rank != 4) fail("rank = 4");
      break;
    case Family::G:
      if (rank != 2) fail("rank = 2");
      break;
    default:
      throw ConstraintError("unknown Lie family");
  }
  return LieType{family, rank};
}

std::vector<LieType> parse_lie_types(std::string_view text) {
  std::vector<LieType> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == 'x' || c == 'X'; };
  while (true) {
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string piece;
    for (char c : text.substr(pos, end - pos))
      if (!std::isspace(static_cast<unsigned char>(c))) piece += c;
    if (piece.size() < 2) throw ConstraintError("cannot parse Lie type string '" + std::string(text) + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0])));
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
      throw ConstraintError("unknown Lie family '" + std::string(1, piece[0]) + "' in '" +
                            std::string(text) + "'");
    int rank = 0;
    const char* first = piece.data() + 1;
    const char* last = piece.data() + piece.size();
    auto [ptr, ec] = std::from_chars(first, last, rank);
    if (ec != std::errc() || ptr != last)
      throw ConstraintError("cannot parse rank in '" + piece + "'");
    out.push_back(make_lie_type(static_cast<Family>(f), rank));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

RootSystem::RootSystem(LieType type) : RootSystem(std::span<const LieType>(&type, 1)) {}

RootSystem::RootSystem(std::span<const LieType> components) {
  if (components.empty()) throw ConstraintError("root system needs at least one component");
  std::size_t n = 0;
  for (const auto& t : components) {
    make_lie_type(t.family, t.rank);
    n += static_cast<std::size_t>(t.rank);
  }
  components_.assign(components.begin(), components.end());
  cartan_ = IntMatrix(n, n, 0);
  std::size_t offset = 0;
  for (const auto& t : components_) {
    const IntMatrix block = simple_cartan(t);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) cartan_(offset + i, offset + j) = block(i, j);
    offset += block.rows();
    const auto d = simple_degrees(t);
    degrees_.insert(degrees_.end(), d.begin(), d.end());
    highest_root_coefficient_ = std::max(highest_root_coefficient_, simple_highest_coefficient(t));
  }
  finish();
}

RootSystem RootSystem::parse(std::string_view text) {
  const auto types = parse_lie_types(text);
  return RootSystem(std::span<const LieType>(types));
}

void RootSystem::finish() {
  weyl_order_ = 1;
  for (int d : degrees_) {
    std::uint64_t r;
    if (__builtin_mul_overflow(weyl_order_, static_cast<std::uint64_t>(d), &r))
      throw OverflowError("Weyl group order exceeds 64 bits");
    weyl_order_ = r;
  }
  cartan_inverse_ = rational_inverse(cartan_);
  cartan_det_ = integer_determinant(cartan_);
  const std::size_t n = rank();
  scaled_inverse_ = IntMatrix(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = cartan_inverse_(i, j) * cartan_det_;
      if (v.denominator() != 1) throw ConsistencyError("det * cartan^-1 is not integral");
      scaled_inverse_(i, j) = v.numerator();
    }
}

std::string RootSystem::name() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "x";
    s += components_[i].to_string();
  }
  return s;
}

void RootSystem::require_rank(std::size_t n, const char* what) const {
  if (n != rank())
    throw DimensionError(std::string(what) + ": expected rank " + std::to_string(rank()) + ", got " +
                         std::to_string(n));
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
  if (i >= rank()) throw ConstraintError("fundamental weight index out of range");
  return Weight::unit(rank(), i);
}

Weight RootSystem::rho() const {
  Weight r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = 1;
  return r;
}

CorootVector RootSystem::simple_coroot(std::size_t j) const {
  if (j >= rank()) throw ConstraintError("simple coroot index out of range");
  return CorootVector::unit(rank(), j);
}

Weight RootSystem::simple_root(std::size_t i) const {
  if (i >= rank()) throw ConstraintError("simple root index out of range");
  Weight a(rank());
  for (std::size_t j = 0; j < rank(); ++j) a[j] = cartan_(i, j);
  return a;
}

std::vector<Rational> RootSystem::root_coords(const Weight& lambda) const {
  require_rank(lambda.rank(), "root_coords");
  const std::size_t n = rank();
  std::vector<Rational> out(n, Rational(0));
  // lambda = sum_i c_i alpha_i with alpha_i = sum_j C_ij omega_j, so the
  // weight row vector is c * C and c = lambda * C^{-1}.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out[j] += Rational(lambda[i]) * cartan_inverse_(i, j);
  return out;
}

CoordStorage RootSystem::scaled_root_coords(const Weight& lambda) const {
  require_rank(lambda.rank(), "scaled_root_coords");
  const std::size_t n = rank();
  CoordStorage out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lambda[i] != 0) acc = checked::add(acc, checked::mul(lambda[i], scaled_inverse_(i, j)));
    out[j] = acc;
  }
  return out;
}

bool RootSystem::dominance_leq(const Weight& lambda, const Weight& mu) const {
  for (auto c : scaled_root_coords(mu - lambda))
    if (c < 0) return false;
  return true;
}

Weight RootSystem::reflect(std::size_t i, const Weight& lambda) const {
  Weight out = lambda;
  const std::int64_t a = lambda[i];
  if (a == 0) return out;
  for (std::size_t j = 0; j < rank(); ++j)
    if (cartan_(i, j) != 0) out[j] = checked::sub(out[j], checked::mul(a, cartan_(i, j)));
  return out;
}

CorootVector RootSystem::reflect(std::size_t i, const CorootVector& gamma) const {
  CorootVector out = gamma;
  std::int64_t pairing = 0;
  for (std::size_t j = 0; j < rank(); ++j)
    if (cartan_(i, j) != 0) pairing = checked::add(pairing, checked::mul(cartan_(i, j), gamma[j]));
  out[i] = checked::sub(out[i], pairing);
  return out;
}

Weight RootSystem::dominant_representative(const Weight& lambda, int* parity) const {
  require_rank(lambda.rank(), "dominant_representative");
  Weight w = lambda;
  int p = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (w[i] < 0) {
        w = reflect(i, w);
        p ^= 1;
        moved = true;
      }
    }
  }
  if (parity) *parity = p;
  return w;
}

std::vector<Rational> weight_to_root_coords(const RootSystem& rs, const Weight& lambda) {
  return rs.root_coords(lambda);
}

}  // namespace chebylie
