#include "chebylie/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <string_view>
#include <unordered_set>

namespace chebylie {

namespace {

constexpr std::uint32_t kProbe = 0xffffffffu;

IntMatrix to_matrix(std::span<const std::int8_t> data, std::size_t n) {
  IntMatrix m(n, n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = data[r * n + c];
  return m;
}

std::int8_t narrow_entry(std::int64_t v) {
  if (v < -127 || v > 127) throw ConsistencyError("Weyl matrix entry out of int8 range");
  return static_cast<std::int8_t>(v);
}

}  // namespace

// Elements are keyed by their matrix bytes; the hash set stores indices into
// the arena, with kProbe standing for the scratch buffer used by lookups.
struct WeylGroup::Storage {
  std::size_t stride;
  std::vector<std::int8_t> entries;
  std::vector<std::int8_t> probe;

  const std::int8_t* data(std::uint32_t idx) const {
    return idx == kProbe ? probe.data() : entries.data() + std::size_t{idx} * stride;
  }

  struct Hash {
    const Storage* s;
    std::size_t operator()(std::uint32_t idx) const {
      return std::hash<std::string_view>{}(
          std::string_view(reinterpret_cast<const char*>(s->data(idx)), s->stride));
    }
  };
  struct Eq {
    const Storage* s;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      return std::memcmp(s->data(a), s->data(b), s->stride) == 0;
    }
  };

  std::unordered_set<std::uint32_t, Hash, Eq> index{16, Hash{this}, Eq{this}};

  explicit Storage(std::size_t stride_) : stride(stride_), probe(stride_) {}

  std::optional<std::size_t> find(const std::int8_t* data) {
    std::memcpy(probe.data(), data, stride);
    auto it = index.find(kProbe);
    if (it == index.end()) return std::nullopt;
    return *it;
  }
};

WeylElement simple_reflection(const RootSystem& rs, std::size_t i) {
  if (i >= rs.rank())
    throw ConstraintError("simple_reflection: index " + std::to_string(i) + " out of range for rank " +
                          std::to_string(rs.rank()));
  const std::size_t n = rs.rank();
  IntMatrix m = identity_matrix<std::int64_t>(n, 0, 1);
  for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? 1 : 0) - rs.cartan()(i, j);
  return WeylElement(m, m, -1, 1);
}

Weight act_on_weight(const WeylElement& w, const Weight& lambda) {
  const auto& t = w.inverse_matrix();
  if (lambda.rank() != t.rows()) throw DimensionError("act_on_weight: rank mismatch");
  Weight out(lambda.rank());
  for (std::size_t c = 0; c < t.cols(); ++c) {
    std::int64_t acc = 0;
    for (std::size_t r = 0; r < t.rows(); ++r)
      acc = checked::add(acc, checked::mul(lambda[r], t(r, c)));
    out[c] = acc;
  }
  return out;
}

CorootVector act_on_coroot(const WeylElement& w, const CorootVector& gamma) {
  const auto& t = w.matrix();
  if (gamma.rank() != t.rows()) throw DimensionError("act_on_coroot: rank mismatch");
  CorootVector out(gamma.rank());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < t.cols(); ++c) acc = checked::add(acc, checked::mul(t(r, c), gamma[c]));
    out[r] = acc;
  }
  return out;
}

WeylGroup::WeylGroup(const RootSystem& rs)
    : rs_(rs), stride_(rs.rank() * rs.rank()), storage_(std::make_unique<Storage>(stride_)) {}

WeylGroup::WeylGroup(WeylGroup&&) noexcept = default;
WeylGroup& WeylGroup::operator=(WeylGroup&&) noexcept = default;
WeylGroup::~WeylGroup() = default;

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::uint64_t cap) {
  if (rs.weyl_order() > cap)
    throw LimitExceeded("group too large: |W(" + rs.name() + ")| = " + std::to_string(rs.weyl_order()) +
                        " exceeds the enumeration cap of " + std::to_string(cap) +
                        " (raise it with --max-weyl-order)");
  WeylGroup g(rs);
  Storage& st = *g.storage_;
  const std::size_t n = rs.rank();
  const auto& cartan = rs.cartan();
  const std::size_t expected = static_cast<std::size_t>(rs.weyl_order());

  st.entries.reserve(expected * g.stride_);
  st.index.reserve(expected);
  g.det_.reserve(expected);
  g.length_.reserve(expected);
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> via;
  parent.reserve(expected);
  via.reserve(expected);

  auto push = [&](const std::int8_t* data, int det, int len, std::uint32_t par, std::uint8_t gen) -> bool {
    if (st.find(data)) return false;
    if (g.det_.size() >= cap)
      throw LimitExceeded("group too large: enumeration exceeded the cap of " + std::to_string(cap));
    const auto idx = static_cast<std::uint32_t>(g.det_.size());
    st.entries.insert(st.entries.end(), data, data + g.stride_);
    st.index.insert(idx);
    g.det_.push_back(static_cast<std::int8_t>(det));
    g.length_.push_back(static_cast<std::uint16_t>(len));
    parent.push_back(par);
    via.push_back(gen);
    return true;
  };

  std::vector<std::int8_t> buf(g.stride_, 0);
  for (std::size_t i = 0; i < n; ++i) buf[i * n + i] = 1;
  push(buf.data(), 1, 0, 0, 0);

  for (std::size_t idx = 0; idx < g.det_.size(); ++idx) {
    for (std::size_t i = 0; i < n; ++i) {
      // (T S_i)[r][c] = T[r][c] - T[r][i] * C[i][c]
      const std::int8_t* t = st.entries.data() + idx * g.stride_;
      for (std::size_t r = 0; r < n; ++r) {
        const std::int64_t tri = t[r * n + i];
        for (std::size_t c = 0; c < n; ++c)
          buf[r * n + c] = narrow_entry(t[r * n + c] - tri * cartan(i, c));
      }
      push(buf.data(), -g.det_[idx], g.length_[idx] + 1, static_cast<std::uint32_t>(idx),
           static_cast<std::uint8_t>(i));
    }
  }
  if (g.det_.size() != expected)
    throw ConsistencyError("enumerated " + std::to_string(g.det_.size()) + " elements, expected |W| = " +
                           std::to_string(expected));

  g.generators_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto m = simple_reflection(rs, i).matrix();
    auto f = g.find(m);
    if (!f) throw ConsistencyError("simple reflection missing from enumerated group");
    g.generators_[i] = *f;
  }

  // inverse(w s_i) = s_i inverse(w); left multiplication by S_i rewrites row i
  // as M_i - sum_m C_im M_m.
  g.inverse_.assign(g.det_.size(), 0);
  for (std::size_t idx = 1; idx < g.det_.size(); ++idx) {
    const std::size_t i = via[idx];
    const std::int8_t* m = st.entries.data() + std::size_t{g.inverse_[parent[idx]]} * g.stride_;
    std::copy(m, m + g.stride_, buf.begin());
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t acc = m[i * n + c];
      for (std::size_t k = 0; k < n; ++k)
        if (cartan(i, k) != 0) acc -= cartan(i, k) * m[k * n + c];
      buf[i * n + c] = narrow_entry(acc);
    }
    auto f = st.find(buf.data());
    if (!f) throw ConsistencyError("inverse element missing from enumerated group");
    g.inverse_[idx] = static_cast<std::uint32_t>(*f);
  }
  return g;
}

std::span<const std::int8_t> WeylGroup::matrix_entries(std::size_t idx) const {
  return {storage_->entries.data() + idx * stride_, stride_};
}

WeylElement WeylGroup::element(std::size_t idx) const {
  if (idx >= order()) throw ConstraintError("Weyl element index out of range");
  return WeylElement(to_matrix(matrix_entries(idx), rank()), to_matrix(matrix_entries(inverse_[idx]), rank()),
                     det_[idx], length_[idx]);
}

std::vector<WeylElement> WeylGroup::generators() const {
  std::vector<WeylElement> out;
  for (auto g : generators_) out.push_back(element(g));
  return out;
}

std::optional<std::size_t> WeylGroup::find(const IntMatrix& m) const {
  if (m.rows() != rank() || m.cols() != rank()) return std::nullopt;
  std::vector<std::int8_t> buf(stride_);
  for (std::size_t r = 0; r < rank(); ++r)
    for (std::size_t c = 0; c < rank(); ++c) {
      if (m(r, c) < -127 || m(r, c) > 127) return std::nullopt;
      buf[r * rank() + c] = static_cast<std::int8_t>(m(r, c));
    }
  return storage_->find(buf.data());
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  const std::size_t n = rank();
  const auto x = matrix_entries(a);
  const auto y = matrix_entries(b);
  std::vector<std::int8_t> buf(stride_);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t acc = 0;
      for (std::size_t m = 0; m < n; ++m) acc += std::int64_t{x[r * n + m]} * y[m * n + c];
      buf[r * n + c] = narrow_entry(acc);
    }
  auto f = storage_->find(buf.data());
  if (!f) throw ConsistencyError("group is not closed under multiplication");
  return *f;
}

Weight WeylGroup::act_on_weight(std::size_t idx, const Weight& lambda) const {
  rs_.require_rank(lambda.rank(), "act_on_weight");
  const std::size_t n = rank();
  const auto t = matrix_entries(inverse_[idx]);
  Weight out(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::int64_t a = lambda[r];
    if (a == 0) continue;
    for (std::size_t c = 0; c < n; ++c) out[c] = checked::add(out[c], checked::mul(a, t[r * n + c]));
  }
  return out;
}

CorootVector WeylGroup::act_on_coroot(std::size_t idx, const CorootVector& gamma) const {
  rs_.require_rank(gamma.rank(), "act_on_coroot");
  const std::size_t n = rank();
  const auto t = matrix_entries(idx);
  CorootVector out(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < n; ++c) acc = checked::add(acc, checked::mul(t[r * n + c], gamma[c]));
    out[r] = acc;
  }
  return out;
}

std::vector<Weight> orbit(const RootSystem& rs, const Weight& lambda) {
  rs.require_rank(lambda.rank(), "orbit");
  std::unordered_set<Weight, LatticeHash> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (w[i] == 0) continue;
      Weight r = rs.reflect(i, w);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> orbit(const WeylGroup& grp, const Weight& lambda) { return orbit(grp.root_system(), lambda); }

std::uint64_t stabilizer_size(const WeylGroup& grp, const Weight& lambda) {
  const auto size = orbit(grp, lambda).size();
  if (grp.order() % size != 0) throw ConsistencyError("orbit size does not divide |W|");
  return grp.order() / size;
}

int max_abs_entry(const WeylGroup& grp) {
  int best = 0;
  for (std::size_t idx = 0; idx < grp.order(); ++idx)
    for (auto v : grp.matrix_entries(idx)) best = std::max(best, std::abs(int{v}));
  return best;
}

}  // namespace chebylie
