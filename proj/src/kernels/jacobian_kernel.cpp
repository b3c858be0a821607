#include <algorithm>
#include <deque>
#include <unordered_map>

#include <omp.h>

#include "chebylie/kernels.hpp"
#include "chebylie/parallel.hpp"

namespace chebylie::kernels {

std::vector<SignedCorootPoint> signed_coroot_orbit(const RootSystem& rs, std::size_t j) {
  if (j >= rs.rank()) throw ConstraintError("signed_coroot_orbit: column index out of range");
  std::unordered_map<Weight, CorootVector, LatticeHash> seen;
  std::deque<Weight> queue;
  const Weight start = rs.rho() - rs.fundamental_weight(j);
  seen.emplace(start, rs.simple_coroot(j));
  queue.push_back(start);
  while (!queue.empty()) {
    const Weight point = queue.front();
    queue.pop_front();
    const CorootVector v = seen.at(point);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Weight p = rs.reflect(i, point);
      CorootVector q = -rs.reflect(i, v);
      auto [it, inserted] = seen.try_emplace(p, q);
      if (inserted) {
        queue.push_back(std::move(p));
      } else if (it->second != q) {
        throw ConsistencyError("det(w) w(alpha_j^vee) is not constant on a coset of Stab(rho - omega_j)");
      }
    }
  }
  std::vector<SignedCorootPoint> out;
  out.reserve(seen.size());
  for (auto& [p, v] : seen) out.push_back({p, v});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  return out;
}

namespace {

void accumulate_range(const RootSystem& rs, std::span<const Weight> weight_orbit,
                      std::span<const SignedCorootPoint> coroot_orbit, CharAccumulator& acc) {
  const std::size_t n = rs.rank();
  const Weight rho = rs.rho();
  for (const Weight& mu : weight_orbit) {
    for (const auto& [nu, v] : coroot_orbit) {
      bool inside = true;
      for (std::size_t c = 0; c < n && inside; ++c) inside = mu[c] + nu[c] > 0;
      if (!inside) continue;
      const std::int64_t d = inner_product(mu, v);
      if (d == 0) continue;
      acc[mu + nu - rho] += d;
    }
  }
}

void prune_zeros(CharAccumulator& acc) {
  for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
}

}  // namespace

namespace serial {

CharAccumulator jacobian_entry(const RootSystem& rs, std::span<const Weight> weight_orbit,
                               std::span<const SignedCorootPoint> coroot_orbit) {
  CharAccumulator acc;
  accumulate_range(rs, weight_orbit, coroot_orbit, acc);
  prune_zeros(acc);
  return acc;
}

}  // namespace serial

namespace omp {

CharAccumulator jacobian_entry(const RootSystem& rs, std::span<const Weight> weight_orbit,
                               std::span<const SignedCorootPoint> coroot_orbit) {
  const int workers = worker_count();
  if (workers <= 1 || weight_orbit.size() < 2) return serial::jacobian_entry(rs, weight_orbit, coroot_orbit);
  const auto chunks = std::min<std::size_t>(static_cast<std::size_t>(workers) * 4, weight_orbit.size());
  std::vector<CharAccumulator> partial(chunks);
#pragma omp parallel for num_threads(workers) schedule(dynamic)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = weight_orbit.size() * c / chunks;
    const std::size_t hi = weight_orbit.size() * (c + 1) / chunks;
    accumulate_range(rs, weight_orbit.subspan(lo, hi - lo), coroot_orbit, partial[c]);
  }
  CharAccumulator acc;
  for (auto& p : partial)
    for (auto& [w, c] : p) acc[w] += c;
  prune_zeros(acc);
  return acc;
}

}  // namespace omp

}  // namespace chebylie::kernels
