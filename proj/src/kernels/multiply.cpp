#include <algorithm>
#include <unordered_map>

#include <omp.h>

#include "chebylie/kernels.hpp"
#include "chebylie/parallel.hpp"

namespace chebylie::kernels {

namespace {

using Accumulator = std::unordered_map<Weight, Integer, LatticeHash>;

void accumulate(Accumulator& acc, std::span<const ExpSum::Term> a, std::span<const ExpSum::Term> b) {
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) acc[wa + wb] += ca * cb;
}

std::vector<ExpSum::Term> drain_sorted(Accumulator& acc) {
  std::vector<ExpSum::Term> out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (c != 0) out.emplace_back(w, std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<ExpSum::Term> merge_sorted(std::vector<ExpSum::Term> x, std::vector<ExpSum::Term> y) {
  std::vector<ExpSum::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) {
      out.push_back(std::move(x[i++]));
    } else if (y[j].first < x[i].first) {
      out.push_back(std::move(y[j++]));
    } else {
      Integer c = x[i].second + y[j].second;
      if (c != 0) out.emplace_back(std::move(x[i].first), std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(std::move(x[i]));
  for (; j < y.size(); ++j) out.push_back(std::move(y[j]));
  return out;
}

}  // namespace

namespace serial {

std::vector<ExpSum::Term> multiply_terms(std::span<const ExpSum::Term> a, std::span<const ExpSum::Term> b) {
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  accumulate(acc, a, b);
  return drain_sorted(acc);
}

}  // namespace serial

namespace omp {

std::vector<ExpSum::Term> multiply_terms(std::span<const ExpSum::Term> a, std::span<const ExpSum::Term> b) {
  const int workers = worker_count();
  if (workers <= 1 || a.size() < 2) return serial::multiply_terms(a, b);
  const auto chunks = static_cast<std::size_t>(std::min<std::size_t>(workers, a.size()));
  std::vector<std::vector<ExpSum::Term>> partial(chunks);
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = a.size() * c / chunks;
    const std::size_t hi = a.size() * (c + 1) / chunks;
    Accumulator acc;
    accumulate(acc, a.subspan(lo, hi - lo), b);
    partial[c] = drain_sorted(acc);
  }
  // Pairwise merge in a fixed order keeps the result schedule-independent.
  while (partial.size() > 1) {
    std::vector<std::vector<ExpSum::Term>> next;
    for (std::size_t i = 0; i + 1 < partial.size(); i += 2)
      next.push_back(merge_sorted(std::move(partial[i]), std::move(partial[i + 1])));
    if (partial.size() % 2) next.push_back(std::move(partial.back()));
    partial = std::move(next);
  }
  return std::move(partial.front());
}

}  // namespace omp

}  // namespace chebylie::kernels
