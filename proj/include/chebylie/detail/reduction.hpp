#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chebylie/integer.hpp"
#include "chebylie/rootsys.hpp"

namespace chebylie::detail {

/// Working set for leading-term reductions, keyed by scaled root coordinates.
/// The lexicographically largest key is maximal in the dominance order, which
/// fixes the deterministic choice among several maximal terms.
class LeadingTermQueue {
 public:
  explicit LeadingTermQueue(const RootSystem& rs) : rs_(rs) {}

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Weight& leading_weight() const { return terms_.rbegin()->second.first; }
  const Integer& leading_coeff() const { return terms_.rbegin()->second.second; }
  const CoordStorage& leading_key() const { return terms_.rbegin()->first; }

  void add(const Weight& w, const Integer& c) {
    if (c == 0) return;
    auto key = rs_.scaled_root_coords(w);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::pair{w, c});
    } else {
      it->second.second += c;
      if (it->second.second == 0) terms_.erase(it);
    }
  }

 private:
  const RootSystem& rs_;
  std::map<CoordStorage, std::pair<Weight, Integer>> terms_;
};

/// Well-foundedness check for the reductions: each leading weight must lie
/// weakly below one of the original maximal weights and its key must strictly
/// decrease. Only finitely many dominant weights lie below a given weight, so a
/// violation signals a bug rather than slow progress.
class TerminationGuard {
 public:
  TerminationGuard(const RootSystem& rs, std::vector<Weight> ceiling, std::string what)
      : rs_(rs), ceiling_(std::move(ceiling)), what_(std::move(what)) {}

  /// Keys must also be componentwise >= `floor`, which bounds the admissible
  /// set when leading weights need not be dominant.
  void set_floor(CoordStorage floor) {
    floor_ = std::move(floor);
    has_floor_ = true;
  }

  void check(const Weight& lambda, const CoordStorage& key) {
    if (has_last_ && !(key < last_)) throw ConsistencyError(what_ + ": leading term did not decrease");
    if (has_floor_)
      for (std::size_t i = 0; i < key.size(); ++i)
        if (key[i] < floor_[i])
          throw ConsistencyError(what_ + ": leading term " + lambda.to_string() + " fell below the original support");
    bool below = false;
    for (const auto& m : ceiling_)
      if (rs_.dominance_leq(lambda, m)) {
        below = true;
        break;
      }
    if (!below) throw ConsistencyError(what_ + ": leading term " + lambda.to_string() + " escaped the original support");
    last_ = key;
    has_last_ = true;
  }

 private:
  const RootSystem& rs_;
  std::vector<Weight> ceiling_;
  std::string what_;
  CoordStorage last_;
  CoordStorage floor_;
  bool has_last_ = false;
  bool has_floor_ = false;
};

}  // namespace chebylie::detail
