#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chebylie/jacchar.hpp"

namespace chebylie {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::vector<int> ks = {1, 2, 3, 4};
  JacobianOptions jacobian;
};

/// Runs the identity suite for one root system: group order and m_g,
/// Steinberg and adjugate identities, and for each k the agreement of all
/// Jacobian routes, the determinant identity, anti-invariance, the closed
/// forms where printed, the pruning claim and composition of maps.
std::vector<CheckResult> run_identity_suite(ChebyshevEngine& engine, const VerifyOptions& options);

bool all_passed(std::span<const CheckResult> results);

}  // namespace chebylie
