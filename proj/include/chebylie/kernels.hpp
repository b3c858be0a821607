#pragma once

#include <map>
#include <span>
#include <vector>

#include "chebylie/exalg.hpp"

// Hot loops, each in a serial reference form and an OpenMP form. The two must
// return identical results; tests/test_kernels.cpp checks this and
// bench/bench_kernels.cpp times them against each other.
namespace chebylie::kernels {

/// One orbit point of rho - omega_j together with det(w) w(alpha_j^vee), the
/// quantity shared by both elements of the coset w Stab(rho - omega_j).
struct SignedCorootPoint {
  Weight point;
  CorootVector signed_coroot;
};

/// Orbit table for column j, built by walking the orbit of rho - omega_j with
/// simple reflections (sigma_i flips the sign and reflects the coroot).
std::vector<SignedCorootPoint> signed_coroot_orbit(const RootSystem& rs, std::size_t j);

/// Accumulator for one Jacobian entry: dominant weight lambda - rho mapped to
/// the integer coefficient of chi_{lambda - rho}.
using CharAccumulator = std::map<Weight, Integer>;

namespace serial {

std::vector<ExpSum::Term> multiply_terms(std::span<const ExpSum::Term> a, std::span<const ExpSum::Term> b);

/// sum over mu in W(k omega_i), (nu, v) in the signed coroot orbit of column j,
/// of (mu, v) chi_{mu + nu - rho}, restricted to mu + nu strictly dominant.
CharAccumulator jacobian_entry(const RootSystem& rs, std::span<const Weight> weight_orbit,
                               std::span<const SignedCorootPoint> coroot_orbit);

}  // namespace serial

namespace omp {

std::vector<ExpSum::Term> multiply_terms(std::span<const ExpSum::Term> a, std::span<const ExpSum::Term> b);

CharAccumulator jacobian_entry(const RootSystem& rs, std::span<const Weight> weight_orbit,
                               std::span<const SignedCorootPoint> coroot_orbit);

}  // namespace omp

}  // namespace chebylie::kernels
