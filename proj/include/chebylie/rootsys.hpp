#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "chebylie/coords.hpp"
#include "chebylie/matrix.hpp"

namespace chebylie {

using Rational = boost::rational<std::int64_t>;
using RationalMatrix = Matrix<Rational>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie type such as A3 or G2.
struct LieType {
  Family family;
  int rank;

  friend bool operator==(const LieType&, const LieType&) = default;
  std::string to_string() const;
};

/// Validates the rank bound of the family and returns the type. D3 is
/// rejected in favour of A3.
LieType make_lie_type(Family family, int rank);

/// Parses "G2", "b3", "A1xA1", "A2xG2" (case-insensitive, 'x' separated).
std::vector<LieType> parse_lie_types(std::string_view text);

/// Cartan data of a simple or semisimple root system, in Humphreys'
/// numbering. Indices are 0-based throughout the API; omega_1 is index 0.
///
/// Cartan entries are cartan(i, j) = <alpha_i, alpha_j> = (alpha_i, alpha_j^vee),
/// so row i lists alpha_i in the fundamental-weight basis.
class RootSystem {
 public:
  explicit RootSystem(LieType type);
  explicit RootSystem(std::span<const LieType> components);
  static RootSystem parse(std::string_view text);

  const std::vector<LieType>& components() const { return components_; }
  std::string name() const;
  std::size_t rank() const { return cartan_.rows(); }

  const IntMatrix& cartan() const { return cartan_; }
  const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::uint64_t weyl_order() const { return weyl_order_; }
  /// Highest coefficient of the highest root (largest over the components).
  int highest_root_coefficient() const { return highest_root_coefficient_; }

  Weight zero_weight() const { return Weight(rank()); }
  Weight fundamental_weight(std::size_t i) const;
  Weight rho() const;
  CorootVector simple_coroot(std::size_t j) const;
  /// alpha_i written in the fundamental-weight basis (row i of the Cartan matrix).
  Weight simple_root(std::size_t i) const;

  /// Coordinates of lambda in the simple-root basis.
  std::vector<Rational> root_coords(const Weight& lambda) const;
  /// Root coordinates scaled by det(cartan) so they are integral; order
  /// comparisons on these agree with comparisons on root_coords.
  CoordStorage scaled_root_coords(const Weight& lambda) const;
  std::int64_t cartan_determinant() const { return cartan_det_; }

  /// lambda <= mu in the dominance order: mu - lambda is a nonnegative
  /// rational combination of simple roots.
  bool dominance_leq(const Weight& lambda, const Weight& mu) const;

  /// Simple reflection sigma_i applied to a weight / coroot vector.
  Weight reflect(std::size_t i, const Weight& lambda) const;
  CorootVector reflect(std::size_t i, const CorootVector& gamma) const;

  /// The unique dominant weight in the orbit of lambda. `parity`, if given,
  /// receives the parity of the number of reflections used.
  Weight dominant_representative(const Weight& lambda, int* parity = nullptr) const;

  void require_rank(std::size_t n, const char* what) const;

 private:
  void finish();

  std::vector<LieType> components_;
  IntMatrix cartan_;
  RationalMatrix cartan_inverse_;
  IntMatrix scaled_inverse_;  // cartan_det_ * cartan_inverse_
  std::int64_t cartan_det_ = 1;
  std::vector<int> degrees_;
  std::uint64_t weyl_order_ = 1;
  int highest_root_coefficient_ = 1;
};

std::vector<Rational> weight_to_root_coords(const RootSystem& rs, const Weight& lambda);

}  // namespace chebylie
