#pragma once

// Finite root systems of the simple types, built from Cartan data.
//
// Simple roots follow the Bourbaki plates:
//   A_n  1 - 2 - ... - n
//   B_n  1 - 2 - ... - (n-1) => n        (alpha_n short)
//   C_n  1 - 2 - ... - (n-1) <= n        (alpha_n long)
//   D_n  1 - 2 - ... - (n-2) < (n-1), n  (fork at n-2)
//   E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//   F_4  1 - 2 => 3 - 4                  (alpha_1, alpha_2 long)
//   G_2  1 <= 2                          (alpha_1 short)
// Indices are 1-based in labels and 0-based in code.
//
// Cartan entries use a[i][j] = <alpha_i^vee, alpha_j> = 2(alpha_i, alpha_j) / (alpha_i, alpha_i).
// The symmetrizer d[i] = (alpha_i, alpha_i) / 2 is normalized so short roots
// have d = 1 (long roots: 2 for B, C, F and 3 for G_2); then d[i] a[i][j] is
// the symmetric inner product matrix.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wondercheck/bigint.hpp"

namespace wondercheck {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Default ceiling for sweeps over the classical families.
inline constexpr int kDefaultRankCeiling = 12;

class SimpleType {
 public:
  /// Throws Error(InvalidRank) when the rank is not allowed for the family.
  SimpleType(Family family, int rank);

  /// Accepts "E8", "e8", "E_8".
  static SimpleType parse(const std::string& text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool is_exceptional() const noexcept;
  bool is_simply_laced() const noexcept;

  /// "E8"
  std::string label() const;
  /// "E_8"
  std::string latex_label() const;

  static int min_rank(Family family) noexcept;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  int rank_;
};

/// All supported types: classical families for ranks min..rank_ceiling, then
/// E6, E7, E8, F4, G2.
std::vector<SimpleType> all_simple_types(int rank_ceiling = kDefaultRankCeiling);
std::vector<SimpleType> exceptional_types();

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

struct CartanMatrix {
  IntMatrix entries;
  IntVector symmetrizer;

  std::size_t rank() const noexcept { return entries.size(); }
  /// d[i] a[i][j]
  std::int64_t inner_product(std::size_t i, std::size_t j) const {
    return symmetrizer[i] * entries[i][j];
  }
  BigInt determinant() const;
};

CartanMatrix cartan_matrix(const SimpleType& type);

/// A root in simple-root coordinates.
struct Root {
  IntVector coeffs;

  std::int64_t height() const;
  bool is_positive() const;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// A weight in fundamental-weight coordinates; entries may be negative.
struct Weight {
  IntVector coords;

  bool is_dominant() const;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// A weight with all coordinates >= 0. Doubles as a nef divisor class on the
/// wonderful compactification.
class DominantWeight {
 public:
  /// Throws Error(NonDominant) on any negative coordinate.
  explicit DominantWeight(IntVector coords);

  static DominantWeight zero(std::size_t rank);
  /// The i-th fundamental weight (0-based).
  static DominantWeight fundamental(std::size_t rank, std::size_t index);

  const IntVector& coords() const noexcept { return coords_; }
  std::size_t rank() const noexcept { return coords_.size(); }
  bool is_zero() const;
  Weight as_weight() const { return Weight{coords_}; }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

 private:
  IntVector coords_;
};

std::string format_weight(const IntVector& coords);

class RootSystem {
 public:
  const SimpleType& type() const noexcept { return type_; }
  const CartanMatrix& cartan() const noexcept { return cartan_; }
  std::size_t rank() const noexcept { return cartan_.rank(); }

  /// Sorted by height, then lexicographically.
  const std::vector<Root>& positive_roots() const noexcept { return positive_; }
  const Root& highest_root() const noexcept { return positive_.back(); }
  /// Coroot of each positive root in simple-coroot coordinates, parallel to
  /// positive_roots().
  const std::vector<IntVector>& positive_coroots() const noexcept { return coroots_; }
  const DominantWeight& rho() const noexcept { return rho_; }

  /// Index of `root` in positive_roots(), or -1.
  std::ptrdiff_t find_positive(const Root& root) const;
  bool contains(const Root& root) const;

  /// (root, root) / 2 in the normalization of cartan().
  std::int64_t half_norm(const Root& root) const;
  /// Fundamental-weight coordinates of a root: <root, alpha_i^vee>.
  Weight root_as_weight(const Root& root) const;
  /// Weight of a root-lattice combination sum k_i alpha_i.
  Weight root_combination_as_weight(const IntVector& k) const;

  std::int64_t coxeter_number() const;
  std::int64_t dual_coxeter_number() const;

 private:
  friend RootSystem build_root_system(const SimpleType& type);
  explicit RootSystem(const SimpleType& type);

  SimpleType type_;
  CartanMatrix cartan_;
  std::vector<Root> positive_;
  std::vector<IntVector> coroots_;
  DominantWeight rho_;
};

/// Builds the positive roots by root-string closure from the simple roots.
RootSystem build_root_system(const SimpleType& type);

/// <w, alpha^vee> for a (positive or negative) root. Throws Error(NotARoot).
std::int64_t coroot_pairing(const RootSystem& rs, const Weight& w, const Root& alpha);
std::int64_t coroot_pairing(const RootSystem& rs, const DominantWeight& w, const Root& alpha);

/// (<omega_1, theta^vee>, ..., <omega_r, theta^vee>) in Bourbaki order.
IntVector comarks(const RootSystem& rs);
/// Coefficients of the highest root in the simple-root basis.
IntVector marks(const RootSystem& rs);

}  // namespace wondercheck
