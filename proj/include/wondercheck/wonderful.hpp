#pragma once

// Numerical dictionary for the wonderful compactification X of an adjoint
// semisimple group: Pic(X) is the weight lattice, nef classes are dominant
// weights, and the colours are the fundamental weights.

#include <string>
#include <vector>

#include "wondercheck/bigint.hpp"
#include "wondercheck/rootsys.hpp"

namespace wondercheck {

class SemisimpleType {
 public:
  /// Throws Error(BadArgs) on an empty factor list.
  explicit SemisimpleType(std::vector<SimpleType> factors);
  SemisimpleType(const SimpleType& simple) : SemisimpleType(std::vector<SimpleType>{simple}) {}

  /// Accepts products such as "A1xA1", "E8*G2".
  static SemisimpleType parse(const std::string& text);

  const std::vector<SimpleType>& factors() const noexcept { return factors_; }
  std::size_t total_rank() const;
  std::string label() const;

 private:
  std::vector<SimpleType> factors_;
};

class NefDivisor {
 public:
  /// Throws Error(NotNef) on a negative coefficient.
  explicit NefDivisor(std::vector<IntVector> per_factor);

  /// Splits a flat coefficient list along the factor ranks of `type`.
  /// Throws Error(BadArgs) when the count differs from the total rank.
  static NefDivisor from_flat(const SemisimpleType& type, const IntVector& flat);
  static NefDivisor zero(const SemisimpleType& type);

  const std::vector<IntVector>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  /// True when the factor carries at least one positive coefficient.
  bool supported_on(std::size_t factor) const;
  DominantWeight factor_weight(std::size_t factor) const;

 private:
  std::vector<IntVector> coeffs_;
};

/// Immutable per-factor root systems for a semisimple type.
class SemisimpleData {
 public:
  explicit SemisimpleData(SemisimpleType type);

  const SemisimpleType& type() const noexcept { return type_; }
  const std::vector<RootSystem>& factors() const noexcept { return systems_; }

 private:
  SemisimpleType type_;
  std::vector<RootSystem> systems_;
};

/// dim X = dim G = sum over factors of rank + 2 |positive roots|.
std::int64_t dim_X(const SemisimpleType& t);
std::int64_t dim_X(const RootSystem& rs);

/// D . C_theta for the longest-root curve of the chosen factor.
std::int64_t root_curve_degree(const SemisimpleData& data, const NefDivisor& divisor, std::size_t factor);
std::int64_t root_curve_degree(const SemisimpleType& t, const NefDivisor& divisor, std::size_t factor);

/// Product over factors of h0_dim.
BigCount h0_product(const SemisimpleData& data, const NefDivisor& divisor);
BigCount h0_product(const SemisimpleType& t, const NefDivisor& divisor);

/// Factor with positive coefficient support minimizing root_curve_degree
/// (lowest index on ties); 0 for the zero divisor.
std::size_t select_curve_factor(const SemisimpleData& data, const NefDivisor& divisor);

}  // namespace wondercheck
