#pragma once

// Liouville-type lower bounds for Zariski-dense sequences and the colour/nef
// verification verdicts built on them.

#include <cstdint>
#include <vector>

#include "wondercheck/bigint.hpp"
#include "wondercheck/rootsys.hpp"
#include "wondercheck/wonderful.hpp"

namespace wondercheck {

/// Which section count stands in for h^0(D_omega).
enum class SectionMode {
  End,  ///< the distinguished summand End(V_omega) only
  H0,   ///< the full dominance-order sum
};

struct Verdict {
  std::int64_t curve_constant = 0;     ///< D . C_theta
  std::int64_t dense_lower_bound = 0;  ///< largest d certified for dense sequences
  BigCount required_count = 0;         ///< C(n + c - 1, n), c = curve_constant
  BigCount available_sections = 0;
  bool pass = false;                   ///< dense_lower_bound >= curve_constant
  bool full_conjecture = false;        ///< every colour meets C_theta with degree 1
};

/// Number of monomials of degree <= e in n variables: C(n + e, n).
/// Throws Error(BadArgs) on negative input.
BigCount monomial_count(std::int64_t n, std::int64_t e);

/// Largest d >= 0 with h0 > C(n + d - 1, n). Throws Error(BadArgs) unless
/// n >= 1 and h0 >= 1.
std::int64_t liouville_bound(std::int64_t n, const BigCount& h0);

/// C(dim + d - 2, d - 1): the count of monomials of degree exactly d - 1 in
/// dim variables. This is what the published root-curve table prints.
BigCount table_binomial_value(std::int64_t dim, std::int64_t d);
/// C(dim - 1 + d, dim): the formula in that table's column header.
BigCount header_binomial_value(std::int64_t dim, std::int64_t d);

BigCount table_binomial(const SimpleType& t, std::size_t weight_index);

bool full_conjecture_check(const SimpleType& t);
bool full_conjecture_check(const RootSystem& rs);

/// Strict check for the colour omega_i: available_sections > required_count.
Verdict verify_colour(const RootSystem& rs, std::size_t weight_index, SectionMode mode = SectionMode::End);
Verdict verify_colour(const SimpleType& t, std::size_t weight_index, SectionMode mode = SectionMode::End);

struct ColourCheck {
  std::size_t factor = 0;
  std::size_t weight_index = 0;
  Verdict verdict;
};

struct NefVerdict {
  /// D = 0: nothing to certify.
  bool trivial = false;
  /// D . C_theta = 0 on the chosen curve; flagged, never certified. Always
  /// set together with trivial, since every colour meets C_theta positively.
  bool degenerate = false;
  /// D lives on a proper subset of the factors.
  bool factor_supported = false;

  /// Every colour with positive coefficient passes on its own.
  bool structural_pass = false;
  std::vector<ColourCheck> colours;

  /// Root curve of this factor, all sections of D on the product.
  std::size_t selected_factor = 0;
  Verdict direct;
};

NefVerdict verify_nef(const SemisimpleData& data, const NefDivisor& divisor);
NefVerdict verify_nef(const SemisimpleType& t, const NefDivisor& divisor);

}  // namespace wondercheck
