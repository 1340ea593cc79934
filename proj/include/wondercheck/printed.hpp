#pragma once

// The two reference tables as they are printed in the literature, cell by
// cell. Classical rows are printed as closed forms in n and are evaluated here
// per rank; exceptional rows are literal.
//
// Known misprints are kept verbatim (E6 "352", E8 "6899054264", the spin
// entries of B_n and D_n); the comparison code reports them.

#include <cstdint>
#include <string>
#include <vector>

#include "wondercheck/bigint.hpp"
#include "wondercheck/rootsys.hpp"

namespace wondercheck::printed {

/// Root-curve table, second column, in the printed order.
IntVector comarks(const SimpleType& t);
/// Root-curve table, third column, in the printed order.
std::vector<BigInt> curve_binomials(const SimpleType& t);
/// Dimension table, dim(X) column.
std::int64_t dim_x(const SimpleType& t);
/// Dimension table, third column: the printed bases b with End entries b^2.
std::vector<BigInt> fundamental_dims(const SimpleType& t);

/// Closed-form cells for the classical rows, e.g. "1, 2, ..., 2, 1".
std::string comark_form(Family f);
std::string curve_binomial_form(Family f);
std::string dim_x_form(Family f);
std::string fundamental_dims_form(Family f);

/// The E8 showcase: the printed dim End(V_omega) for the third weight, the
/// threshold it is compared with, and the two approximation constants quoted
/// alongside.
inline const BigInt kE8ShowcaseEndDim{"47596949737616581696"};
inline constexpr std::int64_t kE8ShowcaseThreshold = 2573000;
inline constexpr std::int64_t kE8ShowcaseDenseBound = 11;
inline constexpr std::int64_t kE8ShowcaseCurveConstant = 4;

}  // namespace wondercheck::printed
