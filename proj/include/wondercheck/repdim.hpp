#pragma once

// Exact dimension counts for irreducible representations and for the section
// spaces of nef line bundles on the wonderful compactification.

#include <vector>

#include "wondercheck/bigint.hpp"
#include "wondercheck/rootsys.hpp"

namespace wondercheck {

/// Weyl dimension formula: prod <lam + rho, a^vee> / prod <rho, a^vee> over
/// positive roots, as two exact products and one exact division.
BigCount weyl_dim(const RootSystem& rs, const DominantWeight& lam);

/// dim End(V_lam) = weyl_dim^2.
BigCount end_dim(const RootSystem& rs, const DominantWeight& lam);

/// Every dominant eta with lam - eta a non-negative integer combination of
/// simple roots, lam itself included. Sorted lexicographically on coordinates.
///
/// Walks down from lam by subtracting positive roots and keeping dominant
/// results; on an irreducible root system consecutive dominant weights in the
/// dominance order differ by a positive root, so the walk reaches every
/// dominant weight below lam.
std::vector<DominantWeight> dominant_weights_below(const RootSystem& rs, const DominantWeight& lam);

/// h^0(X, L_lam) = sum over dominant_weights_below(lam) of end_dim.
BigCount h0_dim(const RootSystem& rs, const DominantWeight& lam);

/// Writes lam - eta in the simple-root basis when it is an integral
/// combination; returns false otherwise (different coset of the root lattice).
bool root_lattice_difference(const RootSystem& rs, const Weight& lam, const Weight& eta, IntVector& k);

/// eta <= lam in the dominance order (lam - eta in the positive root cone).
bool dominance_leq(const RootSystem& rs, const Weight& eta, const Weight& lam);

}  // namespace wondercheck
