#include "wondercheck/repdim.hpp"

#include <set>

#include "wondercheck/error.hpp"

namespace wondercheck {

namespace {

void require_rank(const RootSystem& rs, const DominantWeight& lam) {
  if (lam.rank() != rs.rank())
    throw Error(ErrorKind::DimensionMismatch,
                "weight " + format_weight(lam.coords()) + " has wrong length for " + rs.type().label());
}

}  // namespace

BigCount weyl_dim(const RootSystem& rs, const DominantWeight& lam) {
  require_rank(rs, lam);
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (const auto& co : rs.positive_coroots()) {
    std::int64_t shifted = 0;
    std::int64_t base = 0;
    for (std::size_t j = 0; j < co.size(); ++j) {
      shifted += (lam.coords()[j] + 1) * co[j];
      base += co[j];
    }
    numerator *= shifted;
    denominator *= base;
  }
  if (numerator % denominator != 0) {
    throw Error(ErrorKind::InvalidType, "Weyl dimension formula not integral for " + rs.type().label() + " " +
                                            format_weight(lam.coords()));
  }
  return numerator / denominator;
}

BigCount end_dim(const RootSystem& rs, const DominantWeight& lam) {
  const BigCount d = weyl_dim(rs, lam);
  return d * d;
}

std::vector<DominantWeight> dominant_weights_below(const RootSystem& rs, const DominantWeight& lam) {
  require_rank(rs, lam);
  std::vector<Weight> root_weights;
  root_weights.reserve(rs.positive_roots().size());
  for (const Root& r : rs.positive_roots()) root_weights.push_back(rs.root_as_weight(r));

  std::set<IntVector> seen{lam.coords()};
  std::vector<IntVector> frontier{lam.coords()};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const IntVector& mu : frontier) {
      for (const Weight& rw : root_weights) {
        IntVector eta = mu;
        bool dominant = true;
        for (std::size_t j = 0; j < eta.size(); ++j) {
          eta[j] -= rw.coords[j];
          dominant = dominant && eta[j] >= 0;
        }
        if (dominant && seen.insert(eta).second) next.push_back(std::move(eta));
      }
    }
    frontier = std::move(next);
  }

  std::vector<DominantWeight> out;
  out.reserve(seen.size());
  for (const auto& c : seen) out.emplace_back(c);
  return out;
}

BigCount h0_dim(const RootSystem& rs, const DominantWeight& lam) {
  BigCount total = 0;
  for (const auto& eta : dominant_weights_below(rs, lam)) total += end_dim(rs, eta);
  return total;
}

bool root_lattice_difference(const RootSystem& rs, const Weight& lam, const Weight& eta, IntVector& k) {
  // Solve A k = lam - eta by exact rational elimination.
  const std::size_t n = rs.rank();
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rs.cartan().entries[i][j];
    m[i][n] = lam.coords[i] - eta.coords[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[c], m[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const BigRational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  k.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const BigRational v = m[i][n] / m[i][i];
    if (boost::multiprecision::denominator(v) != 1) return false;
    k[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
  }
  return true;
}

bool dominance_leq(const RootSystem& rs, const Weight& eta, const Weight& lam) {
  IntVector k;
  if (!root_lattice_difference(rs, lam, eta, k)) return false;
  for (auto c : k) {
    if (c < 0) return false;
  }
  return true;
}

}  // namespace wondercheck
