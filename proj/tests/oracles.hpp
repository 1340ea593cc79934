#pragma once

// Brute-force reference computations for the unit and acceptance tests. They
// share only the Cartan matrix with the library and take different routes:
// Weyl-group reflection closure instead of root strings, a box search with a
// rational inverse Cartan matrix instead of the root-subtraction walk, Pascal
// rows instead of the multiplicative binomial.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wondercheck/rootsys.hpp"

namespace oracle {

using wondercheck::BigInt;
using wondercheck::BigRational;
using wondercheck::IntMatrix;
using wondercheck::IntVector;

/// All roots (positive and negative) as the orbit of the simple roots under
/// the simple reflections s_i(b) = b - <b, alpha_i^vee> alpha_i.
inline std::set<IntVector> roots_by_reflection(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::set<IntVector> seen;
  std::vector<IntVector> stack;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    stack.push_back(e);
  }
  while (!stack.empty()) {
    const IntVector b = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t k = 0; k < n; ++k) pairing += a[i][k] * b[k];
      IntVector r = b;
      r[i] -= pairing;
      if (seen.insert(r).second) stack.push_back(r);
    }
  }
  return seen;
}

/// Highest root: the positive root of maximal height in the reflection orbit.
inline IntVector highest_root(const IntMatrix& a) {
  IntVector best;
  std::int64_t best_h = -1;
  for (const auto& r : roots_by_reflection(a)) {
    std::int64_t h = 0;
    for (auto c : r) h += c;
    if (h > best_h) {
      best_h = h;
      best = r;
    }
  }
  return best;
}

/// Comarks from the symmetric form (x, y) = sum x_i y_j d_i a_ij:
/// theta^vee = 2 theta / (theta, theta), read off in the simple-coroot basis.
inline IntVector comarks(const wondercheck::CartanMatrix& cm) {
  const IntVector theta = highest_root(cm.entries);
  const std::size_t n = theta.size();
  std::int64_t norm = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) norm += theta[i] * theta[j] * cm.symmetrizer[i] * cm.entries[i][j];
  IntVector out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = 2 * theta[j] * cm.symmetrizer[j] / norm;
  return out;
}

/// Inverse of an integer matrix over Q (Gauss-Jordan).
inline std::vector<std::vector<BigRational>> inverse(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    const BigRational piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const BigRational f = m[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<std::vector<BigRational>> inv(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

/// Box bound per simple root: ceil of the root-basis coordinates of lam.
/// Weight coordinates are w = A k (w_i = sum_j a_ij k_j), so k = A^{-1} w.
inline IntVector box_bounds(const IntMatrix& a, const IntVector& lam) {
  const auto inv = inverse(a);
  const std::size_t n = a.size();
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigRational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += inv[i][j] * lam[j];
    BigInt q = boost::multiprecision::numerator(s) / boost::multiprecision::denominator(s);
    if (q * boost::multiprecision::denominator(s) < boost::multiprecision::numerator(s)) q += 1;
    out[i] = static_cast<std::int64_t>(q);
  }
  return out;
}

inline std::uint64_t box_volume(const IntVector& bounds) {
  std::uint64_t v = 1;
  for (auto b : bounds) v *= static_cast<std::uint64_t>(b + 1);
  return v;
}

/// Exhaustive search over k in the box: eta = lam - A k, keep dominant ones.
inline std::vector<IntVector> dominant_below_box(const IntMatrix& a, const IntVector& lam) {
  const std::size_t n = a.size();
  const IntVector bounds = box_bounds(a, lam);
  std::vector<IntVector> out;
  IntVector k(n, 0);
  while (true) {
    IntVector eta = lam;
    bool dominant = true;
    for (std::size_t i = 0; i < n && dominant; ++i) {
      for (std::size_t j = 0; j < n; ++j) eta[i] -= a[i][j] * k[j];
      dominant = eta[i] >= 0;
    }
    if (dominant) out.push_back(eta);
    std::size_t pos = 0;
    while (pos < n && k[pos] == bounds[pos]) k[pos++] = 0;
    if (pos == n) break;
    ++k[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Pascal's triangle row by row.
inline BigInt pascal(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<BigInt> row{1};
  for (std::int64_t r = 1; r <= n; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r + 1), 1);
    for (std::int64_t j = 1; j < r; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Counts exponent vectors of length n with total degree <= e by recursion.
inline std::uint64_t monomials_up_to(std::int64_t n, std::int64_t e) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (std::int64_t first = 0; first <= e; ++first) total += monomials_up_to(n - 1, e - first);
  return total;
}

/// Largest d with h0 > C(n + d - 1, n), by linear search stepping
/// C(n + d, n) = C(n + d - 1, n) (n + d) / d.
inline std::int64_t liouville_linear(std::int64_t n, const BigInt& h0) {
  std::int64_t d = 0;
  BigInt next = 1;  // C(n + d, n)
  while (h0 > next) {
    ++d;
    next = next * (n + d) / d;
  }
  return d;
}

/// Weyl dimension through the symmetric form: prod (lam + rho, a) / (rho, a)
/// with (omega_i, alpha_j) = delta_ij d_j, evaluated in exact rationals.
inline BigRational weyl_dim_rational(const wondercheck::CartanMatrix& cm, const IntVector& lam) {
  const std::size_t n = cm.rank();
  BigRational dim = 1;
  for (const auto& r : roots_by_reflection(cm.entries)) {
    if (std::any_of(r.begin(), r.end(), [](std::int64_t c) { return c < 0; })) continue;
    BigRational top = 0;
    BigRational bottom = 0;
    for (std::size_t j = 0; j < n; ++j) {
      top += BigRational((lam[j] + 1) * r[j] * cm.symmetrizer[j]);
      bottom += BigRational(r[j] * cm.symmetrizer[j]);
    }
    dim *= top / bottom;
  }
  return dim;
}

}  // namespace oracle
