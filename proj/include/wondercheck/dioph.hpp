#pragma once

// Heights, distances and approximation-constant estimates for sequences of
// rational points on projective space over Q.
//
// Conventions:
//   height H(x) = max |x_i| on the primitive representative; H_{O(m)} = H^m.
//   dist_v(x, y) = max_{i<j} |x_i y_j - x_j y_i|_v / (max_i |x_i|_v * max_j |y_j|_v).
// Both are exact rationals for either kind of place, so only the final
// log-ratio log H / -log dist is a floating-point number.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wondercheck/bigint.hpp"

namespace wondercheck {

class PlaceSpec {
 public:
  static PlaceSpec archimedean() { return PlaceSpec(0); }
  /// Throws Error(InvalidPlace) unless p is prime.
  static PlaceSpec prime(std::uint64_t p);
  /// "inf", "oo", "R" or a prime such as "5".
  static PlaceSpec parse(const std::string& text);

  bool is_archimedean() const noexcept { return p_ == 0; }
  std::uint64_t prime_value() const noexcept { return p_; }
  std::string label() const;

  /// |x|_v as an exact rational.
  BigRational abs(const BigInt& x) const;

 private:
  explicit PlaceSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

class RationalProjectivePoint {
 public:
  /// Divides out the gcd and makes the first nonzero entry positive.
  /// Throws Error(InvalidPoint) on the zero vector or fewer than two entries.
  explicit RationalProjectivePoint(std::vector<BigInt> coords);

  /// "1:0", "(2:4:0)".
  static RationalProjectivePoint parse(const std::string& text);

  const std::vector<BigInt>& coords() const noexcept { return coords_; }
  /// N for a point of P^N.
  std::size_t dimension() const noexcept { return coords_.size() - 1; }
  std::string to_string() const;

  friend bool operator==(const RationalProjectivePoint&, const RationalProjectivePoint&) = default;

 private:
  std::vector<BigInt> coords_;
};

/// (max |x_i|)^m.
BigCount height(const RationalProjectivePoint& x, unsigned m = 1);

/// Throws Error(DimensionMismatch) when x and y live in different P^N.
BigRational distance(const RationalProjectivePoint& x, const RationalProjectivePoint& y, const PlaceSpec& v);

struct ApproxSample {
  RationalProjectivePoint point;
  BigCount height;
  BigRational distance;
  /// log(height) / -log(distance); +inf when distance >= 1.
  double ratio;
};

/// Throws Error(InvalidPoint) when x coincides with the target.
ApproxSample make_sample(const RationalProjectivePoint& x, const RationalProjectivePoint& target,
                         const PlaceSpec& v, unsigned m = 1);

struct EstimateOptions {
  /// Fraction of the samples, closest to the target, that form the tail.
  double tail_fraction = 0.5;
  /// The closest sample must be at least this many times closer than the
  /// farthest one for the sequence to count as converging.
  double convergence_factor = 4.0;
};

struct AlphaEstimate {
  double estimate;  ///< median ratio over the tail
  double tail_min;
  double tail_max;
  std::size_t tail_count;
  std::size_t sample_count;
};

/// Liminf-style estimate of the approximation constant from finitely many
/// samples; samples are ordered by decreasing distance first.
/// Throws Error(TooFewPoints) below 10 samples, Error(NotConverging) when the
/// distances do not shrink by convergence_factor.
AlphaEstimate alpha_estimate(std::vector<ApproxSample> samples, const EstimateOptions& options = {});

/// Samples ordered by decreasing distance.
std::vector<ApproxSample> sorted_by_distance(std::vector<ApproxSample> samples);

/// Finite-data reading of "dist^gamma * H is bounded from above": the largest
/// value of log(dist^gamma * H) over the closer half of the samples does not
/// exceed its largest value over the farther half.
bool product_bounded(const std::vector<ApproxSample>& samples, double gamma);

/// Points on the line through P and a coordinate point Q != P:
///   archimedean: x_i = i P + Q, i = 1..count
///   p-adic:      x_k = P + p^k Q, k = 1..count
/// Heights grow like i (resp. p^k) and distances shrink like 1/i (resp. p^-k).
std::vector<ApproxSample> best_sequence_on_line(const RationalProjectivePoint& P, const PlaceSpec& v,
                                                std::size_t count, unsigned m = 1);

/// Archimedean only: x_i = i^2 P + Q, i = 1..count. A sparser sequence on the
/// same line; for P = (1:0) this is (i^2 : 1) and its ratio is still 1.
std::vector<ApproxSample> square_sequence_on_line(const RationalProjectivePoint& P, std::size_t count,
                                                  unsigned m = 1);

}  // namespace wondercheck
