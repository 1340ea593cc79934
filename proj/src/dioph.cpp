#include "wondercheck/dioph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "wondercheck/error.hpp"

namespace wondercheck {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// Places

PlaceSpec PlaceSpec::prime(std::uint64_t p) {
  bool is_prime = p >= 2;
  for (std::uint64_t f = 2; is_prime && f * f <= p; ++f) is_prime = p % f != 0;
  if (!is_prime) throw Error(ErrorKind::InvalidPlace, std::to_string(p) + " is not prime");
  return PlaceSpec(p);
}

PlaceSpec PlaceSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "inf" || s == "oo" || s == "r" || s == "archimedean") return archimedean();
  if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw Error(ErrorKind::InvalidPlace, "unknown place '" + text + "'");
  }
  return prime(std::stoull(s));
}

std::string PlaceSpec::label() const { return is_archimedean() ? "inf" : std::to_string(p_); }

BigRational PlaceSpec::abs(const BigInt& x) const {
  if (x == 0) return 0;
  if (is_archimedean()) return BigRational(mp::abs(x));
  BigInt rest = x;
  BigInt scale = 1;
  while (rest % p_ == 0) {
    rest /= p_;
    scale *= p_;
  }
  return BigRational(BigInt(1), scale);
}

// ---------------------------------------------------------------------------
// Points

RationalProjectivePoint::RationalProjectivePoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw Error(ErrorKind::InvalidPoint, "a projective point needs at least two coordinates");
  BigInt g = 0;
  for (const auto& c : coords_) g = mp::gcd(g, mp::abs(c));
  if (g == 0) throw Error(ErrorKind::InvalidPoint, "all coordinates are zero");
  const auto lead = std::find_if(coords_.begin(), coords_.end(), [](const BigInt& c) { return c != 0; });
  if (*lead < 0) g = -g;
  for (auto& c : coords_) c /= g;
}

RationalProjectivePoint RationalProjectivePoint::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) continue;
    s.push_back(c);
  }
  std::vector<BigInt> coords;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) coords.push_back(parse_big(item));
  return RationalProjectivePoint(std::move(coords));
}

std::string RationalProjectivePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ":" : "") + coords_[i].str();
  return s + ")";
}

BigCount height(const RationalProjectivePoint& x, unsigned m) {
  BigInt h = 0;
  for (const auto& c : x.coords()) h = std::max(h, BigInt(mp::abs(c)));
  return mp::pow(h, m);
}

BigRational distance(const RationalProjectivePoint& x, const RationalProjectivePoint& y, const PlaceSpec& v) {
  const auto& a = x.coords();
  const auto& b = y.coords();
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, x.to_string() + " and " + y.to_string() + " lie in different spaces");
  BigRational cross = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) cross = std::max(cross, v.abs(a[i] * b[j] - a[j] * b[i]));
  }
  BigRational na = 0;
  BigRational nb = 0;
  for (const auto& c : a) na = std::max(na, v.abs(c));
  for (const auto& c : b) nb = std::max(nb, v.abs(c));
  return cross / (na * nb);
}

ApproxSample make_sample(const RationalProjectivePoint& x, const RationalProjectivePoint& target,
                         const PlaceSpec& v, unsigned m) {
  BigRational dist = distance(x, target, v);
  if (dist == 0) throw Error(ErrorKind::InvalidPoint, x.to_string() + " coincides with the target");
  BigCount h = height(x, m);
  const double log_dist = log_big(dist);
  const double ratio = log_dist >= 0 ? std::numeric_limits<double>::infinity() : log_big(h) / -log_dist;
  return ApproxSample{x, std::move(h), std::move(dist), ratio};
}

// ---------------------------------------------------------------------------
// Estimation

std::vector<ApproxSample> sorted_by_distance(std::vector<ApproxSample> samples) {
  std::stable_sort(samples.begin(), samples.end(),
                   [](const ApproxSample& a, const ApproxSample& b) { return a.distance > b.distance; });
  return samples;
}

AlphaEstimate alpha_estimate(std::vector<ApproxSample> samples, const EstimateOptions& options) {
  if (samples.size() < 10)
    throw Error(ErrorKind::TooFewPoints, "need at least 10 samples, got " + std::to_string(samples.size()));
  if (!(options.tail_fraction > 0.0 && options.tail_fraction <= 1.0) || !(options.convergence_factor >= 1.0))
    throw Error(ErrorKind::BadArgs, "tail_fraction must lie in (0, 1] and convergence_factor must be >= 1");
  samples = sorted_by_distance(std::move(samples));

  const double spread = log_big(samples.front().distance) - log_big(samples.back().distance);
  if (!(spread > 0.0 && spread >= std::log(options.convergence_factor))) {
    throw Error(ErrorKind::NotConverging, "distances shrink only by a factor of " + std::to_string(std::exp(spread)));
  }

  const auto n = samples.size();
  auto tail = static_cast<std::size_t>(std::ceil(options.tail_fraction * static_cast<double>(n)));
  tail = std::clamp<std::size_t>(tail, 1, n);
  std::vector<double> ratios;
  ratios.reserve(tail);
  for (std::size_t i = n - tail; i < n; ++i) ratios.push_back(samples[i].ratio);
  std::sort(ratios.begin(), ratios.end());
  const double median =
      tail % 2 == 1 ? ratios[tail / 2] : 0.5 * (ratios[tail / 2 - 1] + ratios[tail / 2]);
  return AlphaEstimate{median, ratios.front(), ratios.back(), tail, n};
}

bool product_bounded(const std::vector<ApproxSample>& samples, double gamma) {
  if (samples.size() < 2) throw Error(ErrorKind::TooFewPoints, "need at least 2 samples");
  const auto sorted = sorted_by_distance(samples);
  const std::size_t half = sorted.size() / 2;
  double head = -std::numeric_limits<double>::infinity();
  double tail = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double value = gamma * log_big(sorted[i].distance) + log_big(sorted[i].height);
    double& side = i < half ? head : tail;
    side = std::max(side, value);
  }
  return tail <= head + 1e-9;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

std::vector<BigInt> other_coordinate_point(const RationalProjectivePoint& P) {
  const std::size_t len = P.coords().size();
  for (std::size_t j = 0; j < len; ++j) {
    std::vector<BigInt> e(len, 0);
    e[j] = 1;
    if (RationalProjectivePoint(e) != P) return e;
  }
  return {};  // unreachable: P^N has at least two coordinate points
}

}  // namespace

std::vector<ApproxSample> best_sequence_on_line(const RationalProjectivePoint& P, const PlaceSpec& v,
                                                std::size_t count, unsigned m) {
  const std::vector<BigInt> q = other_coordinate_point(P);
  const auto& p = P.coords();
  std::vector<ApproxSample> out;
  out.reserve(count);
  BigInt scale = v.is_archimedean() ? BigInt(1) : BigInt(v.prime_value());
  for (std::size_t i = 1; i <= count; ++i) {
    std::vector<BigInt> x(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
      x[j] = v.is_archimedean() ? BigInt(i) * p[j] + q[j] : p[j] + scale * q[j];
    }
    out.push_back(make_sample(RationalProjectivePoint(std::move(x)), P, v, m));
    if (!v.is_archimedean()) scale *= v.prime_value();
  }
  return out;
}

std::vector<ApproxSample> square_sequence_on_line(const RationalProjectivePoint& P, std::size_t count,
                                                  unsigned m) {
  const std::vector<BigInt> q = other_coordinate_point(P);
  const auto& p = P.coords();
  const PlaceSpec inf = PlaceSpec::archimedean();
  std::vector<ApproxSample> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const BigInt sq = BigInt(i) * i;
    std::vector<BigInt> x(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) x[j] = sq * p[j] + q[j];
    out.push_back(make_sample(RationalProjectivePoint(std::move(x)), P, inf, m));
  }
  return out;
}

}  // namespace wondercheck
