#include "wondercheck/wonderful.hpp"

#include <algorithm>
#include <limits>

#include "wondercheck/error.hpp"
#include "wondercheck/repdim.hpp"

namespace wondercheck {

SemisimpleType::SemisimpleType(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorKind::BadArgs, "semisimple type needs at least one factor");
}

SemisimpleType SemisimpleType::parse(const std::string& text) {
  std::vector<SimpleType> factors;
  std::string piece;
  auto flush = [&] {
    if (piece.empty()) throw Error(ErrorKind::InvalidType, "empty factor in '" + text + "'");
    factors.push_back(SimpleType::parse(piece));
    piece.clear();
  };
  for (char c : text) {
    if (c == 'x' || c == 'X' || c == '*') {
      flush();
    } else {
      piece.push_back(c);
    }
  }
  flush();
  return SemisimpleType(std::move(factors));
}

std::size_t SemisimpleType::total_rank() const {
  std::size_t r = 0;
  for (const auto& f : factors_) r += static_cast<std::size_t>(f.rank());
  return r;
}

std::string SemisimpleType::label() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "x" : "") + factors_[i].label();
  return s;
}

NefDivisor::NefDivisor(std::vector<IntVector> per_factor) : coeffs_(std::move(per_factor)) {
  for (const auto& v : coeffs_) {
    for (auto c : v) {
      if (c < 0) throw Error(ErrorKind::NotNef, "divisor coefficient " + std::to_string(c) + " is negative");
    }
  }
}

NefDivisor NefDivisor::from_flat(const SemisimpleType& type, const IntVector& flat) {
  if (flat.size() != type.total_rank()) {
    throw Error(ErrorKind::BadArgs, "expected " + std::to_string(type.total_rank()) + " coefficients for " +
                                        type.label() + ", got " + std::to_string(flat.size()));
  }
  std::vector<IntVector> parts;
  std::size_t pos = 0;
  for (const auto& f : type.factors()) {
    const auto r = static_cast<std::size_t>(f.rank());
    parts.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                       flat.begin() + static_cast<std::ptrdiff_t>(pos + r));
    pos += r;
  }
  return NefDivisor(std::move(parts));
}

NefDivisor NefDivisor::zero(const SemisimpleType& type) {
  return from_flat(type, IntVector(type.total_rank(), 0));
}

bool NefDivisor::is_zero() const {
  for (std::size_t f = 0; f < coeffs_.size(); ++f) {
    if (supported_on(f)) return false;
  }
  return true;
}

bool NefDivisor::supported_on(std::size_t factor) const {
  if (factor >= coeffs_.size()) throw Error(ErrorKind::BadIndex, "factor index out of range");
  return std::any_of(coeffs_[factor].begin(), coeffs_[factor].end(), [](std::int64_t c) { return c > 0; });
}

DominantWeight NefDivisor::factor_weight(std::size_t factor) const {
  if (factor >= coeffs_.size()) throw Error(ErrorKind::BadIndex, "factor index out of range");
  return DominantWeight(coeffs_[factor]);
}

SemisimpleData::SemisimpleData(SemisimpleType type) : type_(std::move(type)) {
  systems_.reserve(type_.factors().size());
  for (const auto& f : type_.factors()) systems_.push_back(build_root_system(f));
}

std::int64_t dim_X(const RootSystem& rs) {
  return static_cast<std::int64_t>(rs.rank() + 2 * rs.positive_roots().size());
}

std::int64_t dim_X(const SemisimpleType& t) {
  std::int64_t total = 0;
  for (const auto& f : t.factors()) total += dim_X(build_root_system(f));
  return total;
}

namespace {

void check_shape(const SemisimpleData& data, const NefDivisor& divisor) {
  const auto& fs = data.type().factors();
  if (divisor.coeffs().size() != fs.size())
    throw Error(ErrorKind::BadArgs, "divisor has " + std::to_string(divisor.coeffs().size()) +
                                        " factors, type " + data.type().label() + " has " +
                                        std::to_string(fs.size()));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (divisor.coeffs()[i].size() != static_cast<std::size_t>(fs[i].rank()))
      throw Error(ErrorKind::BadArgs, "divisor block " + std::to_string(i) + " has wrong length for " +
                                          fs[i].label());
  }
}

}  // namespace

std::int64_t root_curve_degree(const SemisimpleData& data, const NefDivisor& divisor, std::size_t factor) {
  check_shape(data, divisor);
  if (factor >= data.factors().size())
    throw Error(ErrorKind::BadIndex, "factor " + std::to_string(factor) + " out of range for " + data.type().label());
  const IntVector c = comarks(data.factors()[factor]);
  const IntVector& k = divisor.coeffs()[factor];
  std::int64_t degree = 0;
  for (std::size_t i = 0; i < c.size(); ++i) degree += k[i] * c[i];
  return degree;
}

std::int64_t root_curve_degree(const SemisimpleType& t, const NefDivisor& divisor, std::size_t factor) {
  return root_curve_degree(SemisimpleData(t), divisor, factor);
}

BigCount h0_product(const SemisimpleData& data, const NefDivisor& divisor) {
  check_shape(data, divisor);
  BigCount total = 1;
  for (std::size_t f = 0; f < data.factors().size(); ++f) {
    total *= h0_dim(data.factors()[f], divisor.factor_weight(f));
  }
  return total;
}

BigCount h0_product(const SemisimpleType& t, const NefDivisor& divisor) {
  return h0_product(SemisimpleData(t), divisor);
}

std::size_t select_curve_factor(const SemisimpleData& data, const NefDivisor& divisor) {
  check_shape(data, divisor);
  std::size_t best = 0;
  std::int64_t best_degree = std::numeric_limits<std::int64_t>::max();
  for (std::size_t f = 0; f < data.factors().size(); ++f) {
    if (!divisor.supported_on(f)) continue;
    const auto deg = root_curve_degree(data, divisor, f);
    if (deg < best_degree) {
      best_degree = deg;
      best = f;
    }
  }
  return best;
}

}  // namespace wondercheck
