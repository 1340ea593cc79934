#include "wondercheck/bounds.hpp"

#include <algorithm>

#include "wondercheck/error.hpp"
#include "wondercheck/repdim.hpp"

namespace wondercheck {

BigCount monomial_count(std::int64_t n, std::int64_t e) {
  if (n < 0 || e < 0) throw Error(ErrorKind::BadArgs, "monomial_count needs n >= 0 and e >= 0");
  return binomial(n + e, n);
}

namespace {

// C(n + d - 1, n), with the d = 0 case equal to 0.
BigCount threshold(std::int64_t n, std::int64_t d) { return binomial(n + d - 1, n); }

}  // namespace

std::int64_t liouville_bound(std::int64_t n, const BigCount& h0) {
  if (n < 1 || h0 < 1) throw Error(ErrorKind::BadArgs, "liouville_bound needs n >= 1 and h0 >= 1");
  // threshold(n, d) is strictly increasing in d for d >= 1; gallop then bisect.
  std::int64_t lo = 0;  // h0 > threshold(n, lo) holds
  std::int64_t hi = 1;
  constexpr std::int64_t kCap = std::int64_t{1} << 62;
  while (h0 > threshold(n, hi)) {
    lo = hi;
    if (hi >= kCap) return lo;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (h0 > threshold(n, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

BigCount table_binomial_value(std::int64_t dim, std::int64_t d) { return binomial(dim + d - 2, d - 1); }

BigCount header_binomial_value(std::int64_t dim, std::int64_t d) { return binomial(dim - 1 + d, dim); }

BigCount table_binomial(const SimpleType& t, std::size_t weight_index) {
  const RootSystem rs = build_root_system(t);
  const IntVector c = comarks(rs);
  if (weight_index >= c.size()) throw Error(ErrorKind::BadIndex, "weight index out of range for " + t.label());
  return table_binomial_value(dim_X(rs), c[weight_index]);
}

bool full_conjecture_check(const RootSystem& rs) {
  const IntVector c = comarks(rs);
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 1; });
}

bool full_conjecture_check(const SimpleType& t) { return full_conjecture_check(build_root_system(t)); }

namespace {

Verdict make_verdict(std::int64_t n, std::int64_t curve_constant, BigCount available) {
  Verdict v;
  v.curve_constant = curve_constant;
  v.available_sections = std::move(available);
  v.required_count = curve_constant > 0 ? monomial_count(n, curve_constant - 1) : BigCount(0);
  v.dense_lower_bound = liouville_bound(n, v.available_sections);
  v.pass = v.dense_lower_bound >= v.curve_constant;
  return v;
}

}  // namespace

Verdict verify_colour(const RootSystem& rs, std::size_t weight_index, SectionMode mode) {
  if (weight_index >= rs.rank())
    throw Error(ErrorKind::BadIndex, "weight index " + std::to_string(weight_index + 1) + " out of range for " +
                                         rs.type().label());
  const DominantWeight omega = DominantWeight::fundamental(rs.rank(), weight_index);
  BigCount available = mode == SectionMode::End ? end_dim(rs, omega) : h0_dim(rs, omega);
  Verdict v = make_verdict(dim_X(rs), comarks(rs)[weight_index], std::move(available));
  v.full_conjecture = full_conjecture_check(rs);
  return v;
}

Verdict verify_colour(const SimpleType& t, std::size_t weight_index, SectionMode mode) {
  return verify_colour(build_root_system(t), weight_index, mode);
}

NefVerdict verify_nef(const SemisimpleData& data, const NefDivisor& divisor) {
  NefVerdict out;
  const auto& systems = data.factors();

  std::int64_t n = 0;
  bool full = true;
  for (const auto& rs : systems) {
    n += dim_X(rs);
    full = full && full_conjecture_check(rs);
  }

  out.trivial = divisor.is_zero();
  out.structural_pass = true;
  std::size_t supported = 0;
  for (std::size_t f = 0; f < systems.size(); ++f) {
    if (divisor.supported_on(f)) ++supported;
    const auto& k = divisor.coeffs()[f];
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] <= 0) continue;
      ColourCheck cc{f, i, verify_colour(systems[f], i, SectionMode::End)};
      out.structural_pass = out.structural_pass && cc.verdict.pass;
      out.colours.push_back(std::move(cc));
    }
  }
  out.factor_supported = !out.trivial && supported < systems.size();

  out.selected_factor = select_curve_factor(data, divisor);
  const std::int64_t degree = root_curve_degree(data, divisor, out.selected_factor);
  out.direct = make_verdict(n, degree, h0_product(data, divisor));
  out.direct.full_conjecture = full;
  out.degenerate = degree == 0;
  if (out.degenerate) out.direct.pass = false;
  return out;
}

NefVerdict verify_nef(const SemisimpleType& t, const NefDivisor& divisor) {
  return verify_nef(SemisimpleData(t), divisor);
}

}  // namespace wondercheck
