#include "wondercheck/bigint.hpp"

#include <cctype>
#include <cmath>

#include "wondercheck/error.hpp"

namespace wondercheck {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NonDominant: return "NonDominant";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::BadArgs: return "BadArgs";
    case ErrorKind::NotNef: return "NotNef";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidPlace: return "InvalidPlace";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::NotConverging: return "NotConverging";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // Each partial product is C(n-k+i, i), so the division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

// GCC 11 misreads the limb copy inside cpp_int's shift as an overflow.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
#endif
double log_big(const BigInt& value) {
  if (value <= 0) return -HUGE_VAL;
  const auto bits = static_cast<std::int64_t>(boost::multiprecision::msb(value));
  if (bits < 900) return std::log(value.convert_to<double>());
  // Keep the leading 63 bits; the dropped tail only perturbs the last ulp.
  const std::int64_t shift = bits - 62;
  BigInt top = value;
  top >>= static_cast<unsigned>(shift);
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic pop
#endif

double log_big(const BigRational& value) {
  return log_big(boost::multiprecision::numerator(value)) -
         log_big(boost::multiprecision::denominator(value));
}

BigInt parse_big(const std::string& text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw Error(ErrorKind::ParseError, "empty integer '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::ParseError, "not an integer: '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace wondercheck
