#include "wondercheck/printed.hpp"

#include "wondercheck/error.hpp"

namespace wondercheck::printed {

namespace {

std::vector<BigInt> to_big(const std::vector<const char*>& values) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (const char* v : values) out.emplace_back(v);
  return out;
}

std::int64_t classical_dim_x(Family f, std::int64_t n) {
  switch (f) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    default: break;
  }
  throw Error(ErrorKind::InvalidType, "not a classical family");
}

}  // namespace

IntVector comarks(const SimpleType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  switch (t.family()) {
    case Family::A:
    case Family::C: return IntVector(n, 1);
    case Family::B: {
      IntVector v(n, 2);
      v.front() = 1;
      v.back() = 1;
      return v;
    }
    case Family::D: {
      IntVector v(n, 2);
      v[0] = 1;
      v[n - 2] = 1;
      v[n - 1] = 1;
      return v;
    }
    case Family::E:
      if (n == 6) return {1, 2, 3, 2, 1, 2};
      if (n == 7) return {1, 2, 3, 4, 3, 2, 2};
      return {2, 3, 4, 5, 6, 4, 2, 3};
    case Family::F: return {2, 3, 2, 1};
    case Family::G: return {1, 2};
  }
  return {};
}

std::vector<BigInt> curve_binomials(const SimpleType& t) {
  const auto n = static_cast<std::int64_t>(t.rank());
  switch (t.family()) {
    case Family::A:
    case Family::C: return std::vector<BigInt>(static_cast<std::size_t>(n), 1);
    case Family::B:
    case Family::D: {
      // 1, dim X, ..., dim X, 1 (and a second trailing 1 for D_n)
      std::vector<BigInt> v;
      for (std::int64_t c : comarks(t)) v.emplace_back(c == 1 ? 1 : classical_dim_x(t.family(), n));
      return v;
    }
    case Family::E:
      if (n == 6) return to_big({"1", "78", "3081", "78", "1", "78"});
      if (n == 7) return to_big({"1", "133", "8911", "400995", "8911", "133", "133"});
      return to_big({"248", "30876", "2573000", "161455750", "8137369800", "2573000", "248", "30876"});
    case Family::F: return to_big({"52", "1378", "52", "1"});
    case Family::G: return to_big({"1", "14"});
  }
  return {};
}

std::int64_t dim_x(const SimpleType& t) {
  switch (t.family()) {
    case Family::E: return t.rank() == 6 ? 78 : t.rank() == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
    default: return classical_dim_x(t.family(), t.rank());
  }
}

std::vector<BigInt> fundamental_dims(const SimpleType& t) {
  const auto n = static_cast<std::int64_t>(t.rank());
  std::vector<BigInt> v;
  switch (t.family()) {
    case Family::A:
      for (std::int64_t k = 1; k <= n; ++k) v.push_back(binomial(n + 1, k));
      return v;
    case Family::B:
      for (std::int64_t k = 1; k <= n; ++k) v.push_back(binomial(2 * n + 1, k));
      return v;
    case Family::C:
      for (std::int64_t k = 1; k <= n; ++k) v.push_back(binomial(2 * n, k) - binomial(2 * n, k - 2));
      return v;
    case Family::D:
      for (std::int64_t k = 1; k <= n - 1; ++k) v.push_back(binomial(2 * n, k));
      v.push_back(binomial(2 * n, n) / 2);
      return v;
    case Family::E:
      if (n == 6) return to_big({"27", "351", "2925", "352", "27", "78"});
      if (n == 7) return to_big({"133", "8645", "365750", "27664", "1539", "56", "912"});
      return to_big({"3875", "6696000", "6899054264", "146325270", "2450240", "30380", "248", "147250"});
    case Family::F: return to_big({"26", "52", "273", "1274"});
    case Family::G: return to_big({"7", "14"});
  }
  return v;
}

std::string comark_form(Family f) {
  switch (f) {
    case Family::A:
    case Family::C: return "1, ..., 1";
    case Family::B: return "1, 2, ..., 2, 1";
    case Family::D: return "1, 2, ..., 2, 1, 1";
    default: return "";
  }
}

std::string curve_binomial_form(Family f) {
  switch (f) {
    case Family::A:
    case Family::C: return "1, ..., 1";
    case Family::B: return "1, n(2n+1), ..., n(2n+1), 1";
    case Family::D: return "1, n(2n-1), ..., n(2n-1), 1, 1";
    default: return "";
  }
}

std::string dim_x_form(Family f) {
  switch (f) {
    case Family::A: return "n(n+2)";
    case Family::B:
    case Family::C: return "n(2n+1)";
    case Family::D: return "n(2n-1)";
    default: return "";
  }
}

std::string fundamental_dims_form(Family f) {
  switch (f) {
    case Family::A: return "(n+1)^2, ..., C(n+1,k)^2, ..., (n+1)^2";
    case Family::B: return "(2n+1)^2, ..., C(2n+1,k)^2, ..., C(2n+1,n)^2";
    case Family::C: return "(2n)^2, ..., (C(2n,k) - C(2n,k-2))^2, ..., (C(2n,n) - C(2n,n-2))^2";
    case Family::D: return "(2n)^2, ..., C(2n,k)^2, ..., C(2n,n-1)^2, (C(2n,n)/2)^2";
    default: return "";
  }
}

}  // namespace wondercheck::printed
