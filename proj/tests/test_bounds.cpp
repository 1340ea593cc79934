#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wondercheck/bounds.hpp"
#include "wondercheck/error.hpp"
#include "wondercheck/repdim.hpp"

using namespace wondercheck;

namespace {

SimpleType T(const char* s) { return SimpleType::parse(s); }

std::size_t index_with_comark(const SimpleType& t, std::int64_t c) {
  const auto cm = oracle::comarks(cartan_matrix(t));
  for (std::size_t i = 0; i < cm.size(); ++i)
    if (cm[i] == c) return i;
  FAIL("no weight with that comark");
  return 0;
}

}  // namespace

TEST_CASE("monomial_count") {
  CHECK(monomial_count(7, 0) == 1);
  CHECK(monomial_count(248, 0) == 1);
  CHECK(monomial_count(3, 2) == 10);
  CHECK(monomial_count(248, 3) == oracle::pascal(251, 3));
  CHECK(monomial_count(248, 3) == 2604125);
  CHECK(monomial_count(0, 5) == 1);
  for (std::int64_t n = 0; n <= 6; ++n)
    for (std::int64_t e = 0; e <= 6; ++e) CHECK(monomial_count(n, e) == oracle::monomials_up_to(n, e));
  CHECK_THROWS_AS(monomial_count(-1, 2), Error);
  CHECK_THROWS_AS(monomial_count(2, -1), Error);
}

TEST_CASE("liouville_bound") {
  CHECK(liouville_bound(1, 1) == 0);
  CHECK(liouville_bound(5, 1) == 0);
  CHECK(liouville_bound(1, 3) == 2);
  CHECK(liouville_bound(6, 16) == 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 12);
    const BigInt h0 = 1 + BigInt(rng() % 5000);
    CAPTURE(n);
    CHECK(liouville_bound(n, h0) == oracle::liouville_linear(n, h0));
  }
  // Defining property on large inputs.
  const auto e8 = build_root_system(T("E8"));
  for (std::size_t i = 0; i < 8; ++i) {
    const BigInt h0 = end_dim(e8, DominantWeight::fundamental(8, i));
    const std::int64_t d = liouville_bound(248, h0);
    CHECK(h0 > oracle::pascal(248 + d - 1, 248));
    CHECK_FALSE(h0 > oracle::pascal(248 + d, 248));
  }
  CHECK(liouville_bound(1, BigInt(1) << 70) >= (std::int64_t{1} << 62) - 1);
  CHECK_THROWS_AS(liouville_bound(0, 5), Error);
  CHECK_THROWS_AS(liouville_bound(3, 0), Error);
}

TEST_CASE("liouville_bound is monotone in h0") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 300);
    const BigInt a = 1 + BigInt(rng() % 1000000000);
    const BigInt b = a + BigInt(rng() % 1000000000);
    CHECK(liouville_bound(n, a) <= liouville_bound(n, b));
  }
}

TEST_CASE("table and header binomials") {
  CHECK(table_binomial_value(133, 3) == 8911);
  CHECK(table_binomial_value(133, 3) == oracle::pascal(134, 2));
  CHECK(table_binomial_value(248, 5) == 161455750);
  CHECK(table_binomial(T("E7"), index_with_comark(T("E7"), 3)) == 8911);
  CHECK(table_binomial(T("E8"), index_with_comark(T("E8"), 5)) == 161455750);
  for (const auto& t : all_simple_types()) {
    const auto cm = oracle::comarks(cartan_matrix(t));
    for (std::size_t i = 0; i < cm.size(); ++i) {
      if (cm[i] == 1) CHECK(table_binomial(t, i) == 1);
    }
  }
  CHECK(header_binomial_value(133, 3) == oracle::pascal(135, 133));
  CHECK(header_binomial_value(133, 3) != table_binomial_value(133, 3));
}

TEST_CASE("verify_colour on type A") {
  for (int n = 1; n <= 12; ++n) {
    const SimpleType t(Family::A, n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      const auto v = verify_colour(t, i);
      CHECK(v.pass);
      CHECK(v.curve_constant == 1);
      CHECK(v.required_count == 1);
      CHECK(v.full_conjecture);
    }
  }
}

TEST_CASE("verify_colour on E7 and E8") {
  const auto e7 = T("E7");
  const auto i4 = index_with_comark(e7, 4);
  const auto v = verify_colour(e7, i4);
  CHECK(v.curve_constant == 4);
  CHECK(v.required_count == 410040);
  CHECK(v.required_count == oracle::pascal(136, 3));
  const auto rs7 = build_root_system(e7);
  CHECK(v.available_sections == end_dim(rs7, DominantWeight::fundamental(7, i4)));
  CHECK(v.pass);

  const auto e8 = T("E8");
  const auto i6 = index_with_comark(e8, 6);
  const auto w = verify_colour(e8, i6);
  CHECK(w.curve_constant == 6);
  CHECK(w.pass);
  CHECK(w.available_sections > w.required_count);
  CHECK(w.available_sections > BigInt(8137369800LL));
  CHECK_FALSE(w.full_conjecture);
}

TEST_CASE("h0 mode never lowers the bound") {
  for (const auto& t : all_simple_types(8)) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(t.rank()); ++i) {
      const auto end = verify_colour(t, i, SectionMode::End);
      const auto h0 = verify_colour(t, i, SectionMode::H0);
      CHECK(h0.available_sections >= end.available_sections);
      CHECK(h0.dense_lower_bound >= end.dense_lower_bound);
      CHECK(h0.curve_constant == end.curve_constant);
    }
  }
}

TEST_CASE("full_conjecture_check") {
  for (int n = 1; n <= 12; ++n) CHECK(full_conjecture_check(SimpleType(Family::A, n)));
  for (int n = 2; n <= 12; ++n) CHECK(full_conjecture_check(SimpleType(Family::C, n)));
  for (int n = 3; n <= 12; ++n) CHECK_FALSE(full_conjecture_check(SimpleType(Family::B, n)));
  for (int n = 4; n <= 12; ++n) CHECK_FALSE(full_conjecture_check(SimpleType(Family::D, n)));
  for (const auto& t : exceptional_types()) CHECK_FALSE(full_conjecture_check(t));
  // B2 is C2 with its simple roots swapped.
  CHECK(full_conjecture_check(T("B2")));
}

TEST_CASE("verify_nef") {
  const SemisimpleType e6(T("E6"));
  const auto zero = verify_nef(e6, NefDivisor::zero(e6));
  CHECK(zero.trivial);
  CHECK(zero.degenerate);
  CHECK(zero.direct.curve_constant == 0);
  CHECK_FALSE(zero.direct.pass);

  const auto ones = verify_nef(e6, NefDivisor::from_flat(e6, {1, 1, 1, 1, 1, 1}));
  CHECK(ones.structural_pass);
  CHECK(ones.colours.size() == 6);
  bool each = true;
  for (std::size_t i = 0; i < 6; ++i) each = each && verify_colour(T("E6"), i).pass;
  CHECK(each);

  const auto a1a1 = SemisimpleType::parse("A1xA1");
  const auto both = verify_nef(a1a1, NefDivisor::from_flat(a1a1, {1, 1}));
  CHECK(both.direct.available_sections == 16);
  CHECK(both.direct.curve_constant == 1);
  CHECK(both.direct.dense_lower_bound >= 1);
  CHECK(both.direct.dense_lower_bound == oracle::liouville_linear(6, 16));
  CHECK(both.direct.pass);
  CHECK_FALSE(both.factor_supported);

  const auto one = verify_nef(a1a1, NefDivisor::from_flat(a1a1, {1, 0}));
  CHECK(one.factor_supported);
  CHECK(one.selected_factor == 0);
  CHECK(one.direct.curve_constant == 1);

  const SemisimpleType a2(T("A2"));
  const auto a2v = verify_nef(a2, NefDivisor::from_flat(a2, {1, 1}));
  CHECK(a2v.direct.curve_constant == 2);
  CHECK(a2v.direct.pass);
  CHECK(a2v.structural_pass);
}
