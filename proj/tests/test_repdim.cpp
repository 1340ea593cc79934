#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "wondercheck/error.hpp"
#include "wondercheck/repdim.hpp"
#include "wondercheck/wonderful.hpp"

using namespace wondercheck;

namespace {

SimpleType T(const char* s) { return SimpleType::parse(s); }

DominantWeight W(IntVector v) { return DominantWeight(std::move(v)); }

std::vector<BigInt> fundamental_dims(const RootSystem& rs) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < rs.rank(); ++i) out.push_back(weyl_dim(rs, DominantWeight::fundamental(rs.rank(), i)));
  return out;
}

std::vector<BigInt> big(std::initializer_list<const char*> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("weyl_dim basics") {
  for (const auto& t : all_simple_types()) {
    const auto rs = build_root_system(t);
    CHECK(weyl_dim(rs, DominantWeight::zero(rs.rank())) == 1);
    // Adjoint representation: highest root as a weight.
    const DominantWeight theta(rs.root_as_weight(rs.highest_root()).coords);
    CHECK(weyl_dim(rs, theta) == dim_X(rs));
  }
  CHECK(weyl_dim(build_root_system(T("E6")), DominantWeight::fundamental(6, 0)) == 27);
  CHECK_THROWS_AS(weyl_dim(build_root_system(T("A2")), W({1, 0, 0})), Error);
}

TEST_CASE("fundamental dimensions against closed forms") {
  for (int n = 1; n <= 12; ++n) {
    const auto rs = build_root_system(SimpleType(Family::A, n));
    for (int k = 1; k <= n; ++k) {
      CHECK(weyl_dim(rs, DominantWeight::fundamental(static_cast<std::size_t>(n), static_cast<std::size_t>(k - 1))) ==
            oracle::pascal(n + 1, k));
    }
  }
  for (int n = 2; n <= 12; ++n) {
    const auto b = fundamental_dims(build_root_system(SimpleType(Family::B, n)));
    const auto c = fundamental_dims(build_root_system(SimpleType(Family::C, n)));
    for (int k = 1; k < n; ++k) CHECK(b[static_cast<std::size_t>(k - 1)] == oracle::pascal(2 * n + 1, k));
    CHECK(b.back() == BigInt(1) << n);
    for (int k = 1; k <= n; ++k)
      CHECK(c[static_cast<std::size_t>(k - 1)] == oracle::pascal(2 * n, k) - oracle::pascal(2 * n, k - 2));
  }
  for (int n = 4; n <= 12; ++n) {
    const auto d = fundamental_dims(build_root_system(SimpleType(Family::D, n)));
    for (int k = 1; k <= n - 2; ++k) CHECK(d[static_cast<std::size_t>(k - 1)] == oracle::pascal(2 * n, k));
    CHECK(d[static_cast<std::size_t>(n - 2)] == BigInt(1) << (n - 1));
    CHECK(d[static_cast<std::size_t>(n - 1)] == BigInt(1) << (n - 1));
  }
}

TEST_CASE("exceptional fundamental dimensions") {
  CHECK(fundamental_dims(build_root_system(T("G2"))) == big({"7", "14"}));
  CHECK(fundamental_dims(build_root_system(T("F4"))) == big({"52", "1274", "273", "26"}));
  CHECK(fundamental_dims(build_root_system(T("E6"))) == big({"27", "78", "351", "2925", "351", "27"}));
  CHECK(fundamental_dims(build_root_system(T("E7"))) ==
        big({"133", "912", "8645", "365750", "27664", "1539", "56"}));
  CHECK(fundamental_dims(build_root_system(T("E8"))) ==
        big({"3875", "147250", "6696000", "6899079264", "146325270", "2450240", "30380", "248"}));
}

TEST_CASE("weyl_dim agrees with the rational symmetric-form product") {
  std::mt19937 rng(20251015);
  for (const auto& t : all_simple_types(7)) {
    CAPTURE(t.label());
    const auto rs = build_root_system(t);
    std::uniform_int_distribution<std::int64_t> coord(0, 3);
    for (int trial = 0; trial < 5; ++trial) {
      IntVector lam(rs.rank());
      for (auto& c : lam) c = coord(rng);
      CHECK(BigRational(weyl_dim(rs, W(lam))) == oracle::weyl_dim_rational(rs.cartan(), lam));
    }
  }
}

TEST_CASE("end_dim") {
  const auto g2 = build_root_system(T("G2"));
  CHECK(end_dim(g2, DominantWeight::fundamental(2, 0)) == 49);
  CHECK(end_dim(g2, DominantWeight::fundamental(2, 1)) == 196);
  CHECK(end_dim(g2, DominantWeight::zero(2)) == 1);

  const auto e7 = build_root_system(T("E7"));
  std::vector<BigInt> got;
  for (std::size_t i = 0; i < 7; ++i) got.push_back(end_dim(e7, DominantWeight::fundamental(7, i)));
  std::vector<BigInt> want;
  for (const char* b : {"133", "8645", "365750", "27664", "1539", "56", "912"}) want.push_back(BigInt(b) * BigInt(b));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("weyl_dim grows when a fundamental weight is added") {
  std::mt19937 rng(7);
  for (const auto& t : all_simple_types(6)) {
    const auto rs = build_root_system(t);
    std::uniform_int_distribution<std::int64_t> coord(0, 2);
    for (int trial = 0; trial < 4; ++trial) {
      IntVector lam(rs.rank());
      for (auto& c : lam) c = coord(rng);
      const BigInt base = weyl_dim(rs, W(lam));
      CHECK(base >= 1);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        IntVector up = lam;
        ++up[i];
        CHECK(weyl_dim(rs, W(up)) > base);
      }
    }
  }
}

TEST_CASE("dominant_weights_below examples") {
  const auto a1 = build_root_system(T("A1"));
  const auto a2 = build_root_system(T("A2"));
  CHECK(dominant_weights_below(a1, W({0})) == std::vector<DominantWeight>{W({0})});
  CHECK(dominant_weights_below(a1, W({2})) == std::vector<DominantWeight>{W({0}), W({2})});
  CHECK(dominant_weights_below(a2, W({1, 1})) == std::vector<DominantWeight>{W({0, 0}), W({1, 1})});
  CHECK(dominant_weights_below(a2, W({1, 0})) == std::vector<DominantWeight>{W({1, 0})});
  for (int n = 1; n <= 12; ++n) {
    const auto rs = build_root_system(SimpleType(Family::A, n));
    CHECK(dominant_weights_below(rs, DominantWeight::fundamental(rs.rank(), 0)).size() == 1);
  }
}

TEST_CASE("dominant_weights_below matches the box search") {
  std::mt19937 rng(99);
  for (const auto& t : all_simple_types(4)) {
    CAPTURE(t.label());
    const auto rs = build_root_system(t);
    std::vector<IntVector> cases;
    for (std::size_t i = 0; i < rs.rank(); ++i) cases.push_back(DominantWeight::fundamental(rs.rank(), i).coords());
    std::uniform_int_distribution<std::int64_t> coord(0, 2);
    for (int trial = 0; trial < 6; ++trial) {
      IntVector lam(rs.rank());
      for (auto& c : lam) c = coord(rng);
      cases.push_back(lam);
    }
    for (const auto& lam : cases) {
      if (oracle::box_volume(oracle::box_bounds(rs.cartan().entries, lam)) > 2'000'000) continue;
      CAPTURE(format_weight(lam));
      std::vector<IntVector> got;
      for (const auto& w : dominant_weights_below(rs, W(lam))) got.push_back(w.coords());
      CHECK(got == oracle::dominant_below_box(rs.cartan().entries, lam));
    }
  }
  // Small boxes on the larger exceptional types.
  for (const char* name : {"E6", "E7", "E8"}) {
    const auto rs = build_root_system(T(name));
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const auto lam = DominantWeight::fundamental(rs.rank(), i).coords();
      if (oracle::box_volume(oracle::box_bounds(rs.cartan().entries, lam)) > 3'000'000) continue;
      CAPTURE(name);
      CAPTURE(i);
      std::vector<IntVector> got;
      for (const auto& w : dominant_weights_below(rs, W(lam))) got.push_back(w.coords());
      CHECK(got == oracle::dominant_below_box(rs.cartan().entries, lam));
    }
  }
}

TEST_CASE("dominant_weights_below is closed downward and sorted") {
  for (const auto& t : all_simple_types(6)) {
    const auto rs = build_root_system(t);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const auto lam = DominantWeight::fundamental(rs.rank(), i);
      const auto below = dominant_weights_below(rs, lam);
      CHECK(std::is_sorted(below.begin(), below.end()));
      CHECK(std::find(below.begin(), below.end(), lam) != below.end());
      for (const auto& eta : below) {
        CHECK(dominance_leq(rs, eta.as_weight(), lam.as_weight()));
        for (const auto& zeta : dominant_weights_below(rs, eta)) {
          CHECK(std::find(below.begin(), below.end(), zeta) != below.end());
        }
      }
    }
  }
}

TEST_CASE("h0_dim") {
  const auto a1 = build_root_system(T("A1"));
  for (std::int64_t m = 0; m <= 20; ++m) {
    CHECK(h0_dim(a1, W({m})) == oracle::pascal(m + 3, 3));
    BigInt sum = 0;
    for (std::int64_t k = 0; 2 * k <= m; ++k) sum += (m - 2 * k + 1) * (m - 2 * k + 1);
    CHECK(h0_dim(a1, W({m})) == sum);
  }
  for (int n = 1; n <= 12; ++n) {
    const auto rs = build_root_system(SimpleType(Family::A, n));
    CHECK(h0_dim(rs, DominantWeight::fundamental(rs.rank(), 0)) == (n + 1) * (n + 1));
  }
  CHECK(h0_dim(a1, W({0})) == 1);
}

TEST_CASE("h0_dim equals end_dim exactly for singleton dominance sets") {
  std::mt19937 rng(3);
  for (const auto& t : all_simple_types(5)) {
    const auto rs = build_root_system(t);
    std::uniform_int_distribution<std::int64_t> coord(0, 2);
    for (int trial = 0; trial < 5; ++trial) {
      IntVector lam(rs.rank());
      for (auto& c : lam) c = coord(rng);
      const auto below = dominant_weights_below(rs, W(lam));
      const BigInt h0 = h0_dim(rs, W(lam));
      const BigInt end = end_dim(rs, W(lam));
      CHECK(h0 >= end);
      CHECK((h0 == end) == (below.size() == 1));
    }
  }
}

TEST_CASE("results do not depend on thread scheduling") {
  const auto e8 = build_root_system(T("E8"));
  std::vector<BigInt> serial(8), parallel(8);
  for (std::size_t i = 0; i < 8; ++i) serial[i] = h0_dim(e8, DominantWeight::fundamental(8, i));
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < 8; ++i)
      pool.emplace_back([&, i] { parallel[i] = h0_dim(e8, DominantWeight::fundamental(8, i)); });
  }
  CHECK(serial == parallel);
}
