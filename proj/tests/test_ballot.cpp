#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>

#include "urnmax/ballot.hpp"
#include "urnmax/walk_max.hpp"

using namespace urnmax;
using namespace urnmax::ballot;

namespace {

// Paths of n right steps and n(t-1)+a up steps, each prefix on or below y = a + x(t-1).
// A set bit is a right step.
long enumerate_below(int n, int t, int a) {
  const int up = n * (t - 1) + a;
  const int len = n + up;
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    if (std::popcount(mask) != n) continue;
    int x = 0, y = 0;
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      if ((mask >> i) & 1u) ++x; else ++y;
      ok = y <= a + x * (t - 1);
    }
    count += ok ? 1 : 0;
  }
  return count;
}

// Paths to (k, n) with every point after the origin strictly above y = t x.
long enumerate_barbier(int k, int n, int t) {
  const int len = n + k;
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    if (std::popcount(mask) != k) continue;
    int x = 0, y = 0;
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      if ((mask >> i) & 1u) ++x; else ++y;
      ok = y > t * x;
    }
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("ballot numbers") {
  CHECK(ballot_count(0, 3, 2) == 1);
  CHECK(ballot_count(3, 2, 0) == 5);
  CHECK(ballot_count(2, 3, 1) == 7);
  CHECK(ballot_count(4, 3, 0) == 55);
  CHECK(dp_paths_below(3, 2, 0) == 5);
  CHECK(enumerate_below(3, 2, 0) == 5);
  for (int t = 2; t <= 4; ++t)
    for (int a = 0; a <= 3; ++a)
      for (int n = 0; n * t + a <= 18; ++n) CHECK(ballot_count(n, t, a) == enumerate_below(n, t, a));
  for (int t = 2; t <= 5; ++t)
    for (int a = 0; a <= 4; ++a)
      for (int n = 0; n <= 12; ++n) CHECK(ballot_count(n, t, a) == dp_paths_below(n, t, a));
}

TEST_CASE("Barbier counts") {
  CHECK(barbier_count(1, 3, 2) == 1);
  CHECK(barbier_count(1, 4, 2) == 2);
  CHECK(barbier_count(2, 7, 2) == 12);
  CHECK(barbier_dp_count(2, 7, 2) == 12);
  for (int t = 1 + 1; t <= 5; ++t)
    for (int k = 0; k <= 8; ++k)
      for (int n = t * k + 1; n + k <= 16; ++n) {
        CHECK(barbier_count(k, n, t) == enumerate_barbier(k, n, t));
        CHECK(barbier_dp_count(k, n, t) == barbier_count(k, n, t));
      }
  CHECK_THROWS_AS(barbier_count(1, 2, 2), DomainError);
}

TEST_CASE("finite-horizon brackets") {
  SUBCASE("classical values") {
    const auto b1 = finite_horizon_sup_cdf(0, 0, 1.0 / 3.0, Threshold(1, 2), 2000);
    CHECK(b1.lower <= 0.5 + 1e-12);
    CHECK(b1.upper >= 0.5 - 1e-12);
    CHECK(b1.upper - b1.lower < 1e-6);
    const auto b2 = finite_horizon_sup_cdf(0, 0, 0.25, Threshold(1, 3), 4000);
    CHECK(b2.lower <= 1.0 / 3.0 + 1e-12);
    CHECK(b2.upper >= 1.0 / 3.0 - 1e-12);
    CHECK(b2.upper - b2.lower < 1e-6);
  }
  SUBCASE("width shrinks with the horizon") {
    double last = 2.0;
    for (int N : {10, 40, 160, 640}) {
      const auto b = finite_horizon_sup_cdf(1, 2, 0.3, Threshold(2, 5), N);
      CHECK(b.upper - b.lower <= last + 1e-15);
      last = b.upper - b.lower;
    }
  }
  SUBCASE("no tail bound at or above the drift") {
    const auto b = finite_horizon_sup_cdf(0, 0, 0.5, Threshold(1, 2), 100);
    CHECK_FALSE(b.tail_bound);
    CHECK(b.lower == 0.0);
  }
  SUBCASE("unreachable violation within the horizon") {
    // starting 10 units below the barrier with steps of +1: needs 10 steps
    const auto b = finite_horizon_level_cdf(1, 2, 10, 0.3, 5);
    CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("finite-horizon urn probabilities") {
  // Z_0 = 1/2, first draw red gives 2/3 > 1/2: P(max_{n<=1} Z_n <= 1/2) = 1/2
  CHECK(finite_horizon_urn_cdf({1, 1, 1}, Threshold(1, 2), 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(finite_horizon_urn_cdf({2, 1, 1}, Threshold(1, 2), 3) == 0.0);
  // two draws, x = 2/3: paths bb, br, rb stay <= 2/3 (rb ends at 2/4); rr reaches 3/4
  CHECK(finite_horizon_urn_cdf({1, 1, 1}, Threshold(2, 3), 2) == doctest::Approx(1.0 - 1.0 / 3.0).epsilon(1e-15));
  // decreasing in the horizon
  double last = 1.0;
  for (int N : {1, 5, 25, 125}) {
    const double v = finite_horizon_urn_cdf({1, 2, 1}, Threshold(1, 2), N);
    CHECK(v <= last);
    last = v;
  }
}
