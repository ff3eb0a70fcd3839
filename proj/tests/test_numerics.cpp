#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "urnmax/numerics.hpp"
#include "urnmax/types.hpp"

using namespace urnmax;
using namespace urnmax::numerics;

namespace {

// H(x) = sum_k x / (k (k + x)); the tail past K is x/K - x^2/(2K^2) + O(K^-3).
double harmonic_partial(double x) {
  const long K = 2000000;
  CompensatedSum s;
  for (long k = K; k >= 1; --k) s.add(x / (static_cast<double>(k) * (k + x)));
  const double Kd = K;
  return s.value() + x / Kd - x * (x + 1.0) / (2.0 * Kd * Kd);
}

double binom_direct(int n, double p, int k) {
  double total = 0.0;
  for (int j = 0; j <= k; ++j) {
    total += std::exp(std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) + j * std::log(p) +
                      (n - j) * std::log1p(-p));
  }
  return total;
}

}  // namespace

TEST_CASE("log gamma and beta") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-15));
  CHECK(beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(beta(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(beta(0.5, 0.5) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
}

TEST_CASE("harmonic numbers at rationals") {
  CHECK(harmonic_H(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(harmonic_H(1, 2) == doctest::Approx(2.0 - 2.0 * std::numbers::ln2).epsilon(1e-14));
  CHECK(harmonic_H(7, 1) == doctest::Approx(363.0 / 140.0).epsilon(1e-14));
  CHECK(harmonic_H(0, 5) == 0.0);
  for (auto [n, d] : {std::pair{2, 3}, {1, 3}, {3, 4}, {5, 7}, {19, 20}, {7, 3}, {11, 4}}) {
    const double x = static_cast<double>(n) / d;
    const double oracle = harmonic_partial(x);
    CHECK(std::abs(harmonic_H(n, d) - oracle) < 1e-10);
    CHECK(std::abs(harmonic_H(x) - oracle) < 1e-10);
  }
}

TEST_CASE("binomial distribution helpers") {
  CHECK(binom_cdf(2, 0.5, 0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(binom_cdf(3, 0.5, 3) == 1.0);
  CHECK(binom_cdf(7, 0.25, 2) == doctest::Approx(binom_direct(7, 0.25, 2)).epsilon(1e-14));
  for (int n : {1, 5, 12, 40}) {
    for (double p : {0.1, 1.0 / 3.0, 0.5, 0.9}) {
      for (int k = -1; k <= n; ++k) {
        const double cdf = binom_cdf(n, p, k);
        CHECK(std::abs(cdf - (k < 0 ? 0.0 : binom_direct(n, p, k))) < 1e-13);
        CHECK(std::abs(cdf + binom_sf(n, p, k) - 1.0) < 1e-14);
      }
    }
  }
  CHECK(binom_pmf(4, 0.5, 1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(beta_density(2.0, 3.0, 0.25) == doctest::Approx(12.0 * 0.25 * 0.75 * 0.75).epsilon(1e-13));
}

TEST_CASE("polynomial roots") {
  SUBCASE("p z^2 - z + q factors as (z - 1)(p z - q)") {
    const double p = 1.0 / 3.0;
    const RootSet rs = poly_roots(trinomial_coeffs(p, 1, 2));
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.on_circle.size() == 1);
    REQUIRE(rs.outside.size() == 1);
    CHECK(std::abs(rs.roots[rs.outside[0]] - 2.0) < 1e-12);
    CHECK(rs.max_residual < 1e-10);
  }
  SUBCASE("p z^3 - z + q has one root on the circle and two outside") {
    const RootSet rs = trinomial_root_set(0.25, 1, 3);
    CHECK(rs.inside.size() == 0);
    CHECK(rs.on_circle.size() == 1);
    CHECK(rs.outside.size() == 2);
    const auto c = trinomial_coeffs(0.25, 1, 3);
    for (const auto& z : rs.roots) CHECK(std::abs(poly_eval(c, z)) < 1e-10);
    // deflated quadratic z^2/4 + z/4 - 3/4 has roots (-1 +- sqrt 13)/2
    std::vector<double> outs;
    for (auto i : rs.outside) outs.push_back(rs.roots[i].real());
    std::sort(outs.begin(), outs.end());
    CHECK(outs[0] == doctest::Approx((-1.0 - std::sqrt(13.0)) / 2.0).epsilon(1e-12));
    CHECK(outs[1] == doctest::Approx((-1.0 + std::sqrt(13.0)) / 2.0).epsilon(1e-12));
  }
  SUBCASE("z^2 + 1 sits on the circle") {
    const std::vector<double> c{1.0, 0.0, 1.0};
    const RootSet rs = poly_roots(c);
    CHECK(rs.on_circle.size() == 2);
    for (const auto& z : rs.roots) CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-12);
  }
  SUBCASE("partition counts for several trinomials") {
    for (auto [s, t] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 7}, {5, 8}}) {
      for (double frac : {0.1, 0.5, 0.9}) {
        const double p = frac * s / t;
        const RootSet rs = trinomial_root_set(p, s, t);
        CHECK(rs.inside.size() == static_cast<std::size_t>(s - 1));
        CHECK(rs.on_circle.size() == 1);
        CHECK(rs.outside.size() == static_cast<std::size_t>(t - s));
      }
    }
  }
}

TEST_CASE("series extrapolation") {
  // sum 1/(n+1)^2 = pi^2/6 with partial-sum error ~ 1/N
  long n = 0;
  const auto res = extrapolated_series([&]() { ++n; return 1.0 / (static_cast<double>(n) * n); }, 64, 6);
  CHECK(std::abs(res.value - std::numbers::pi * std::numbers::pi / 6.0) < 1e-12);
  CHECK(res.error < 1e-9);
}

TEST_CASE("quadrature") {
  const auto i1 = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(std::abs(i1.value - (std::exp(1.0) - 1.0)) < 1e-14);
  // E[p] under Beta(1/2, 3/2) restricted to (0,1) is 1/4
  const auto i2 = beta_mixture([](double p) { return p; }, 0.5, 1.5, 0.0, 1.0, 1e-13);
  CHECK(std::abs(i2.value - 0.25) < 1e-11);
  // partial range of Beta(2,3): P(p <= 1/2) = 11/16
  const auto i3 = beta_mixture([](double) { return 1.0; }, 2.0, 3.0, 0.0, 0.5);
  CHECK(std::abs(i3.value - 11.0 / 16.0) < 1e-13);
}
