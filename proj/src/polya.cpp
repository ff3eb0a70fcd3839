#include "urnmax/polya.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "urnmax/numerics.hpp"
#include "urnmax/tree_fn.hpp"
#include "urnmax/walk_max.hpp"

namespace urnmax::urn {

namespace {

constexpr std::size_t kSeriesFirstCount = 256;
constexpr int kSeriesLevels = 8;

void check_t(int t) {
  if (t < 2) throw DomainError("threshold index t must be >= 2");
}

std::int64_t high_level(const UrnParams& u, int t) {
  return static_cast<std::int64_t>(u.b) * (t - 1) - u.r;
}

}  // namespace

ProbResult sup_tail_series(const UrnParams& u, int t) {
  u.validate();
  check_t(t);
  const std::int64_t m = high_level(u, t);
  if (m < 0) throw DomainError("sup_tail_series needs b(t-1) - r >= 0");
  const double a = static_cast<double>(m / u.d);
  const double rho = static_cast<double>(u.r) / u.d;
  const double beta = static_cast<double>(u.b) / u.d;
  const double td = t;

  // term_n = (a+1)/(n(t-1)+a+1) * C(nt+a, n) * B(n(t-1)+a+1+rho, n+beta) / B(rho, beta);
  // the binomial-times-Beta factor advances by a product of t-term ratios.
  double u_n = std::exp(numerics::log_beta(a + 1.0 + rho, beta) - numerics::log_beta(rho, beta));
  long n = 0;
  auto next = [&]() {
    const double nd = static_cast<double>(n);
    const double term = (a + 1.0) / (nd * (td - 1.0) + a + 1.0) * u_n;
    const double X = nd * (td - 1.0) + a + 1.0 + rho;
    const double Y = nd + beta;
    double ratio = Y / (nd + 1.0);
    for (int j = 0; j < t; ++j) ratio *= (nd * td + a + 1.0 + j) / (X + Y + j);
    for (int j = 0; j + 1 < t; ++j) ratio *= (X + j) / (nd * (td - 1.0) + a + 1.0 + j);
    u_n *= ratio;
    ++n;
    return term;
  };
  const numerics::Extrapolated sum = numerics::extrapolated_series(next, kSeriesFirstCount, kSeriesLevels);
  return ProbResult::make(sum.value, sum.error + 1e-13, Method::series);
}

ProbResult sup_tail_mixture(const UrnParams& u, int t) {
  u.validate();
  check_t(t);
  const std::int64_t m = high_level(u, t);
  if (m < 0) throw DomainError("sup_tail_mixture needs b(t-1) - r >= 0");
  const double power = static_cast<double>(m / u.d + 1);
  const double rho = static_cast<double>(u.r) / u.d;
  const double beta = static_cast<double>(u.b) / u.d;
  const double kink = (t - 1.0) / t;
  // R_t(p) = 1 on [(t-1)/t, 1); the kink is a quadrature breakpoint.
  const auto below = numerics::beta_mixture(
      [&](double p) { return std::pow(tree::tree_R(t, p), power); }, rho, beta, 0.0, kink, 1e-12);
  const double above = boost::math::ibetac(rho, beta, kink);
  return ProbResult::make(below.value + above, below.error + 1e-14, Method::quadrature);
}

ProbResult s11_cdf(int t) {
  check_t(t);
  const double value = (1.0 - 1.0 / t) * numerics::harmonic_H(t - 1, t);
  return ProbResult::make(value, 1e-14, Method::closed_form);
}

ProbResult s11_point_mass(int t) {
  check_t(t);
  const double td = t;
  const double value = (2.0 * td - 3.0) / td * numerics::harmonic_H(t - 1, t) -
                       (td - 2.0) / td * numerics::harmonic_H(t - 2, t) - (td - 2.0) / (td - 1.0);
  return ProbResult::make(value, 1e-13, Method::closed_form);
}

ProbResult q_minus(int t) {
  check_t(t);
  const double td = t;
  // term_n = (nt)!/(nt-n+1)! * ((n+1)(t-1))!/((n+1)t)!, term_0 = 1/t.
  double term = 1.0 / td;
  long n = 0;
  auto next = [&]() {
    const double nd = static_cast<double>(n);
    const double out = term;
    double ratio = 1.0;
    for (int j = 1; j <= t; ++j) ratio *= (nd * td + j) / ((nd + 1.0) * td + j);
    for (int j = 1; j < t; ++j) ratio *= ((nd + 1.0) * (td - 1.0) + j) / (nd * (td - 1.0) + 1.0 + j);
    term *= ratio;
    ++n;
    return out;
  };
  const numerics::Extrapolated sum = numerics::extrapolated_series(next, kSeriesFirstCount, kSeriesLevels);
  return ProbResult::make((td - 1.0) * sum.value, (td - 1.0) * sum.error + 1e-13, Method::series);
}

ProbResult s_1_tm1_cdf(int t) {
  check_t(t);
  if (t == 2) return ProbResult::make(1.0 - std::numbers::ln2, 1e-16, Method::closed_form);
  const double td = t;
  const double value = ((td - 1.0) * std::pow(1.0 - 1.0 / td, td - 2.0) - 1.0) / (td - 2.0);
  return ProbResult::make(value, 1e-14, Method::closed_form);
}

ProbResult s_1_tm1_quadrature(int t) {
  check_t(t);
  const double td = t;
  const auto integral = numerics::integrate(
      [&](double p) { return (td - 1.0) * (1.0 - p * td) * std::pow(1.0 - p, td - 3.0); }, 0.0,
      1.0 / td, 1e-14);
  return ProbResult::make(integral.value, integral.error, Method::quadrature);
}

ProbResult s_a_cdf(int a, int t) {
  check_t(t);
  if (a < 2) throw DomainError("s_a_cdf needs a >= 2");
  const int n = a * t - 1;
  const double p = 1.0 / t;
  const double value = numerics::binom_pmf(n, p, a) -
                       numerics::binom_sf(n, p, a) / (static_cast<double>(a) * (t - 1) - 1.0);
  return ProbResult::make(value, 1e-14, Method::closed_form);
}

ProbResult s_a_cdf_t2(int a) {
  if (a < 2) throw DomainError("s_a_cdf_t2 needs a >= 2");
  const double ad = a;
  const double central = numerics::binom_pmf(2 * a - 1, 0.5, a);
  const double value = (1.0 + 1.0 / (ad - 1.0)) * central - 1.0 / (2.0 * (ad - 1.0));
  return ProbResult::make(value, 1e-14, Method::closed_form);
}

ProbResult s_a_quadrature(int a, int t) {
  check_t(t);
  if (a < 2) throw DomainError("s_a_quadrature needs a >= 2");
  const double td = t;
  const auto integral = numerics::beta_mixture(
      [&](double p) { return (1.0 - p * td) / (1.0 - p); }, a, static_cast<double>(a) * (t - 1), 0.0,
      1.0 / td, 1e-14);
  return ProbResult::make(integral.value, integral.error, Method::quadrature);
}

Equalization equalization(int r, int b) {
  if (r < 1 || b < 1) throw DomainError("equalization needs r, b >= 1");
  Equalization out;
  if (b <= r) {
    out.value = ProbResult::make(1.0, 0.0, Method::closed_form);
    out.trivially_one = true;
    return out;
  }
  const double m = b - r;
  const auto below = numerics::beta_mixture([&](double p) { return std::pow(p / (1.0 - p), m); }, r, b,
                                            0.0, 0.5, 1e-14);
  out.mixture = below.value + boost::math::ibetac(static_cast<double>(r), static_cast<double>(b), 0.5);
  out.value = ProbResult::make(2.0 * numerics::binom_cdf(b + r - 1, 0.5, r - 1), 1e-14, Method::closed_form);
  return out;
}

namespace {

ProbResult mixed_level_cdf(const UrnParams& u, const Threshold& x, std::int64_t m) {
  u.validate();
  if (u.d != 1) throw DomainError("general_cdf is defined for d = 1 only");
  if (m < 0) return ProbResult::make(0.0, 0.0, Method::closed_form);
  const int s = static_cast<int>(x.s());
  const int t = static_cast<int>(x.t());
  const auto level = static_cast<int>(m);
  const auto integral = numerics::beta_mixture(
      [&](double p) { return walk::a_m_sequence(s, t, p, level).back(); }, u.r, u.b, 0.0, x.value(),
      1e-12);
  return ProbResult::make(integral.value, integral.error + 1e-10, Method::quadrature);
}

}  // namespace

ProbResult general_cdf(const UrnParams& u, const Threshold& x) {
  const std::int64_t m = static_cast<std::int64_t>(u.b) * x.s() - static_cast<std::int64_t>(u.r) * (x.t() - x.s());
  return mixed_level_cdf(u, x, m);
}

ProbResult general_cdf_strict(const UrnParams& u, const Threshold& x) {
  const std::int64_t m = static_cast<std::int64_t>(u.b) * x.s() - static_cast<std::int64_t>(u.r) * (x.t() - x.s());
  return mixed_level_cdf(u, x, m - 1);
}

SupportSpec support_enum(const UrnParams& u, int horizon) {
  u.validate();
  if (horizon < 0) throw DomainError("support_enum needs horizon >= 0");
  const Ratio start(u.r, u.r + u.b);
  std::set<Ratio> values;
  for (std::int64_t n = 0; n <= horizon; ++n) {
    for (std::int64_t i = 0; i <= n; ++i) {
      const Ratio q(u.r + i * u.d, u.r + u.b + n * u.d);
      if (q >= start) values.insert(q);
    }
  }
  return SupportSpec{{values.begin(), values.end()}, horizon};
}

}  // namespace urnmax::urn
