#include "urnmax/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "urnmax/types.hpp"

namespace urnmax::numerics {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma requires a positive finite argument");
  }
  return boost::math::lgamma(x);
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta requires positive arguments");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

double harmonic_H(double x) {
  if (x <= -1.0 && x == std::floor(x)) {
    throw DomainError("harmonic_H has a pole at negative integer " + std::to_string(x));
  }
  return boost::math::digamma(x + 1.0) + boost::math::constants::euler<double>();
}

namespace {

// Gauss: H(p/q) for integers 0 < p < q.
double harmonic_gauss(std::int64_t p, std::int64_t q) {
  constexpr double pi = std::numbers::pi;
  const double x = static_cast<double>(p) / static_cast<double>(q);
  CompensatedSum sum;
  sum.add(static_cast<double>(q) / static_cast<double>(p));
  sum.add(-0.5 * pi / std::tan(pi * x));
  sum.add(-std::log(2.0 * static_cast<double>(q)));
  for (std::int64_t n = 1; 2 * n < q; ++n) {
    // cos(2 pi p n / q) with pn reduced mod q first.
    const double angle = 2.0 * pi * static_cast<double>((p * n) % q) / static_cast<double>(q);
    sum.add(2.0 * std::cos(angle) * std::log(std::sin(pi * static_cast<double>(n) / q)));
  }
  return sum.value();
}

}  // namespace

double harmonic_H(std::int64_t num, std::int64_t den) {
  const Ratio x(num, den);
  const std::int64_t p = x.num();
  const std::int64_t q = x.den();
  if (q == 1 && p <= -1) throw DomainError("harmonic_H has a pole at " + x.str());

  // Write x = k + frac with 0 <= frac < 1, then use H(y) = H(y-1) + 1/y.
  std::int64_t k = p / q;
  std::int64_t rem = p % q;
  if (rem < 0) {
    rem += q;
    --k;
  }
  double base = rem == 0 ? 0.0 : harmonic_gauss(rem, q);
  CompensatedSum sum;
  sum.add(base);
  const double frac = static_cast<double>(rem) / static_cast<double>(q);
  if (k > 0) {
    for (std::int64_t j = 1; j <= k; ++j) sum.add(1.0 / (frac + static_cast<double>(j)));
  } else {
    // H(y-1) = H(y) - 1/y stepping down from frac.
    for (std::int64_t j = 0; j > k; --j) sum.add(-1.0 / (frac + static_cast<double>(j)));
  }
  return sum.value();
}

double binom_cdf(int n, double p, int k) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binom_cdf requires p in [0,1]");
  if (n < 0) throw DomainError("binom_cdf requires n >= 0");
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  return boost::math::ibetac(static_cast<double>(k + 1), static_cast<double>(n - k), p);
}

double binom_sf(int n, double p, int k) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binom_sf requires p in [0,1]");
  if (n < 0) throw DomainError("binom_sf requires n >= 0");
  if (k < 0) return 1.0;
  if (k >= n) return 0.0;
  return boost::math::ibeta(static_cast<double>(k + 1), static_cast<double>(n - k), p);
}

double binom_pmf(int n, double p, int k) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binom_pmf requires p in [0,1]");
  if (k < 0 || k > n) return 0.0;
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  const double log_choose = log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
  return std::exp(log_choose + k * std::log(p) + (n - k) * std::log1p(-p));
}

double beta_density(double alpha, double beta, double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return std::exp((alpha - 1.0) * std::log(x) + (beta - 1.0) * std::log1p(-x) -
                  log_beta(alpha, beta));
}

Complex poly_eval(std::span<const double> coeffs, Complex z) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

namespace {

Complex poly_deriv_eval(std::span<const double> coeffs, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
    acc = acc * z + static_cast<double>(k) * coeffs[k];
  }
  return acc;
}

double residual_scale(std::span<const double> coeffs, Complex z) {
  const double deg = static_cast<double>(coeffs.size() - 1);
  return 1.0 + std::pow(std::abs(z), deg);
}

std::vector<Complex> companion_roots(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size() - 1;
  const double lead = coeffs[n];
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                    static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -coeffs[i] / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalue solver failed");
  std::vector<Complex> roots;
  roots.reserve(n);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

Complex polish(std::span<const double> coeffs, Complex z) {
  Complex best = z;
  double best_res = std::abs(poly_eval(coeffs, z));
  for (int it = 0; it < 8 && best_res > 0.0; ++it) {
    const Complex d = poly_deriv_eval(coeffs, z);
    if (std::abs(d) == 0.0) break;
    z -= poly_eval(coeffs, z) / d;
    const double res = std::abs(poly_eval(coeffs, z));
    if (!(res < best_res)) break;
    best = z;
    best_res = res;
  }
  return best;
}

std::vector<Complex> polished_roots(std::span<const double> coeffs) {
  std::vector<Complex> roots = companion_roots(coeffs);
  for (auto& z : roots) {
    z = polish(coeffs, z);
    // Real coefficients: snap numerically real roots onto the axis.
    if (std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z))) {
      const Complex snapped(z.real(), 0.0);
      if (std::abs(poly_eval(coeffs, snapped)) <= std::abs(poly_eval(coeffs, z))) z = snapped;
    }
  }
  return roots;
}

void check_residuals(std::span<const double> coeffs, RootSet& set) {
  set.max_residual = 0.0;
  for (const auto& z : set.roots) {
    const double res = std::abs(poly_eval(coeffs, z)) / residual_scale(coeffs, z);
    set.max_residual = std::max(set.max_residual, res);
  }
  if (!(set.max_residual <= 1e-10)) {
    throw NumericalError("polynomial roots did not converge, max scaled residual " +
                         std::to_string(set.max_residual));
  }
}

}  // namespace

RootSet poly_roots(std::span<const double> coeffs, double margin) {
  if (coeffs.size() < 2) throw DomainError("poly_roots requires degree >= 1");
  if (coeffs.back() == 0.0) throw DomainError("poly_roots requires a nonzero leading coefficient");
  RootSet set;
  set.roots = polished_roots(coeffs);
  check_residuals(coeffs, set);
  for (std::size_t i = 0; i < set.roots.size(); ++i) {
    const double mod = std::abs(set.roots[i]);
    if (mod < 1.0 - margin) {
      set.inside.push_back(i);
    } else if (mod > 1.0 + margin) {
      set.outside.push_back(i);
    } else {
      set.on_circle.push_back(i);
    }
  }
  return set;
}

std::vector<double> trinomial_coeffs(double p, int s, int t) {
  std::vector<double> c(static_cast<std::size_t>(t) + 1, 0.0);
  c[0] = 1.0 - p;
  c[static_cast<std::size_t>(s)] -= 1.0;
  c[static_cast<std::size_t>(t)] += p;
  return c;
}

RootSet trinomial_root_set(double p, int s, int t) {
  if (s < 1 || t <= s || std::gcd(s, t) != 1) {
    throw DomainError("trinomial roots need coprime 0 < s < t");
  }
  if (!(p > 0.0 && p * t < s)) throw DomainError("trinomial roots need 0 < p < s/t");
  // (p z^t - z^s + q) / (z - 1) = p (1 + ... + z^{t-1}) - (1 + ... + z^{s-1}).
  std::vector<double> deflated(static_cast<std::size_t>(t), p);
  for (int k = 0; k < s; ++k) deflated[static_cast<std::size_t>(k)] -= 1.0;
  std::vector<Complex> roots = deflated.size() > 1 ? polished_roots(deflated) : std::vector<Complex>{};
  std::sort(roots.begin(), roots.end(),
            [](const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); });

  RootSet set;
  const auto inside_count = static_cast<std::size_t>(s - 1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i == inside_count) {
      set.on_circle.push_back(set.roots.size());
      set.roots.emplace_back(1.0, 0.0);
    }
    (i < inside_count ? set.inside : set.outside).push_back(set.roots.size());
    set.roots.push_back(roots[i]);
  }
  if (set.on_circle.empty()) {
    set.on_circle.push_back(set.roots.size());
    set.roots.emplace_back(1.0, 0.0);
  }
  const auto full = trinomial_coeffs(p, s, t);
  check_residuals(full, set);
  return set;
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

Extrapolated extrapolated_series(const std::function<double()>& next_term, std::size_t first_count,
                                 int levels) {
  if (first_count == 0 || levels < 1) throw DomainError("extrapolated_series needs N0 >= 1, levels >= 1");
  std::vector<std::vector<double>> table;
  CompensatedSum sum;
  std::size_t taken = 0;
  std::size_t target = first_count;
  for (int level = 0; level < levels; ++level, target *= 2) {
    while (taken < target) {
      sum.add(next_term());
      ++taken;
    }
    std::vector<double> row{sum.value()};
    // Neville on h = 1/N with h halving each level.
    double factor = 1.0;
    for (std::size_t j = 1; j <= table.size(); ++j) {
      factor *= 2.0;
      const double prev = table.back()[j - 1];
      row.push_back(row[j - 1] + (row[j - 1] - prev) / (factor - 1.0));
    }
    table.push_back(std::move(row));
  }
  Extrapolated out;
  out.terms = taken;
  const auto& last = table.back();
  out.value = last.back();
  if (table.size() >= 2) {
    const auto& before = table[table.size() - 2];
    out.error = std::max(std::abs(last.back() - last[last.size() - 2]),
                         std::abs(last.back() - before.back()));
  } else {
    out.error = std::abs(last.back());
  }
  return out;
}

Integral integrate(const std::function<double(double)>& f, double lo, double hi, double tol) {
  Integral out;
  if (hi <= lo) return out;
  tol = std::max(tol, 100.0 * std::numeric_limits<double>::epsilon());
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  auto unit = [&](double u) { return f(mid + half * u); };
  double err = 0.0;
  out.value = half * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(unit, -1.0, 1.0, 20, tol, &err);
  out.error = half * err;
  return out;
}

Integral beta_mixture(const std::function<double(double)>& f, double alpha, double beta, double lo,
                      double hi, double tol) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("beta_mixture needs positive shapes");
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  Integral out;
  if (hi <= lo) return out;
  const double lb = log_beta(alpha, beta);
  auto weighted = [&](double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    const double v = f(x);
    if (v == 0.0) return 0.0;
    return v * std::exp((alpha - 1.0) * std::log(x) + (beta - 1.0) * std::log1p(-x) - lb);
  };
  if (alpha >= 1.0 && beta >= 1.0) return integrate(weighted, lo, hi, tol);
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0;
  out.value = integrator.integrate(weighted, lo, hi, tol, &err);
  out.error = err;
  return out;
}

}  // namespace urnmax::numerics
