#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace urnmax::numerics {

using Complex = std::complex<double>;

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

double log_beta(double a, double b);

/// Beta function B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b), evaluated in log space.
double beta(double a, double b);

/// Generalized harmonic number H(x) = psi(x+1) + gamma for real x (digamma route).
double harmonic_H(double x);

/// H(num/den) for a rational argument, evaluated with Gauss's finite
/// cotangent / log-sine formula after shifting the argument into (0,1).
double harmonic_H(std::int64_t num, std::int64_t den);

/// P(X <= k) for X ~ Binomial(n, p), through the regularized incomplete Beta function.
double binom_cdf(int n, double p, int k);

/// P(X > k), the exact complement of binom_cdf.
double binom_sf(int n, double p, int k);

double binom_pmf(int n, double p, int k);

/// Density of Beta(alpha, beta) at x in (0,1).
double beta_density(double alpha, double beta, double x);

/// Complex roots of a real polynomial partitioned against the unit circle.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<std::size_t> inside;
  std::vector<std::size_t> on_circle;
  std::vector<std::size_t> outside;
  double max_residual = 0.0;
};

/// Value of the polynomial with ascending coefficients c[0] + c[1] z + ... at z.
Complex poly_eval(std::span<const double> coeffs, Complex z);

/// All roots of the polynomial with ascending coefficients (leading coefficient
/// nonzero, degree >= 1). Companion-matrix eigenvalues, then Newton polishing;
/// roots within `margin` of the unit circle are classified as on it.
RootSet poly_roots(std::span<const double> coeffs, double margin = 1e-9);

/// Roots of p z^t - z^s + q (gcd(s,t) = 1, 0 < p < s/t) with the partition forced
/// to (s-1 inside, 1 on circle, t-s outside) by ordering moduli. The on-circle root
/// is exactly 1.
RootSet trinomial_root_set(double p, int s, int t);

/// Ascending coefficients of p z^t - z^s + q.
std::vector<double> trinomial_coeffs(double p, int s, int t);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Extrapolated {
  double value = 0.0;
  double error = 0.0;
  std::size_t terms = 0;
};

/// Sums a convergent series whose partial-sum error has an expansion in integer
/// powers of 1/N. Partial sums after N0, 2 N0, 4 N0, ... terms are extrapolated
/// to N = infinity (Richardson / Neville).
Extrapolated extrapolated_series(const std::function<double()>& next_term, std::size_t first_count,
                                 int levels);

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod integral over [lo, hi] for smooth integrands.
Integral integrate(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-13);

/// Integral of f(p) times the Beta(alpha, beta) density over [lo, hi] within [0,1].
/// Shapes below 1 put integrable singularities at the endpoints; those cases
/// switch to double-exponential (tanh-sinh) quadrature.
Integral beta_mixture(const std::function<double(double)>& f, double alpha, double beta, double lo,
                      double hi, double tol = 1e-13);

}  // namespace urnmax::numerics
