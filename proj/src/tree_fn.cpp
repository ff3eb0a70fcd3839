#include "urnmax/tree_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "urnmax/numerics.hpp"
#include "urnmax/types.hpp"

namespace urnmax::tree {

void TreeEvalPolicy::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("TreeEvalPolicy.rel_tol must be positive");
  if (max_terms < 1) throw DomainError("TreeEvalPolicy.max_terms must be at least 1");
  if (newton_iters < 1) throw DomainError("TreeEvalPolicy.newton_iters must be at least 1");
}

double tree_boundary(int t) {
  if (t < 2) throw DomainError("tree function needs t >= 2");
  const double td = t;
  return std::pow(1.0 - 1.0 / td, td - 1.0) / td;
}

namespace {

// Partial sum of sum_n C(nt,n) z^n / (n(t-1)+1); all terms positive.
double tree_series_partial(int t, double z, long terms) {
  if (z == 0.0) return 1.0;
  const double lz = std::log(z);
  numerics::CompensatedSum sum;
  for (long n = 0; n < terms; ++n) {
    const double nd = static_cast<double>(n);
    const double lc = numerics::log_gamma(nd * t + 1.0) - numerics::log_gamma(nd + 1.0) -
                      numerics::log_gamma(nd * (t - 1) + 2.0);
    const double term = std::exp(lc + nd * lz);
    sum.add(term);
    if (term < 1e-18 * sum.value()) break;
  }
  return sum.value();
}

}  // namespace

double tree_T(int t, double z, const TreeEvalPolicy& policy) {
  policy.validate();
  const double zb = tree_boundary(t);
  if (!(z >= 0.0) || z > zb * (1.0 + 1e-14)) {
    throw DomainError("tree_T argument outside [0, (1/t)(1-1/t)^(t-1)]");
  }
  if (z == 0.0) return 1.0;
  const double td = t;
  // At the boundary the root is double; any z within rounding of it is taken as the boundary.
  if (z >= zb * (1.0 - 4.0 * std::numeric_limits<double>::epsilon())) return td / (td - 1.0);

  // h(T) = 1 + z T^t - T is convex with h(1) > 0 and h(t/(t-1)) <= 0, so the
  // series branch is the smaller root, bracketed by [partial sum, t/(t-1)].
  auto h = [&](double T) { return 1.0 + z * std::pow(T, td) - T; };
  double lo = tree_series_partial(t, z, std::min<long>(policy.max_terms, 64));
  double hi = td / (td - 1.0);
  if (h(lo) < 0.0) lo = 1.0;
  double T = lo;
  for (int it = 0; it < policy.newton_iters; ++it) {
    const double hv = h(T);
    if (hv == 0.0) return T;
    if (hv > 0.0) lo = T; else hi = T;
    const double dh = z * td * std::pow(T, td - 1.0) - 1.0;
    double next = dh < 0.0 ? T - hv / dh : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - T) <= 1e-16 * T || hi - lo <= 4e-16 * hi) {
      T = next;
      break;
    }
    T = next;
  }
  if (!(std::abs(h(T)) <= policy.rel_tol * T)) {
    throw NumericalError("tree_T did not satisfy T = 1 + z T^t at z=" + std::to_string(z));
  }
  return T;
}

double tree_R(int t, double p, const TreeEvalPolicy& policy) {
  if (t < 2) throw DomainError("tree_R needs t >= 2");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("tree_R needs p in (0,1)");
  const double td = t;
  if (p * td >= td - 1.0) return 1.0;
  const double q = 1.0 - p;
  const double z = q * std::pow(p, td - 1.0);
  double R = p * tree_T(t, z, policy);
  // R = p + q R^t has the root 1; the remaining factor q (1 + R + ... + R^(t-1)) - 1
  // has a simple root at R, so Newton on it stays well conditioned as p -> (t-1)/t.
  for (int it = 0; it < 4; ++it) {
    double v = 0.0;
    double dv = 0.0;
    for (int k = t - 1; k >= 0; --k) {
      dv = dv * R + v;
      v = v * R + 1.0;
    }
    const double step = (q * v - 1.0) / (q * dv);
    R -= step;
    if (std::abs(step) <= 1e-17) break;
  }
  return std::clamp(R, p, 1.0);
}

double tree_frac_radius(int t, int s) {
  if (s < 1 || t <= s) throw DomainError("generalized tree function needs 0 < s < t");
  const double ratio = static_cast<double>(s) / static_cast<double>(t);
  return ratio * std::pow(1.0 - ratio, static_cast<double>(t) / s - 1.0);
}

namespace {

// log |C(alpha, n)| and its sign for alpha > -1; sign 0 marks an exact zero.
double log_gen_binomial(double alpha, long n, int& sign) {
  const double tail = alpha - static_cast<double>(n) + 1.0;
  if (tail <= 0.0 && tail == std::floor(tail)) {
    sign = 0;
    return 0.0;
  }
  int sign_tail = 1;
  const double l_tail = boost::math::lgamma(tail, &sign_tail);
  sign = sign_tail;
  return numerics::log_gamma(alpha + 1.0) - numerics::log_gamma(static_cast<double>(n) + 1.0) - l_tail;
}

void check_frac_args(int t, int s, Complex z) {
  if (s < 1 || t <= s) throw DomainError("generalized tree function needs 0 < s < t");
  if (std::gcd(s, t) != 1) throw DomainError("generalized tree function needs gcd(s,t) = 1");
  if (std::abs(z) > tree_frac_radius(t, s) * (1.0 + 1e-12)) {
    throw DomainError("generalized tree argument outside the convergence disk");
  }
}

// sum_{n >= start} sign * z^n C((nt + shift)/s, n) / (nt + shift)
Complex frac_series(int t, int s, Complex z, int shift, long start, const TreeEvalPolicy& policy) {
  Complex sum = 0.0;
  int small_run = 0;
  const double log_mod = std::log(std::abs(z));
  const double phase = std::arg(z);
  for (long n = start; n < policy.max_terms; ++n) {
    const double den = static_cast<double>(n) * t + shift;
    int sign = 0;
    const double lc = log_gen_binomial(den / s, n, sign);
    if (sign == 0) continue;
    // Coefficients grow like radius^-n, so combine with |z|^n in log space.
    const double nd = static_cast<double>(n);
    const Complex term =
        std::polar(sign * std::exp(lc + nd * log_mod) / den, nd * phase);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::max(1.0, std::abs(sum))) {
      if (++small_run >= 4) break;
    } else {
      small_run = 0;
    }
  }
  return sum;
}

}  // namespace

Complex tree_T_frac(int t, int s, Complex z, const TreeEvalPolicy& policy) {
  policy.validate();
  check_frac_args(t, s, z);
  if (z == Complex(0.0)) return 1.0;
  return frac_series(t, s, z, 1, 0, policy);
}

Complex tree_T_frac_reciprocal(int t, int s, Complex z, const TreeEvalPolicy& policy) {
  policy.validate();
  check_frac_args(t, s, z);
  if (z == Complex(0.0)) return 1.0;
  return 1.0 - frac_series(t, s, z, -1, 1, policy);
}

namespace {

// Newton on (p z^t - z^s + q)/(z - 1), which keeps the roots near 1 simple.
Complex polish_deflated(Complex z, double p, int s, int t) {
  auto eval = [&](Complex x, Complex& deriv) {
    Complex v = 0.0;
    deriv = 0.0;
    for (int k = t - 1; k >= 0; --k) {
      const double c = p - (k < s ? 1.0 : 0.0);
      deriv = deriv * x + v;
      v = v * x + c;
    }
    return v;
  };
  for (int it = 0; it < 50; ++it) {
    Complex d;
    const Complex v = eval(z, d);
    if (std::abs(d) == 0.0) break;
    const Complex step = v / d;
    z -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

void match_against(const std::vector<Complex>& found, const std::vector<Complex>& reference,
                   const char* what) {
  for (const auto& z : found) {
    double best = INFINITY;
    for (const auto& w : reference) best = std::min(best, std::abs(z - w));
    if (!(best <= 1e-8 * std::max(1.0, std::abs(z)))) {
      throw NumericalError(std::string("tree-function root disagrees with companion root (") + what +
                           "), distance " + std::to_string(best));
    }
  }
}

}  // namespace

TrinomialRoots trinomial_roots(int s, int t, double p, const TreeEvalPolicy& policy) {
  policy.validate();
  if (s < 1 || t <= s || std::gcd(s, t) != 1) throw DomainError("trinomial_roots needs coprime 0 < s < t");
  if (!(p > 0.0 && p * t < s)) throw DomainError("trinomial_roots needs 0 < p < s/t");
  const double q = 1.0 - p;
  constexpr double two_pi = 2.0 * std::numbers::pi;

  // Near p = s/t the series arguments sit on the convergence circle and convergence
  // is algebraic; the capped partial sum still lands in Newton's basin.
  TreeEvalPolicy series_policy = policy;
  series_policy.max_terms = std::min<long>(policy.max_terms, 2000);

  const numerics::RootSet reference = numerics::trinomial_root_set(p, s, t);
  std::vector<Complex> ref_inside;
  std::vector<Complex> ref_outside;
  for (auto i : reference.inside) ref_inside.push_back(reference.roots[i]);
  for (auto i : reference.outside) ref_outside.push_back(reference.roots[i]);

  TrinomialRoots out;
  const double sd = s;
  const double td = t;
  const double inner_scale = std::pow(q, 1.0 / sd);
  const double inner_arg = p * std::pow(q, (td - sd) / sd);
  for (int i = 1; i < s; ++i) {
    const Complex eta_i = std::polar(1.0, two_pi * i / sd);
    const Complex eta_it = std::polar(1.0, two_pi * std::fmod(static_cast<double>(i) * t, sd) / sd);
    Complex z = eta_i * inner_scale * tree_T_frac(t, s, inner_arg * eta_it, series_policy);
    out.inside.push_back(polish_deflated(z, p, s, t));
  }
  out.inside.emplace_back(1.0, 0.0);

  const int k = t - s;
  const double kd = k;
  const double outer_scale = std::pow(p, 1.0 / kd);
  const double outer_arg = q * std::pow(p, sd / kd);
  for (int i = 1; i <= k; ++i) {
    const Complex om_i = std::polar(1.0, two_pi * i / kd);
    const Complex om_it = std::polar(1.0, two_pi * std::fmod(static_cast<double>(i) * t, kd) / kd);
    const Complex y = om_i * outer_scale * tree_T_frac(t, k, outer_arg * om_it, series_policy);
    const Complex w = polish_deflated(1.0 / y, p, s, t);
    out.outside_reciprocals.push_back(1.0 / w);
  }

  match_against({out.inside.begin(), out.inside.end() - 1}, ref_inside, "inside");
  std::vector<Complex> outside;
  for (const auto& y : out.outside_reciprocals) outside.push_back(1.0 / y);
  match_against(outside, ref_outside, "outside");
  return out;
}

GPolynomial a0_and_g(int s, int t, double p, const TreeEvalPolicy& policy) {
  const TrinomialRoots roots = trinomial_roots(s, t, p, policy);
  Complex a0 = 1.0;
  for (const auto& y : roots.outside_reciprocals) a0 *= 1.0 - y;
  if (std::abs(a0.imag()) > 1e-10) throw NumericalError("a_0 has a non-negligible imaginary part");

  // g(z) = a0 prod_{i<s} (1 - z/z_i), expanded in ascending powers.
  std::vector<Complex> poly{a0.real()};
  for (std::size_t i = 0; i + 1 < roots.inside.size(); ++i) {
    const Complex c = -1.0 / roots.inside[i];
    std::vector<Complex> next(poly.size() + 1, 0.0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] += c * poly[j];
    }
    poly = std::move(next);
  }
  GPolynomial out;
  out.a0 = a0.real();
  out.outside_reciprocals = roots.outside_reciprocals;
  for (const auto& c : poly) {
    if (std::abs(c.imag()) > 1e-10) throw NumericalError("g(z) has a non-negligible imaginary coefficient");
    out.g.push_back(c.real());
  }
  return out;
}

}  // namespace urnmax::tree
