#include "urnmax/walk_max.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "urnmax/numerics.hpp"
#include "urnmax/tree_fn.hpp"

namespace urnmax::walk {

namespace {

std::int64_t level(const WalkParams& w, std::int64_t s, std::int64_t t) {
  return s * w.b - (t - s) * w.r;
}

void check_threshold_pair(int s, int t) {
  if (s < 1 || t <= s || std::gcd(s, t) != 1) {
    throw DomainError("threshold needs coprime 0 < s < t, got " + std::to_string(s) + "/" +
                      std::to_string(t));
  }
}

bool degenerate(int s, int t, double p) { return !(p * t < s); }

}  // namespace

ProbResult sup_tail_high(const WalkParams& w, int t) {
  w.validate();
  if (t < 2) throw DomainError("sup_tail_high needs t >= 2");
  const std::int64_t m = static_cast<std::int64_t>(w.b) * (t - 1) - w.r;
  if (m < 0) throw DomainError("sup_tail_high needs m = b(t-1) - r >= 0");
  const double R = tree::tree_R(t, w.p);
  const double value = std::pow(R, static_cast<double>(m + 1));
  return ProbResult::make(value, 1e-14 * static_cast<double>(m + 1), Method::closed_form);
}

ProbResult sup_point_mass_high(const WalkParams& w, int t) {
  w.validate();
  if (t < 2) throw DomainError("sup_point_mass_high needs t >= 2");
  const std::int64_t m = static_cast<std::int64_t>(w.b) * (t - 1) - w.r;
  if (m < 0) throw DomainError("sup_point_mass_high needs m = b(t-1) - r >= 0");
  const double R = tree::tree_R(t, w.p);
  const double q = 1.0 - w.p;
  const double value = m == 0 ? w.p - R + q * std::pow(R, t - 1.0)
                              : (1.0 - R) * std::pow(R, static_cast<double>(m));
  return ProbResult::make(value, 1e-14 * static_cast<double>(m + t), Method::closed_form);
}

std::vector<double> a_m_sequence(int s, int t, double p, int m_max) {
  check_threshold_pair(s, t);
  if (!(p > 0.0 && p < 1.0)) throw DomainError("a_m_sequence needs p in (0,1)");
  if (m_max < 0) throw DomainError("a_m_sequence needs m_max >= 0");
  std::vector<double> a(static_cast<std::size_t>(m_max) + 1, 0.0);
  if (degenerate(s, t, p)) return a;
  const double q = 1.0 - p;

  if (s == 1) {
    const double a0 = (1.0 - t * p) / q;
    double power = a0;
    for (int k = 0; k <= m_max; ++k) {
      if (k < t) {
        a[static_cast<std::size_t>(k)] = power;
        power /= q;
      } else {
        a[static_cast<std::size_t>(k)] =
            (a[static_cast<std::size_t>(k - 1)] - p * a[static_cast<std::size_t>(k - t)]) / q;
      }
    }
  } else {
    // sum_m a_m z^m = a_0 / ((1 - z) prod_i (1 - y_i z)); convolve geometric series.
    const tree::GPolynomial gp = tree::a0_and_g(s, t, p);
    std::vector<std::complex<double>> c(static_cast<std::size_t>(m_max) + 1, 1.0);
    for (const auto& y : gp.outside_reciprocals) {
      for (std::size_t k = 1; k < c.size(); ++k) c[k] += y * c[k - 1];
    }
    for (std::size_t k = 0; k < c.size(); ++k) a[k] = gp.a0 * c[k].real();
  }
  for (auto& v : a) v = std::clamp(v, 0.0, 1.0);
  return a;
}

std::vector<double> a_m_recurrence(int s, int t, double p, int m_max) {
  check_threshold_pair(s, t);
  if (!(p > 0.0 && p < 1.0)) throw DomainError("a_m_recurrence needs p in (0,1)");
  if (m_max < 0) throw DomainError("a_m_recurrence needs m_max >= 0");
  std::vector<double> a(static_cast<std::size_t>(m_max) + 1, 0.0);
  if (degenerate(s, t, p)) return a;
  const double q = 1.0 - p;
  const tree::GPolynomial gp = tree::a0_and_g(s, t, p);
  auto at = [&](int k) { return k < 0 ? 0.0 : a[static_cast<std::size_t>(k)]; };
  for (int k = 0; k <= m_max; ++k) {
    a[static_cast<std::size_t>(k)] =
        k < s ? gp.g[static_cast<std::size_t>(k)] : (at(k - s) - p * at(k - t)) / q;
  }
  return a;
}

double a_level(int s, int t, double p, std::int64_t m) {
  check_threshold_pair(s, t);
  if (m < -static_cast<std::int64_t>(s)) return 0.0;
  if (m < 0) return (1.0 - p) * a_level(s, t, p, m + s);
  return a_m_sequence(s, t, p, static_cast<int>(m)).back();
}

ProbResult sup_cdf(const WalkParams& w, const Threshold& x) {
  w.validate();
  const int s = static_cast<int>(x.s());
  const int t = static_cast<int>(x.t());
  if (degenerate(s, t, w.p)) return ProbResult::make(0.0, 0.0, Method::closed_form);
  const double value = a_level(s, t, w.p, level(w, s, t));
  return s == 1 ? ProbResult::make(value, 1e-13, Method::closed_form)
                : ProbResult::make(value, 1e-10, Method::roots);
}

ProbResult sup_point_mass(const WalkParams& w, const Threshold& x) {
  w.validate();
  const int s = static_cast<int>(x.s());
  const int t = static_cast<int>(x.t());
  if (degenerate(s, t, w.p)) return ProbResult::make(0.0, 0.0, Method::closed_form);
  const std::int64_t m = level(w, s, t);
  const double value = a_level(s, t, w.p, m) - a_level(s, t, w.p, m - 1);
  return ProbResult::make(value, s == 1 ? 2e-13 : 2e-10, s == 1 ? Method::closed_form : Method::roots);
}

RootProducts sup_cdf_roots(double p, int s_param, int r_param) {
  if (s_param < 1 || r_param == 0 || std::abs(r_param) >= s_param) {
    throw DomainError("sup_cdf_roots needs s > 0, r != 0, |r| < s");
  }
  if (!(p > 0.0 && p < 1.0)) throw DomainError("sup_cdf_roots needs p in (0,1)");
  const int top = 2 * s_param;
  const int mid = s_param + r_param;
  if (!(2.0 * s_param * p < s_param + r_param)) {
    return RootProducts{ProbResult::make(0.0, 0.0, Method::closed_form),
                        ProbResult::make(0.0, 0.0, Method::closed_form), Threshold(mid, top)};
  }
  std::vector<double> coeffs(static_cast<std::size_t>(top) + 1, 0.0);
  coeffs[0] = 1.0 - p;
  coeffs[static_cast<std::size_t>(mid)] -= 1.0;
  coeffs[static_cast<std::size_t>(top)] += p;
  const numerics::RootSet set = numerics::poly_roots(coeffs);

  // Exactly s - r roots lie outside the unit disk: take the largest moduli.
  std::vector<std::complex<double>> roots = set.roots;
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return std::abs(a) > std::abs(b); });
  const auto outside_count = static_cast<std::size_t>(s_param - r_param);
  if (!(std::abs(roots[outside_count - 1]) > 1.0)) {
    throw NumericalError("sup_cdf_roots: fewer outside roots than expected");
  }
  std::complex<double> cdf = 1.0;
  std::complex<double> prod = 1.0;
  for (std::size_t i = 0; i < outside_count; ++i) {
    cdf *= 1.0 - 1.0 / roots[i];
    prod *= 1.0 - roots[i];
  }
  const std::complex<double> mass = cdf + p * prod;
  if (std::abs(cdf.imag()) > 1e-10 || std::abs(mass.imag()) > 1e-10 * std::max(1.0, std::abs(prod))) {
    throw NumericalError("sup_cdf_roots: root products are not real");
  }

  RootProducts out{ProbResult::make(cdf.real(), 1e-10, Method::roots),
                   ProbResult::make(mass.real(), 1e-10, Method::roots), Threshold(mid, top)};

  const WalkParams origin{p, 0, 0};
  const double via_levels = sup_cdf(origin, out.threshold).value;
  if (std::abs(via_levels - out.cdf.value) > 1e-8) {
    throw RouteMismatch("root-product cdf disagrees with the level recursion at " + out.threshold.str(),
                        out.cdf.value, via_levels);
  }
  return out;
}

ProbResult equidist_interval(double p, int k) {
  if (k < 1) throw DomainError("equidist_interval needs k >= 1");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("equidist_interval needs p in (0,1)");
  if (p > 1.0 / (k + 1)) throw DomainError("equidist_interval needs p <= 1/(k+1)");
  const WalkParams w{p, 0, 0};
  const double upper = k == 1 ? 1.0 : sup_cdf(w, Threshold(1, k)).value;
  const double lower = sup_cdf(w, Threshold(1, k + 1)).value;
  return ProbResult::make(upper - lower, 2e-13, Method::closed_form);
}

ProbResult equidist_residual(double p, int t) {
  if (t < 2) throw DomainError("equidist_residual needs t >= 2");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("equidist_residual needs p in (0,1)");
  if (p > 1.0 / t) throw DomainError("equidist_residual needs p <= 1/t");
  return sup_cdf(WalkParams{p, 0, 0}, Threshold(1, t));
}

ProbResult inf_cdf(const WalkParams& w, const Threshold& x) {
  w.validate();
  const WalkParams dual{1.0 - w.p, w.b, w.r};
  return sup_cdf(dual, Threshold(x.t() - x.s(), x.t()));
}

}  // namespace urnmax::walk
