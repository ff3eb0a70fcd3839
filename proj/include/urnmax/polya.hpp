#pragma once

#include <vector>

#include "urnmax/types.hpp"

namespace urnmax::urn {

// S_{r,b} = sup_{n>=0} Z_n is the all-time maximal red fraction of the urn, with
// Z_n = (r + d * reds drawn)/(r + b + n d). The urn is a Beta(r/d, b/d) mixture of
// Bernoulli walks, so every quantity here is a Beta average of a walk quantity.

/// P(S_{r,b} > (t-1)/t) as the series over first crossings, each term a t-ballot
/// number times a Beta ratio. Terms decay like n^-2; partial sums are extrapolated.
ProbResult sup_tail_series(const UrnParams& u, int t);

/// The same probability as the Beta(r/d, b/d) average of R_t(p)^(a+1), a = floor(m/d).
ProbResult sup_tail_mixture(const UrnParams& u, int t);

/// P(S_{1,1} <= (t-1)/t) = (1 - 1/t) H(1 - 1/t).
ProbResult s11_cdf(int t);

/// P(S_{1,1} = (t-1)/t) from the digamma closed form.
ProbResult s11_point_mass(int t);

/// q_-(t) = P(S_{t-1,1} > (t-1)/t) from its factorial-ratio series.
ProbResult q_minus(int t);

/// P(S_{1,t-1} <= 1/t) = P(I_{t-1,1} >= (t-1)/t), closed form.
ProbResult s_1_tm1_cdf(int t);

/// The same probability by quadrature of (t-1)(1 - pt)(1-p)^(t-3) over (0, 1/t).
ProbResult s_1_tm1_quadrature(int t);

/// P(S_{a,a(t-1)} <= 1/t) = P(X = a) - P(X > a)/(a(t-1) - 1), X ~ Binomial(at-1, 1/t).
ProbResult s_a_cdf(int a, int t);

/// The t = 2 specialization (1 + 1/(a-1)) C(2a-1, a) 2^-(2a-1) - 1/(2(a-1)).
ProbResult s_a_cdf_t2(int a);

/// The same probability by quadrature of (1 - pt)/q against the Beta(a, a(t-1)) density.
ProbResult s_a_quadrature(int a, int t);

struct Equalization {
  /// 2 P(Binomial(b + r - 1, 1/2) <= r - 1), or 1 when b <= r.
  ProbResult value;
  /// Beta(r,b) average of min(1, p/q)^(b - r); equals value.value.
  double mixture = 1.0;
  /// True when b <= r, where S >= 1/2 holds from the start.
  bool trivially_one = false;
};

/// P(S_{r,b} >= 1/2).
Equalization equalization(int r, int b);

/// P(S_{r,b} <= s/t) for d = 1 as the Beta(r,b) average of a_m(p), m = b s - r (t - s).
/// Zero when m < 0 since S_{r,b} >= r/(r+b) > s/t.
ProbResult general_cdf(const UrnParams& u, const Threshold& x);

/// P(S_{r,b} < s/t), the same average with level m - 1.
ProbResult general_cdf_strict(const UrnParams& u, const Threshold& x);

/// Values (r + i d)/(r + b + n d), 0 <= i <= n <= horizon, that are >= r/(r+b);
/// reduced, deduplicated and sorted.
struct SupportSpec {
  std::vector<Ratio> values;
  int horizon = 0;
};

SupportSpec support_enum(const UrnParams& u, int horizon);

}  // namespace urnmax::urn
