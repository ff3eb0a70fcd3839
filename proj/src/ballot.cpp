#include "urnmax/ballot.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace urnmax::ballot {

namespace {

void check_t(int t) {
  if (t < 2) throw DomainError("ballot counts need t >= 2");
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int j = 1; j <= k; ++j) {
    out *= n - k + j;
    out /= j;
  }
  return out;
}

PathTable::PathTable(int n, int t, int a) {
  check_t(t);
  if (n < 0 || a < 0) throw DomainError("PathTable needs n, a >= 0");
  cells_.resize(static_cast<std::size_t>(n) + 1);
  for (int x = 0; x <= n; ++x) {
    const int top = a + x * (t - 1);
    auto& col = cells_[static_cast<std::size_t>(x)];
    col.assign(static_cast<std::size_t>(top) + 1, BigInt(0));
    for (int y = 0; y <= top; ++y) {
      if (x == 0 && y == 0) {
        col[0] = 1;
        continue;
      }
      BigInt v = 0;
      if (y > 0) v += col[static_cast<std::size_t>(y - 1)];
      if (x > 0) {
        const auto& left = cells_[static_cast<std::size_t>(x - 1)];
        if (static_cast<std::size_t>(y) < left.size()) v += left[static_cast<std::size_t>(y)];
      }
      col[static_cast<std::size_t>(y)] = std::move(v);
    }
  }
}

BigInt ballot_count(int n, int t, int a) {
  check_t(t);
  if (n < 0 || a < 0) throw DomainError("ballot_count needs n, a >= 0");
  const BigInt num = BigInt(a + 1) * binomial(n * t + a, n);
  const int den = n * (t - 1) + a + 1;
  if (num % den != 0) throw NumericalError("ballot_count: inexact division");
  return num / den;
}

BigInt dp_paths_below(int n, int t, int a) {
  const PathTable table(n, t, a);
  return table.at(n, n * (t - 1) + a);
}

BigInt barbier_count(int k, int n, int t) {
  check_t(t);
  if (k < 0 || n <= t * k) throw DomainError("barbier_count needs n > t k");
  const BigInt num = BigInt(n - t * k) * binomial(n + k, n);
  if (num % (n + k) != 0) throw NumericalError("barbier_count: inexact division");
  return num / (n + k);
}

BigInt barbier_dp_count(int k, int n, int t) {
  check_t(t);
  if (k < 0 || n <= t * k) throw DomainError("barbier_dp_count needs n > t k");
  // cell (x, y) admissible iff y > t x, apart from the origin.
  std::vector<std::vector<BigInt>> cnt(static_cast<std::size_t>(k) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(0)));
  for (int x = 0; x <= k; ++x) {
    for (int y = 0; y <= n; ++y) {
      auto& cell = cnt[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (x == 0 && y == 0) {
        cell = 1;
        continue;
      }
      if (y <= t * x) continue;
      if (y > 0) cell += cnt[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
      if (x > 0) cell += cnt[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)];
    }
  }
  return cnt[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

namespace {

// Positive root of p e^{theta (t-s)} + q e^{-theta s} = 1 (exists iff p t < s).
double lundberg_exponent(int s, int t, double p) {
  const double q = 1.0 - p;
  const double up = t - s;
  const double down = s;
  auto phi = [&](double th) { return p * std::exp(th * up) + q * std::exp(-th * down) - 1.0; };
  // phi is convex with phi(0) = 0 and phi'(0) < 0; bracket the positive root.
  double hi = 1.0;
  while (phi(hi) < 0.0) hi *= 2.0;
  double lo = hi / 2.0;
  while (phi(lo) > 0.0 && lo > 1e-300) lo /= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double c = 0.5 * (lo + hi);
    (phi(c) < 0.0 ? lo : hi) = c;
  }
  return lo;
}

}  // namespace

Bracket finite_horizon_level_cdf(int s, int t, std::int64_t m, double p, int horizon) {
  if (s < 1 || t <= s) throw DomainError("level cdf needs 0 < s < t");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("level cdf needs p in (0,1)");
  if (horizon < 1) throw DomainError("level cdf needs horizon >= 1");
  const long double pl = p;
  const long double ql = 1.0L - pl;
  const std::int64_t up = t - s;
  const std::int64_t down = s;

  Bracket out;
  out.tail_bound = p * t < s;
  out.exponent = out.tail_bound ? lundberg_exponent(s, t, p) : 0.0;

  // State: distance j = m - (t S_n - n s) >= 0 below the barrier. Distances past
  // `cap` are lumped into one bucket that is treated as never violating.
  const std::int64_t reach = m + down * static_cast<std::int64_t>(horizon) + 1;
  std::int64_t cap = reach;
  if (out.tail_bound) {
    const double span = 80.0 / out.exponent;
    if (span < static_cast<double>(reach)) cap = std::max<std::int64_t>(m + down + 1, m + static_cast<std::int64_t>(span) + down);
  }
  cap = std::max<std::int64_t>(cap, 1);

  std::vector<long double> mass(static_cast<std::size_t>(cap), 0.0L);
  std::vector<long double> next(static_cast<std::size_t>(cap), 0.0L);
  long double bucket = 0.0L;
  auto deposit = [&](std::vector<long double>& dst, std::int64_t j, long double w) {
    if (j < 0) return;
    if (j >= cap) {
      bucket += w;
    } else {
      dst[static_cast<std::size_t>(j)] += w;
    }
  };
  // The constraint starts at n = 1, so the starting distance m may be negative.
  deposit(mass, m - up, pl);
  deposit(mass, m + down, ql);

  for (int n = 2; n <= horizon; ++n) {
    std::fill(next.begin(), next.end(), 0.0L);
    for (std::int64_t j = 0; j < cap; ++j) {
      const long double w = mass[static_cast<std::size_t>(j)];
      if (w == 0.0L) continue;
      deposit(next, j - up, w * pl);
      deposit(next, j + down, w * ql);
    }
    mass.swap(next);
  }

  long double survive = bucket;
  long double tail = 0.0L;
  for (std::int64_t j = 0; j < cap; ++j) {
    const long double w = mass[static_cast<std::size_t>(j)];
    survive += w;
    if (out.tail_bound) tail += w * std::exp(-static_cast<long double>(out.exponent) * (j + 1));
  }
  if (out.tail_bound) tail += bucket * std::exp(-static_cast<long double>(out.exponent) * (cap + 1));
  out.upper = static_cast<double>(std::min(survive, 1.0L));
  out.lower = out.tail_bound ? static_cast<double>(std::max(survive - tail, 0.0L)) : 0.0;
  return out;
}

Bracket finite_horizon_sup_cdf(int r, int b, double p, const Threshold& x, int horizon) {
  if (r < 0 || b < 0) throw DomainError("walk offsets must be nonnegative");
  const std::int64_t m = x.s() * b - (x.t() - x.s()) * r;
  return finite_horizon_level_cdf(static_cast<int>(x.s()), static_cast<int>(x.t()), m, p, horizon);
}

Bracket finite_horizon_sup_cdf_strict(int r, int b, double p, const Threshold& x, int horizon) {
  if (r < 0 || b < 0) throw DomainError("walk offsets must be nonnegative");
  const std::int64_t m = x.s() * b - (x.t() - x.s()) * r;
  return finite_horizon_level_cdf(static_cast<int>(x.s()), static_cast<int>(x.t()), m - 1, p, horizon);
}

double finite_horizon_urn_cdf(const UrnParams& u, const Threshold& x, int horizon) {
  u.validate();
  if (horizon < 0) throw DomainError("urn cdf needs horizon >= 0");
  const std::int64_t s = x.s();
  const std::int64_t t = x.t();
  // Z_n = (r + d k)/(r + b + n d) <= s/t  <=>  t (r + d k) <= s (r + b + n d).
  auto admissible = [&](std::int64_t n, std::int64_t k) {
    return t * (u.r + u.d * k) <= s * (u.r + u.b + n * u.d);
  };
  if (!admissible(0, 0)) return 0.0;
  std::vector<long double> mass{1.0L};
  std::vector<long double> next;
  for (std::int64_t n = 0; n < horizon; ++n) {
    next.assign(mass.size() + 1, 0.0L);
    const long double total = u.r + u.b + n * u.d;
    for (std::size_t k = 0; k < mass.size(); ++k) {
      const long double w = mass[k];
      if (w == 0.0L) continue;
      const long double red = (u.r + u.d * static_cast<long double>(k)) / total;
      next[k] += w * (1.0L - red);
      next[k + 1] += w * red;
    }
    // Kill states whose ratio exceeds x; admissibility is monotone in k.
    for (std::size_t k = next.size(); k-- > 0;) {
      if (admissible(n + 1, static_cast<std::int64_t>(k))) break;
      next[k] = 0.0L;
    }
    while (next.size() > 1 && next.back() == 0.0L) next.pop_back();
    mass.swap(next);
  }
  long double total = 0.0L;
  for (auto w : mass) total += w;
  return static_cast<double>(std::min(total, 1.0L));
}

}  // namespace urnmax::ballot
