#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "urnmax/types.hpp"

namespace urnmax::ballot {

using BigInt = boost::multiprecision::cpp_int;

/// Exact counts of lattice paths from (0,0) with steps (1,0) and (0,1) that stay
/// on or below y = a + x (t-1). Column x holds heights 0 .. a + x (t-1).
class PathTable {
 public:
  PathTable(int n, int t, int a);

  int columns() const { return static_cast<int>(cells_.size()); }
  int height(int x) const { return static_cast<int>(cells_.at(static_cast<std::size_t>(x)).size()) - 1; }
  const BigInt& at(int x, int y) const {
    return cells_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y));
  }

 private:
  std::vector<std::vector<BigInt>> cells_;
};

/// t-ballot number (a+1)/(n(t-1)+a+1) C(nt+a, n) = [z^n] T_t(z)^(a+1).
BigInt ballot_count(int n, int t, int a);

/// The same count by dynamic programming over the lattice.
BigInt dp_paths_below(int n, int t, int a);

/// Barbier: (n - tk) C(n+k, n) / (n+k) paths from (0,0) to (k,n) that touch
/// y = t x only at the origin. Requires n > t k.
BigInt barbier_count(int k, int n, int t);

/// The Barbier count by dynamic programming.
BigInt barbier_dp_count(int k, int n, int t);

BigInt binomial(int n, int k);

/// Two-sided bound on P(sup_n (r + S_n)/(r + b + n) <= x) from a horizon-N computation.
struct Bracket {
  double lower = 0.0;
  double upper = 1.0;
  /// False when p >= x: no tail bound exists and lower is reported as 0.
  bool tail_bound = true;
  /// Lundberg exponent used for the tail bound (0 when unavailable).
  double exponent = 0.0;
};

/// Bracket for a_m = P(t S_n - n s <= m for all n >= 1) from the exact horizon-N
/// probability (upper) minus a Lundberg bound on a later first violation (lower).
Bracket finite_horizon_level_cdf(int s, int t, std::int64_t m, double p, int horizon);

/// Bracket for P(M_{r,b}(p) <= x); uses m = s b - (t - s) r for the reduced x = s/t.
Bracket finite_horizon_sup_cdf(int r, int b, double p, const Threshold& x, int horizon);

/// Bracket for the strict event P(M_{r,b}(p) < x), i.e. level m - 1.
Bracket finite_horizon_sup_cdf_strict(int r, int b, double p, const Threshold& x, int horizon);

/// Exact P(max_{0 <= n <= N} Z_n <= x) for the urn by forward recursion over the
/// number of red draws. Used to size the horizon bias of simulations.
double finite_horizon_urn_cdf(const UrnParams& u, const Threshold& x, int horizon);

}  // namespace urnmax::ballot
