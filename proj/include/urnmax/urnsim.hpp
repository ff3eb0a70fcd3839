#pragma once

#include <cstdint>
#include <vector>

#include "urnmax/types.hpp"

namespace urnmax::sim {

struct SimConfig {
  std::int64_t horizon = 10000;
  std::int64_t replications = 200000;
  std::uint64_t seed = 42;
  std::uint64_t stream_id = 0;

  void validate() const;
};

struct SimSummary {
  /// Fraction of replications whose running max over draws 0..horizon exceeds x.
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t hits = 0;
  std::int64_t replications = 0;
  /// Filled by estimate_attainment only: fraction whose running max was last
  /// improved before horizon/2, fraction improving in the final tenth, and the
  /// largest improvement time seen.
  double attained_fraction = 0.0;
  double late_fraction = 0.0;
  std::int64_t max_attain_time = 0;

  friend bool operator==(const SimSummary&, const SimSummary&) = default;
};

/// Sequential urn draws; red with probability (r + d k)/(r + b + n d) after n draws.
/// Z_0 = r/(r+b) counts toward the running max. Ratios are compared exactly.
SimSummary simulate_urn(const UrnParams& u, const SimConfig& c, const Ratio& x);

/// Z ~ Beta(r/d, b/d), then iid Bernoulli(Z) draws with the same bookkeeping.
SimSummary simulate_beta_bernoulli(const UrnParams& u, const SimConfig& c, const Ratio& x);

/// Largest |urn path probability - Beta ratio| over all 2^n draw words.
double exact_fdd_check(const UrnParams& u, int n);

struct AttainmentReport {
  SimSummary summary;
  /// Running max of each replication as an exact reduced ratio (first `keep` replications).
  std::vector<Ratio> maxima;
};

/// Full-horizon urn paths recording when the running max last improved.
AttainmentReport estimate_attainment(const UrnParams& u, const SimConfig& c, std::size_t keep = 0);

struct LimitSample {
  double z = 0.0;
  double z_horizon = 0.0;
};

/// Beta-Bernoulli replications returning the mixing Z and Z_horizon.
std::vector<LimitSample> sample_limits(const UrnParams& u, const SimConfig& c);

}  // namespace urnmax::sim
