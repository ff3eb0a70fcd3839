#include "urnmax/urnsim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "urnmax/numerics.hpp"

namespace urnmax::sim {

namespace {

constexpr std::int64_t kBlock = 4096;

std::mt19937_64 block_engine(const SimConfig& c, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                    static_cast<std::uint32_t>(c.stream_id), static_cast<std::uint32_t>(c.stream_id >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1p-53; }

// Runs body(engine, count) over fixed blocks of replications, spreading blocks
// across threads; each block writes only its own slot, reduced in block order afterwards.
template <class Slot, class Body>
std::vector<Slot> run_blocks(const SimConfig& c, Body body) {
  const std::int64_t blocks = (c.replications + kBlock - 1) / kBlock;
  std::vector<Slot> slots(static_cast<std::size_t>(blocks));
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(hw, blocks));
  auto work = [&](std::int64_t w) {
    for (std::int64_t blk = w; blk < blocks; blk += workers) {
      auto eng = block_engine(c, static_cast<std::uint64_t>(blk));
      const std::int64_t first = blk * kBlock;
      const std::int64_t count = std::min(kBlock, c.replications - first);
      slots[static_cast<std::size_t>(blk)] = body(eng, count);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::int64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  return slots;
}

SimSummary from_hits(std::int64_t hits, std::int64_t reps) {
  SimSummary out;
  out.hits = hits;
  out.replications = reps;
  out.estimate = static_cast<double>(hits) / static_cast<double>(reps);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(reps));
  return out;
}

// x.den (r + d k) > x.num (r + b + n d)
struct Exceed {
  __int128 num, den;
  bool operator()(std::int64_t reds, std::int64_t total) const {
    return den * reds > num * total;
  }
};

template <class Draw>
SimSummary exceedance(const UrnParams& u, const SimConfig& c, const Ratio& x, Draw draw_path) {
  u.validate();
  c.validate();
  if (x.num() >= x.den()) return from_hits(0, c.replications);
  const Exceed above{x.num(), x.den()};
  const auto slots = run_blocks<std::int64_t>(c, [&](std::mt19937_64& eng, std::int64_t count) {
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < count; ++i) hits += draw_path(eng, above) ? 1 : 0;
    return hits;
  });
  std::int64_t hits = 0;
  for (auto h : slots) hits += h;
  return from_hits(hits, c.replications);
}

double sample_beta(std::mt19937_64& eng, double alpha, double beta) {
  std::gamma_distribution<double> ga(alpha, 1.0);
  std::gamma_distribution<double> gb(beta, 1.0);
  const double x = ga(eng);
  const double y = gb(eng);
  return x / (x + y);
}

}  // namespace

void SimConfig::validate() const {
  if (horizon < 1) throw DomainError("simulation horizon must be >= 1");
  if (replications < 1) throw DomainError("replications must be >= 1");
}

SimSummary simulate_urn(const UrnParams& u, const SimConfig& c, const Ratio& x) {
  return exceedance(u, c, x, [&](std::mt19937_64& eng, const Exceed& above) {
    std::int64_t reds = u.r;
    std::int64_t total = u.r + u.b;
    if (above(reds, total)) return true;
    for (std::int64_t n = 1; n <= c.horizon; ++n) {
      if (uniform01(eng) * static_cast<double>(total) < static_cast<double>(reds)) reds += u.d;
      total += u.d;
      if (above(reds, total)) return true;
    }
    return false;
  });
}

SimSummary simulate_beta_bernoulli(const UrnParams& u, const SimConfig& c, const Ratio& x) {
  const double alpha = static_cast<double>(u.r) / u.d;
  const double beta = static_cast<double>(u.b) / u.d;
  return exceedance(u, c, x, [&](std::mt19937_64& eng, const Exceed& above) {
    const double z = sample_beta(eng, alpha, beta);
    std::int64_t reds = u.r;
    std::int64_t total = u.r + u.b;
    if (above(reds, total)) return true;
    for (std::int64_t n = 1; n <= c.horizon; ++n) {
      if (uniform01(eng) < z) reds += u.d;
      total += u.d;
      if (above(reds, total)) return true;
    }
    return false;
  });
}

double exact_fdd_check(const UrnParams& u, int n) {
  u.validate();
  if (n < 0 || n > 20) throw DomainError("exact_fdd_check needs 0 <= n <= 20");
  const double alpha = static_cast<double>(u.r) / u.d;
  const double beta = static_cast<double>(u.b) / u.d;
  const double log_norm = numerics::log_beta(alpha, beta);
  double worst = 0.0;
  for (std::uint32_t word = 0; word < (1u << n); ++word) {
    double path = 1.0;
    int reds = 0;
    for (int j = 0; j < n; ++j) {
      const double total = static_cast<double>(u.r + u.b) + static_cast<double>(j) * u.d;
      const double red = (u.r + static_cast<double>(reds) * u.d) / total;
      if ((word >> j) & 1u) {
        path *= red;
        ++reds;
      } else {
        path *= 1.0 - red;
      }
    }
    const double mixed = std::exp(numerics::log_beta(alpha + reds, n + beta - reds) - log_norm);
    worst = std::max(worst, std::abs(path - mixed));
  }
  return worst;
}

AttainmentReport estimate_attainment(const UrnParams& u, const SimConfig& c, std::size_t keep) {
  u.validate();
  c.validate();
  struct Slot {
    std::int64_t early = 0, late = 0, max_time = 0;
    std::vector<Ratio> maxima;
  };
  const std::int64_t half = c.horizon / 2;
  const std::int64_t late_from = c.horizon - c.horizon / 10;
  auto slots = run_blocks<Slot>(c, [&](std::mt19937_64& eng, std::int64_t count) {
    Slot s;
    for (std::int64_t i = 0; i < count; ++i) {
      std::int64_t reds = u.r;
      std::int64_t total = u.r + u.b;
      std::int64_t best_reds = reds, best_total = total, best_time = 0;
      for (std::int64_t n = 1; n <= c.horizon; ++n) {
        if (uniform01(eng) * static_cast<double>(total) < static_cast<double>(reds)) reds += u.d;
        total += u.d;
        if (static_cast<__int128>(reds) * best_total > static_cast<__int128>(best_reds) * total) {
          best_reds = reds;
          best_total = total;
          best_time = n;
        }
      }
      if (best_time < half) ++s.early;
      if (best_time > late_from) ++s.late;
      s.max_time = std::max(s.max_time, best_time);
      if (s.maxima.size() < keep) s.maxima.emplace_back(best_reds, best_total);
    }
    return s;
  });

  AttainmentReport out;
  std::int64_t early = 0, late = 0;
  for (auto& s : slots) {
    early += s.early;
    late += s.late;
    out.summary.max_attain_time = std::max(out.summary.max_attain_time, s.max_time);
    for (auto& m : s.maxima) {
      if (out.maxima.size() < keep) out.maxima.push_back(m);
    }
  }
  const double reps = static_cast<double>(c.replications);
  out.summary.replications = c.replications;
  out.summary.hits = late;
  out.summary.estimate = static_cast<double>(late) / reps;
  out.summary.std_error = std::sqrt(out.summary.estimate * (1.0 - out.summary.estimate) / reps);
  out.summary.attained_fraction = static_cast<double>(early) / reps;
  out.summary.late_fraction = out.summary.estimate;
  return out;
}

std::vector<LimitSample> sample_limits(const UrnParams& u, const SimConfig& c) {
  u.validate();
  c.validate();
  const double alpha = static_cast<double>(u.r) / u.d;
  const double beta = static_cast<double>(u.b) / u.d;
  auto slots = run_blocks<std::vector<LimitSample>>(c, [&](std::mt19937_64& eng, std::int64_t count) {
    std::vector<LimitSample> v;
    v.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
      const double z = sample_beta(eng, alpha, beta);
      std::int64_t reds = u.r;
      for (std::int64_t n = 1; n <= c.horizon; ++n) {
        if (uniform01(eng) < z) reds += u.d;
      }
      const double total = static_cast<double>(u.r + u.b) + static_cast<double>(c.horizon) * u.d;
      v.push_back({z, static_cast<double>(reds) / total});
    }
    return v;
  });
  std::vector<LimitSample> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace urnmax::sim
