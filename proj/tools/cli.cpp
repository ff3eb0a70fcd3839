#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "records.hpp"
#include "urnmax/ballot.hpp"
#include "urnmax/polya.hpp"
#include "urnmax/tree_fn.hpp"
#include "urnmax/urnsim.hpp"
#include "urnmax/walk_max.hpp"

namespace urnmax::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

long parse_long(const std::string& s) {
  long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

double parse_real(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const double den = static_cast<double>(parse_long(s.substr(slash + 1)));
    if (den == 0.0) throw UsageError("zero denominator in '" + s + "'");
    return static_cast<double>(parse_long(s.substr(0, slash))) / den;
  }
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<Threshold> parse_thresholds(const std::string& text) {
  std::vector<Threshold> out;
  for (const auto& part : split(text, ',')) {
    try {
      out.push_back(Threshold::parse(part));
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad threshold: ") + e.what());
    }
  }
  if (out.empty()) throw UsageError("expected at least one threshold s/t");
  return out;
}

std::vector<int> ints_or(const std::string& text, std::vector<int> fallback) {
  return text.empty() ? fallback : parse_int_list(text);
}

std::string kv(std::initializer_list<std::pair<const char*, std::string>> items) {
  std::string out;
  for (const auto& [k, v] : items) {
    if (!out.empty()) out += ';';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

std::string num(double v) { return format_number(v); }
std::string num(long v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

OutputRecord record(std::string quantity, std::string params, const ProbResult& r, std::string reference = "") {
  return {std::move(quantity), std::move(params), r.value, r.error_bound, std::string(to_string(r.method)),
          std::move(reference), std::nullopt};
}

bool has_failure(const std::vector<OutputRecord>& recs) {
  return std::any_of(recs.begin(), recs.end(),
                     [](const OutputRecord& r) { return r.reference.find("FAIL") != std::string::npos; });
}

// Evaluates jobs concurrently; results keep job order and the first error in order is rethrown.
std::vector<OutputRecord> run_jobs(const std::vector<std::function<std::vector<OutputRecord>()>>& jobs) {
  std::vector<std::vector<OutputRecord>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, jobs.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<OutputRecord> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.insert(out.end(), results[i].begin(), results[i].end());
  }
  return out;
}

using Job = std::function<std::vector<OutputRecord>()>;

struct ExactArgs {
  std::string subject, p, t, x, r, b, d, a;
};

std::vector<Job> exact_jobs(const ExactArgs& o) {
  std::vector<Job> jobs;
  const auto ps = o.p.empty() ? std::vector<double>{0.5} : parse_real_list(o.p);
  auto need_x = [&]() {
    if (o.x.empty()) throw UsageError(o.subject + " needs --x s/t");
    return parse_thresholds(o.x);
  };
  auto need_t = [&]() {
    if (o.t.empty()) throw UsageError(o.subject + " needs --t");
    return parse_int_list(o.t);
  };
  const std::string& s = o.subject;

  if (s == "walk-sup-cdf" || s == "walk-point-mass" || s == "walk-inf-cdf") {
    for (double p : ps)
      for (const auto& x : need_x())
        for (int r : ints_or(o.r, {0}))
          for (int b : ints_or(o.b, {0}))
            jobs.push_back([=]() -> std::vector<OutputRecord> {
              const WalkParams w{p, r, b};
              const std::string params = kv({{"p", num(p)}, {"r", num(r)}, {"b", num(b)}, {"x", x.str()}});
              if (s == "walk-sup-cdf") return {record("walk_sup_cdf", params, walk::sup_cdf(w, x))};
              if (s == "walk-point-mass") return {record("walk_point_mass", params, walk::sup_point_mass(w, x))};
              return {record("walk_inf_cdf", params, walk::inf_cdf(w, x))};
            });
  } else if (s == "walk-sup-tail") {
    for (double p : ps)
      for (int t : need_t())
        for (int r : ints_or(o.r, {0}))
          for (int b : ints_or(o.b, {0}))
            jobs.push_back([=]() -> std::vector<OutputRecord> {
              const WalkParams w{p, r, b};
              const std::string params = kv({{"p", num(p)}, {"r", num(r)}, {"b", num(b)}, {"t", num(t)}});
              return {record("walk_sup_tail", params, walk::sup_tail_high(w, t))};
            });
  } else if (s == "walk-equidist") {
    for (double p : ps)
      for (int t : need_t())
        jobs.push_back([=]() {
          std::vector<OutputRecord> recs;
          const std::string ratio = "p/q=" + num(p / (1.0 - p));
          for (int k = 1; k < t; ++k) {
            recs.push_back(record("walk_equidist_interval", kv({{"p", num(p)}, {"k", num(k)}}),
                                  walk::equidist_interval(p, k), ratio));
          }
          recs.push_back(record("walk_equidist_residual", kv({{"p", num(p)}, {"t", num(t)}}),
                                walk::equidist_residual(p, t), "(1-tp)/q=" + num((1.0 - t * p) / (1.0 - p))));
          return recs;
        });
  } else if (s == "urn-sup-tail") {
    for (int r : ints_or(o.r, {1}))
      for (int b : ints_or(o.b, {1}))
        for (int d : ints_or(o.d, {1}))
          for (int t : need_t())
            jobs.push_back([=]() -> std::vector<OutputRecord> {
              const UrnParams u{r, b, d};
              const auto series = urn::sup_tail_series(u, t);
              return {record("urn_sup_tail", kv({{"r", num(r)}, {"b", num(b)}, {"d", num(d)}, {"t", num(t)}}),
                             urn::sup_tail_mixture(u, t), "series=" + num(series.value))};
            });
  } else if (s == "urn-cdf") {
    for (int r : ints_or(o.r, {1}))
      for (int b : ints_or(o.b, {1}))
        for (const auto& x : need_x())
          jobs.push_back([=]() -> std::vector<OutputRecord> {
            const UrnParams u{r, b, 1};
            return {record("urn_cdf", kv({{"r", num(r)}, {"b", num(b)}, {"d", "1"}, {"x", x.str()}}),
                           urn::general_cdf(u, x))};
          });
  } else if (s == "s11" || s == "s11-point-mass" || s == "q-minus" || s == "s1t") {
    for (int t : need_t())
      jobs.push_back([=]() -> std::vector<OutputRecord> {
        const std::string params = kv({{"t", num(t)}});
        if (s == "s11") {
          const auto v = urn::s11_cdf(t);
          return {record("s11_cdf", params, v, t == 2 ? "1-ln2=" + num(1.0 - std::numbers::ln2) : "")};
        }
        if (s == "s11-point-mass") return {record("s11_point_mass", params, urn::s11_point_mass(t))};
        if (s == "s1t") {
          return {record("s1t_cdf", params, urn::s_1_tm1_cdf(t),
                         "quadrature=" + num(urn::s_1_tm1_quadrature(t).value))};
        }
        std::string ref;
        if (t == 2) ref = "ln2=" + num(std::numbers::ln2);
        if (t == 3) ref = "4pi*sqrt3/27=" + num(4.0 * std::numbers::pi * std::numbers::sqrt3 / 27.0);
        if (t == 4) ref = "(9/32)ln2+(27/128)pi=" + num(9.0 / 32.0 * std::numbers::ln2 + 27.0 / 128.0 * std::numbers::pi);
        return {record("q_minus", params, urn::q_minus(t), ref)};
      });
  } else if (s == "sa") {
    if (o.a.empty()) throw UsageError("sa needs --a");
    for (int a : parse_int_list(o.a))
      for (int t : ints_or(o.t, {2}))
        jobs.push_back([=]() -> std::vector<OutputRecord> {
          return {record("sa_cdf", kv({{"a", num(a)}, {"t", num(t)}}), urn::s_a_cdf(a, t),
                         "quadrature=" + num(urn::s_a_quadrature(a, t).value))};
        });
  } else if (s == "equalization") {
    if (o.r.empty() || o.b.empty()) throw UsageError("equalization needs --r and --b");
    for (int r : parse_int_list(o.r))
      for (int b : parse_int_list(o.b))
        jobs.push_back([=]() -> std::vector<OutputRecord> {
          const auto e = urn::equalization(r, b);
          return {record("equalization", kv({{"r", num(r)}, {"b", num(b)}}), e.value,
                         e.trivially_one ? "b<=r" : "mixture=" + num(e.mixture))};
        });
  } else {
    throw UsageError("unknown subject '" + s + "'");
  }
  return jobs;
}

struct OracleArgs {
  std::string kind, n, t, a, k, p, x, r, b;
  int horizon = 4000;
};

std::string big(const ballot::BigInt& v) { return v.str(); }

std::vector<Job> oracle_jobs(const OracleArgs& o) {
  std::vector<Job> jobs;
  if (o.kind == "ballot") {
    for (int n : ints_or(o.n, {3}))
      for (int t : ints_or(o.t, {2}))
        for (int a : ints_or(o.a, {0})) {
          if (n > 30 || t > 30 || a > 200) throw UsageError("ballot oracle limited to n <= 30, t <= 30, a <= 200");
          jobs.push_back([=]() -> std::vector<OutputRecord> {
            const auto dp = ballot::dp_paths_below(n, t, a);
            const auto formula = ballot::ballot_count(n, t, a);
            return {{"ballot_count", kv({{"n", num(n)}, {"t", num(t)}, {"a", num(a)}}), formula.convert_to<double>(),
                     0.0, "oracle",
                     "dp=" + big(dp) + " formula=" + big(formula) + (dp == formula ? " PASS" : " FAIL"),
                     std::nullopt}};
          });
        }
  } else if (o.kind == "barbier") {
    for (int k : ints_or(o.k, {1}))
      for (int n : ints_or(o.n, {3}))
        for (int t : ints_or(o.t, {2})) {
          if (n + k > 60) throw UsageError("barbier oracle limited to n + k <= 60");
          jobs.push_back([=]() -> std::vector<OutputRecord> {
            const auto dp = ballot::barbier_dp_count(k, n, t);
            const auto formula = ballot::barbier_count(k, n, t);
            return {{"barbier_count", kv({{"k", num(k)}, {"n", num(n)}, {"t", num(t)}}), formula.convert_to<double>(),
                     0.0, "oracle",
                     "dp=" + big(dp) + " formula=" + big(formula) + (dp == formula ? " PASS" : " FAIL"),
                     std::nullopt}};
          });
        }
  } else if (o.kind == "bracket") {
    if (o.horizon < 1 || o.horizon > 100000) throw UsageError("bracket oracle needs 1 <= N <= 100000");
    if (o.x.empty()) throw UsageError("bracket needs --x s/t");
    const auto ps = o.p.empty() ? std::vector<double>{0.5} : parse_real_list(o.p);
    const int horizon = o.horizon;
    for (double p : ps)
      for (const auto& x : parse_thresholds(o.x))
        for (int r : ints_or(o.r, {0}))
          for (int b : ints_or(o.b, {0}))
            jobs.push_back([=]() -> std::vector<OutputRecord> {
              const auto exact = walk::sup_cdf(WalkParams{p, r, b}, x);
              const auto br = ballot::finite_horizon_sup_cdf(r, b, p, x, horizon);
              const bool inside = br.lower - 1e-12 <= exact.value && exact.value <= br.upper + 1e-12;
              return {{"walk_sup_cdf_bracket",
                       kv({{"p", num(p)}, {"r", num(r)}, {"b", num(b)}, {"x", x.str()}, {"N", num(horizon)}}),
                       exact.value, br.upper - br.lower, "oracle",
                       "lower=" + num(br.lower) + " upper=" + num(br.upper) + (inside ? " PASS" : " FAIL"),
                       std::nullopt}};
            });
  } else {
    throw UsageError("unknown oracle '" + o.kind + "' (ballot, barbier, bracket)");
  }
  return jobs;
}

struct SimArgs {
  int r = 1, b = 1, d = 1;
  std::string x;
  long reps = 200000;
  long horizon = 10000;
  std::uint64_t seed = 42;
  std::uint64_t stream = 0;
  bool both = false;
  std::string method = "urn";
};

struct Analytic {
  bool known = false;
  double tail = 0.0;  // P(S > x)
  double bias = 0.0;  // P(S > x) - P(max_{n <= N} Z_n > x)
  bool bias_known = false;
};

Analytic analytic_tail(const UrnParams& u, const Ratio& x, long horizon) {
  Analytic out;
  if (x.num() <= 0 || x.num() >= x.den()) return out;
  const Threshold th(x.num(), x.den());
  if (u.d == 1) {
    out.tail = 1.0 - urn::general_cdf(u, th).value;
    out.known = true;
  } else if (th.s() == th.t() - 1 && static_cast<std::int64_t>(u.b) * (th.t() - 1) >= u.r) {
    out.tail = urn::sup_tail_series(u, static_cast<int>(th.t())).value;
    out.known = true;
  }
  if (out.known && horizon <= 20000) {
    const double finite_cdf = ballot::finite_horizon_urn_cdf(u, th, static_cast<int>(horizon));
    out.bias = std::max(0.0, finite_cdf - (1.0 - out.tail));
    out.bias_known = true;
  }
  return out;
}

std::vector<OutputRecord> simulate_records(const SimArgs& o) {
  if (o.x.empty()) throw UsageError("simulate needs --x");
  const auto slash = o.x.find('/');
  const Ratio x = slash == std::string::npos ? Ratio(parse_long(o.x), 1)
                                             : Ratio(parse_long(o.x.substr(0, slash)), parse_long(o.x.substr(slash + 1)));
  const UrnParams u{o.r, o.b, o.d};
  u.validate();
  const sim::SimConfig c{o.horizon, o.reps, o.seed, o.stream};
  c.validate();
  const Analytic an = analytic_tail(u, x, o.horizon);
  const std::string params = kv({{"r", num(o.r)}, {"b", num(o.b)}, {"d", num(o.d)}, {"x", x.str()},
                                 {"N", num(o.horizon)}, {"reps", num(o.reps)}});
  auto describe = [&](const sim::SimSummary& s) {
    if (!an.known) return std::string();
    std::string ref = "analytic=" + num(an.tail);
    if (an.bias_known) {
      const bool ok = std::abs(s.estimate - an.tail) <= 3.0 * s.std_error + an.bias + 1e-12;
      ref += " bias=" + num(an.bias) + (ok ? " PASS" : " FAIL");
    }
    return ref;
  };
  auto rec = [&](const char* name, const sim::SimSummary& s) {
    return OutputRecord{name, params, s.estimate, s.std_error, "monte_carlo", describe(s), o.seed};
  };

  std::vector<OutputRecord> out;
  if (o.both) {
    const auto a = sim::simulate_urn(u, c, x);
    const auto b = sim::simulate_beta_bernoulli(u, c, x);
    out.push_back(rec("urn_mc_tail", a));
    out.push_back(rec("beta_bernoulli_mc_tail", b));
    const double diff = std::abs(a.estimate - b.estimate);
    const double band = 3.0 * std::hypot(a.std_error, b.std_error);
    out.push_back({"mc_agreement", params, diff, band, "monte_carlo", diff <= band ? "PASS" : "FAIL", o.seed});
  } else if (o.method == "urn") {
    out.push_back(rec("urn_mc_tail", sim::simulate_urn(u, c, x)));
  } else if (o.method == "beta") {
    out.push_back(rec("beta_bernoulli_mc_tail", sim::simulate_beta_bernoulli(u, c, x)));
  } else {
    throw UsageError("unknown --method '" + o.method + "' (urn, beta)");
  }
  return out;
}

std::string verdict(double value, double target, double tol) {
  return "stated=" + num(target) + " tol=" + num(tol) + (std::abs(value - target) <= tol ? " PASS" : " FAIL");
}

std::vector<OutputRecord> paper_table() {
  std::vector<OutputRecord> out;
  const double half = 0.5;
  const std::vector<std::pair<int, double>> atoms{{3, 0.618034}, {4, 0.543689}, {5, 0.518790}, {6, 0.50866}, {7, 0.504138}};
  for (const auto& [t, stated] : atoms) {
    const double tol = t == 6 ? 5e-5 : 5e-6;
    const double R = tree::tree_R(t, half);
    out.push_back({"R_t", kv({{"p", "0.5"}, {"t", num(t)}}), R, 1e-14, "closed_form", verdict(R, stated, tol), std::nullopt});
  }
  const auto tail67 = walk::sup_tail_high(WalkParams{half, 0, 0}, 7);
  out.push_back(record("walk_sup_tail", kv({{"p", "0.5"}, {"r", "0"}, {"b", "0"}, {"x", "6/7"}}), tail67,
                       verdict(tail67.value, 0.504138, 5e-6)));

  // sup S_n/(n+1) around 2/3: strict and weak tails against a horizon-4000 oracle.
  const Threshold two_thirds(2, 3);
  const WalkParams w01{half, 0, 1};
  const double strict_tail = 1.0 - walk::sup_cdf(w01, two_thirds).value;
  const double weak_tail = strict_tail + walk::sup_point_mass(w01, two_thirds).value;
  const auto br_le = ballot::finite_horizon_sup_cdf(0, 1, half, two_thirds, 4000);
  const auto br_lt = ballot::finite_horizon_sup_cdf_strict(0, 1, half, two_thirds, 4000);
  const bool strict_ok = 1.0 - br_le.upper - 1e-12 <= strict_tail && strict_tail <= 1.0 - br_le.lower + 1e-12;
  const bool weak_ok = 1.0 - br_lt.upper - 1e-12 <= weak_tail && weak_tail <= 1.0 - br_lt.lower + 1e-12;
  out.push_back({"walk_sup_tail_strict", kv({{"p", "0.5"}, {"r", "0"}, {"b", "1"}, {"x", "2/3"}}), strict_tail, 1e-13,
                 "closed_form",
                 "oracle=[" + num(1.0 - br_le.upper) + "," + num(1.0 - br_le.lower) + "]" + (strict_ok ? " PASS" : " FAIL"),
                 std::nullopt});
  const double stated = 0.381937;
  const bool weak_nearest = std::abs(weak_tail - stated) < std::abs(strict_tail - stated);
  out.push_back({"walk_sup_tail_weak", kv({{"p", "0.5"}, {"r", "0"}, {"b", "1"}, {"x", "2/3"}}), weak_tail, 1e-13,
                 "closed_form",
                 "oracle=[" + num(1.0 - br_lt.upper) + "," + num(1.0 - br_lt.lower) + "]" + (weak_ok ? " PASS" : " FAIL") +
                     " ADJUDICATED stated=0.381937 matches the " + (weak_nearest ? "weak" : "strict") +
                     " event to " + num(std::abs((weak_nearest ? weak_tail : strict_tail) - stated)),
                 std::nullopt});

  const std::vector<std::pair<int, double>> exact_q{
      {2, std::numbers::ln2},
      {3, 4.0 * std::numbers::pi * std::numbers::sqrt3 / 27.0},
      {4, 9.0 / 32.0 * std::numbers::ln2 + 27.0 / 128.0 * std::numbers::pi}};
  for (const auto& [t, target] : exact_q) {
    const auto q = urn::q_minus(t);
    out.push_back(record("q_minus", kv({{"t", num(t)}}), q, verdict(q.value, target, 1e-6)));
  }
  for (const auto& [t, target] : std::vector<std::pair<int, double>>{{5, 0.8874}, {6, 0.9068}, {20, 0.9726}}) {
    const auto q = urn::q_minus(t);
    out.push_back(record("q_minus", kv({{"t", num(t)}}), q, verdict(q.value, target, 5e-4)));
  }
  const auto s11 = urn::s11_cdf(2);
  out.push_back(record("s11_cdf", kv({{"t", "2"}}), s11, verdict(s11.value, 1.0 - std::numbers::ln2, 1e-12)));
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<int>(parse_long(part)));
      continue;
    }
    const long lo = parse_long(part.substr(0, dots));
    const long hi = parse_long(part.substr(dots + 2));
    if (hi < lo || hi - lo > 100000) throw UsageError("bad range '" + part + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_real(part));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal red fraction of Polya urns and maxima of Bernoulli walk averages", "urnmax"};
  app.require_subcommand(1);
  std::string format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table, csv or jsonl")->envname("URNMAX_FORMAT");
  };

  ExactArgs ex;
  auto* exact = app.add_subcommand("exact", "Analytic values");
  exact->add_option("subject", ex.subject,
                    "walk-sup-cdf, walk-sup-tail, walk-point-mass, walk-equidist, walk-inf-cdf, urn-sup-tail, "
                    "urn-cdf, s11, s11-point-mass, q-minus, s1t, sa, equalization")
      ->required();
  exact->add_option("--p", ex.p, "success probabilities, e.g. 0.1,1/4");
  exact->add_option("--t", ex.t, "integers or ranges, e.g. 2..5");
  exact->add_option("--x", ex.x, "thresholds s/t, comma separated");
  exact->add_option("--r", ex.r, "red balls or walk offset r");
  exact->add_option("--b", ex.b, "black balls or walk offset b");
  exact->add_option("--d", ex.d, "balls added per draw");
  exact->add_option("--a", ex.a, "a for the S_{a,a(t-1)} family");
  add_format(exact);

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Brute-force counts and finite-horizon brackets");
  oracle->add_option("kind", orc.kind, "ballot, barbier or bracket")->required();
  oracle->add_option("--n", orc.n);
  oracle->add_option("--t", orc.t);
  oracle->add_option("--a", orc.a);
  oracle->add_option("--k", orc.k);
  oracle->add_option("--p", orc.p);
  oracle->add_option("--x", orc.x);
  oracle->add_option("--r", orc.r);
  oracle->add_option("--b", orc.b);
  oracle->add_option("--N,--horizon", orc.horizon, "walk horizon for brackets");
  add_format(oracle);

  SimArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of P(S > x)");
  simulate->add_option("--r", sa.r);
  simulate->add_option("--b", sa.b);
  simulate->add_option("--d", sa.d);
  simulate->add_option("--x", sa.x, "threshold a/b")->required();
  simulate->add_option("--reps", sa.reps)->envname("URNMAX_REPS");
  simulate->add_option("--horizon,--N", sa.horizon)->envname("URNMAX_HORIZON");
  simulate->add_option("--seed", sa.seed)->envname("URNMAX_SEED");
  simulate->add_option("--stream", sa.stream)->envname("URNMAX_STREAM");
  simulate->add_option("--method", sa.method, "urn or beta");
  simulate->add_flag("--both", sa.both, "run both representations and compare");
  add_format(simulate);

  auto* table = app.add_subcommand("paper-table", "Reference constants with PASS/FAIL");
  add_format(table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "urnmax: " << e.what() << '\n';
    return 1;
  }

  try {
    const Format fmt = parse_format(format);
    std::vector<OutputRecord> recs;
    if (exact->parsed()) {
      recs = run_jobs(exact_jobs(ex));
    } else if (oracle->parsed()) {
      recs = run_jobs(oracle_jobs(orc));
    } else if (simulate->parsed()) {
      recs = simulate_records(sa);
    } else {
      recs = paper_table();
    }
    write_records(out, recs, fmt);
    return has_failure(recs) ? 2 : 0;
  } catch (const UsageError& e) {
    err << "urnmax: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "urnmax: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "urnmax: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "urnmax: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace urnmax::cli
