#include "urnmax/types.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace urnmax {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::series: return "series";
    case Method::quadrature: return "quadrature";
    case Method::roots: return "roots";
    case Method::oracle: return "oracle";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

ProbResult ProbResult::make(double value, double error_bound, Method method) {
  if (std::isnan(value)) throw NumericalError("probability evaluated to NaN");
  ProbResult out;
  out.value = std::clamp(value, 0.0, 1.0);
  out.error_bound = std::isfinite(error_bound) ? std::abs(error_bound) : 1.0;
  out.method = method;
  return out;
}

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("ratio with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

std::string Ratio::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  // Denominators are positive; the products stay far below 2^63 for the sizes used here.
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Threshold::Threshold(std::int64_t s, std::int64_t t) {
  if (s <= 0 || t <= 0 || s >= t) {
    throw DomainError("threshold s/t must satisfy 0 < s < t, got " + std::to_string(s) + "/" +
                      std::to_string(t));
  }
  const std::int64_t g = std::gcd(s, t);
  s_ = s / g;
  t_ = t / g;
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Threshold Threshold::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw DomainError("threshold must be written as s/t, got '" + std::string(text) + "'");
  }
  return Threshold(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Threshold::str() const { return std::to_string(s_) + "/" + std::to_string(t_); }

void WalkParams::validate() const {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("walk probability must lie in (0,1)");
  if (r < 0 || b < 0) throw DomainError("walk offsets r, b must be nonnegative");
}

void UrnParams::validate() const {
  if (r < 1 || b < 1 || d < 1) throw DomainError("urn parameters r, b, d must be positive");
}

}  // namespace urnmax
