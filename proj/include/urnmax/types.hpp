#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace urnmax {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative method fails to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two analytic routes for the same quantity disagreed beyond tolerance.
class RouteMismatch : public std::runtime_error {
 public:
  RouteMismatch(const std::string& what, double first, double second)
      : std::runtime_error(what), first_(first), second_(second) {}
  double first() const { return first_; }
  double second() const { return second_; }

 private:
  double first_;
  double second_;
};

enum class Method { closed_form, series, quadrature, roots, oracle, monte_carlo };

std::string_view to_string(Method m);

/// A probability together with an absolute error bound and the route that produced it.
struct ProbResult {
  double value = 0.0;
  double error_bound = 0.0;
  Method method = Method::closed_form;

  /// Clips value into [0,1] and makes the error bound nonnegative.
  static ProbResult make(double value, double error_bound, Method method);
};

/// Exact nonnegative-denominator rational in lowest terms.
class Ratio {
 public:
  Ratio(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Reduced rational s/t with 0 < s < t, the point at which distributions are evaluated.
class Threshold {
 public:
  Threshold(std::int64_t s, std::int64_t t);

  /// Parses "s/t" (or a plain decimal-free integer pair); the fraction is reduced.
  static Threshold parse(std::string_view text);

  std::int64_t s() const { return s_; }
  std::int64_t t() const { return t_; }
  double value() const { return static_cast<double>(s_) / static_cast<double>(t_); }
  Ratio ratio() const { return Ratio(s_, t_); }
  std::string str() const;

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  std::int64_t s_;
  std::int64_t t_;
};

/// Shifted averaged Bernoulli walk: sup over n >= 1 of (r + S_n) / (r + b + n).
struct WalkParams {
  double p = 0.5;
  int r = 0;
  int b = 0;

  void validate() const;
};

/// Polya urn with r red, b black balls and d balls added per draw.
struct UrnParams {
  int r = 1;
  int b = 1;
  int d = 1;

  void validate() const;
};

}  // namespace urnmax
