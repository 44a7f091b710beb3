#pragma once

#include <cmath>
#include <limits>

namespace s2g {

/// Nonnegative extended real stored as its logarithm; zero is log = -inf.
class LogReal {
 public:
  constexpr LogReal() = default;
  static LogReal from_log(double log_value) { return LogReal(log_value); }
  static LogReal from_value(double v) { return LogReal(v > 0 ? std::log(v) : -infinity()); }
  static LogReal zero() { return LogReal(-infinity()); }

  double log() const { return log_; }
  double value() const { return std::exp(log_); }
  bool is_zero() const { return log_ == -infinity(); }

  LogReal operator*(LogReal o) const { return LogReal(log_ + o.log_); }
  LogReal operator/(LogReal o) const { return LogReal(log_ - o.log_); }
  LogReal pow(double e) const { return is_zero() ? *this : LogReal(e * log_); }

  auto operator<=>(const LogReal&) const = default;

 private:
  constexpr explicit LogReal(double l) : log_(l) {}
  static constexpr double infinity() { return std::numeric_limits<double>::infinity(); }

  double log_ = -std::numeric_limits<double>::infinity();
};

}  // namespace s2g
