#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace prosopo {

__extension__ using wide_int = __int128;

/// Exact non-negative rational used for supports, shares and rates.
/// Always stored reduced with a positive denominator; 0/0 is represented as 0/1.
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  /// Nearest fraction with denominator 10^9, for thresholds given as decimals (0.3 -> 3/10).
  static Fraction from_decimal(double value);

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend constexpr bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
    const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
    const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

 private:
  constexpr void normalize() {
    if (den_ == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace prosopo
