#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace dkp {

/// Exact non-negative rational carried as whole + num/den with 0 <= num < den
/// and gcd(num, den) == 1. Used for LP upper bounds so that floor() and
/// equality are exact; the double conversion exists for display only.
class UpperBound {
 public:
  UpperBound() = default;
  explicit UpperBound(uint64_t whole) : whole_(whole) {}

  /// base + num/den, normalized. Throws on a zero denominator.
  static UpperBound with_fraction(uint64_t base, uint64_t num, uint64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator in upper bound");
    UpperBound u;
    u.whole_ = base + num / den;
    if (u.whole_ < base) throw std::overflow_error("upper bound overflow");
    u.num_ = num % den;
    u.den_ = den;
    u.normalize();
    return u;
  }

  uint64_t floor() const { return whole_; }
  bool integral() const { return num_ == 0; }
  uint64_t whole() const { return whole_; }
  uint64_t num() const { return num_; }
  uint64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(whole_) + static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend bool operator==(const UpperBound& a, const UpperBound& b) {
    return a.whole_ == b.whole_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (num_ == 0) {
      den_ = 1;
    } else {
      const uint64_t g = std::gcd(num_, den_);
      num_ /= g;
      den_ /= g;
    }
  }

  uint64_t whole_ = 0;
  uint64_t num_ = 0;
  uint64_t den_ = 1;
};

/// a*b with overflow detection, for products that must stay within 64 bits.
inline uint64_t checked_mul_u64(uint64_t a, uint64_t b) {
  uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("64-bit product overflow");
  }
  return out;
}

}  // namespace dkp
