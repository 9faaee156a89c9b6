#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "lexshell/errors.hpp"

namespace lexshell {

/// Exact rational scalar. Parallel-ideal arithmetic stays within tiny
/// integers (binomial generators reduce to {-1,0,1} coefficients), so a
/// 64-bit numerator/denominator with an overflow guard is sufficient.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n) {}
  Rat(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) fail(Errc::validation_error, "rational with zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Rat operator-() const { return Rat(-num_, den_, tag{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) fail(Errc::validation_error, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;
  struct tag {};
  Rat(long long n, long long d, tag) : num_(n), den_(d) {}

  static Rat make(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      fail(Errc::validation_error, "rational overflow");
    return Rat((long long)n, (long long)d, tag{});
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void normalize() {
    Rat r = make(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace lexshell
