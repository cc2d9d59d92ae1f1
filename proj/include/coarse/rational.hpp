#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "coarse/error.hpp"

namespace coarse {

// Exact rational on int64 with canonical form: gcd(num, den) = 1, den > 0.
// Intermediates run through __int128 and are range-checked, so arithmetic
// either returns the exact value or throws Overflow.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by intent
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) fail(Errc::invalid_spec, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > max64_ || n < min64_ || d > max64_) fail(Errc::overflow, "rational out of range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  // Accepts "p", "p/q", and plain decimals like "1.25" or "-0.5".
  static Rational parse(std::string_view s);

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Largest integer <= value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(Errc::invalid_spec, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using i128 = __int128;
  static constexpr i128 max64_ = std::numeric_limits<std::int64_t>::max();
  static constexpr i128 min64_ = std::numeric_limits<std::int64_t>::min();

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational Rational::parse(std::string_view s) {
  auto bad = [&]() -> Rational {
    fail(Errc::parse_error, "bad rational '" + std::string(s) + "'");
  };
  if (s.empty()) return bad();
  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) return bad();
  __int128 num = 0, den = 1;
  bool seen_digit = false, in_frac = false, in_den = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      (in_den ? den : num) = (in_den ? den : num) * 10 + (c - '0');
      if (!in_den && in_frac) den *= 10;
      if (num > max64_ * max64_ || den > max64_) return bad();
      seen_digit = true;
    } else if (c == '.' && !in_frac && !in_den) {
      in_frac = true;
    } else if (c == '/' && !in_den && !in_frac && seen_digit) {
      in_den = true;
      den = 0;
      seen_digit = false;
    } else {
      return bad();
    }
  }
  if (!seen_digit || den == 0) return bad();
  return make(neg ? -num : num, den);
}

}  // namespace coarse
