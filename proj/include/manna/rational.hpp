#pragma once

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "manna/errors.hpp"

namespace manna {

// Exact rational number in canonical reduced form (gcd(|num|, den) = 1,
// den > 0). Backed by 64-bit integers with 128-bit intermediates; any result
// that does not fit 64 bits raises Errc::Overflow instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) { *this = make(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  // Accepts an optional sign, digits, and an optional "/digits" suffix.
  static Rational parse(std::string_view text) {
    std::string_view t = trim(text);
    if (t.empty()) fail(Errc::Parse, "empty rational literal");
    std::size_t slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(t), 1);
    long long n = parse_int(trim(t.substr(0, slash)));
    long long d = parse_int(trim(t.substr(slash + 1)));
    if (d == 0) fail(Errc::Parse, "zero denominator in \"" + std::string(text) + "\"");
    return Rational(n, d);
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
    if (b.num_ == 0) fail(Errc::Overflow, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using i128 = __int128;
  using u128 = unsigned __int128;

  long long num_ = 0;
  long long den_ = 1;

  static u128 uabs(i128 v) { return v < 0 ? u128(-v) : u128(v); }

  static u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static int cmp(const Rational& a, const Rational& b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }

  static Rational make(i128 num, i128 den) {
    if (den == 0) fail(Errc::Overflow, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return Rational();
    u128 g = gcd128(uabs(num), u128(den));
    num /= i128(g);
    den /= i128(g);
    constexpr i128 kMax = i128(INT64_MAX);
    constexpr i128 kMin = -kMax - 1;
    if (num > kMax || num < kMin || den > kMax) {
      fail(Errc::Overflow, "rational exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  }

  static long long parse_int(std::string_view s) {
    if (s.empty()) fail(Errc::Parse, "empty integer literal");
    if (s.front() == '+') s.remove_prefix(1);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail(Errc::Parse, "bad integer literal \"" + std::string(s) + "\"");
    }
    return value;
  }
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

}  // namespace manna
