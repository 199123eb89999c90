#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parwall {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; every operation is exact. No floating point anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long long n) : v_(n) {}           // NOLINT
  Rational(const Int& n) : v_(n) {}          // NOLINT
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = backend(num);
    v_ /= backend(den);
  }

  /// Parses "p/q" or "p" (optional leading '-'). Returns nullopt on malformed
  /// input or zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  Int num() const { return numerator(v_); }
  Int den() const { return denominator(v_); }

  bool is_integer() const { return denominator(v_) == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Rational operator-() const { return Rational(backend(-v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(backend(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(backend(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(backend(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(backend(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const;

  /// Decimal rendering with exactly `digits` fractional digits, rounded to
  /// nearest with ties away from zero. Rendering only; never used in math.
  std::string fixed_decimal(int digits) const;

 private:
  using backend = boost::multiprecision::cpp_rational;
  explicit Rational(backend v) : v_(std::move(v)) {}
  backend v_;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<Int> {
    if (s.empty()) return std::nullopt;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
    return Int(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

inline std::string Rational::str() const {
  std::string out = num().str();
  if (!is_integer()) {
    out += '/';
    out += den().str();
  }
  return out;
}

inline std::string Rational::fixed_decimal(int digits) const {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int n = num() * scale * 2;  // doubled so the remainder decides the tie
  Int d = den();
  bool neg = n < 0;
  if (neg) n = -n;
  Int q = n / d;
  Int scaled = q / 2 + (q % 2);  // round half away from zero
  std::string body = scaled.str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  std::string out = neg && scaled != 0 ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out += '.';
    out += body.substr(body.size() - digits);
  }
  return out;
}

inline Int rational_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int rational_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = rational_gcd(a, b);
  Int l = (a / g) * b;
  return l < 0 ? Int(-l) : l;
}

}  // namespace parwall
