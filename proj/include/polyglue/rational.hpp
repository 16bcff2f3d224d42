#pragma once

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyglue {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number.
///
/// Values that fit in 64-bit numerator/denominator are kept inline;
/// anything larger is promoted to an arbitrary-precision representation
/// and demoted back as soon as it fits again.  All arithmetic is exact.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(int n) : num_(n), den_(1) {}        // NOLINT

  Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    *this = from_i128((I128)n, (I128)d);
  }

  explicit Rational(const BigRational& v) { assign_big(v); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<BigRational>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<BigRational>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const { return big_ ? big_->is_zero() : num_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
  bool is_small() const { return !big_; }

  int sign() const {
    if (big_) return big_->sign();
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
  }

  /// Value as an arbitrary-precision rational (always valid).
  BigRational to_big() const {
    if (big_) return *big_;
    return BigRational(BigInt(num_), BigInt(den_));
  }

  /// Numerator/denominator when the value fits in 64 bits; throws otherwise.
  long long num64() const {
    if (big_) throw std::overflow_error("Rational::num64: value is big");
    return num_;
  }
  long long den64() const {
    if (big_) throw std::overflow_error("Rational::den64: value is big");
    return den_;
  }

  bool is_integer() const {
    if (big_) return boost::multiprecision::denominator(*big_) == 1;
    return den_ == 1;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_big_auto(a.to_big() + b.to_big());
    // den = ad*(bd/g); num = an*(bd/g) + bn*(ad/g); cannot overflow i128.
    long long g = std::gcd(a.den_, b.den_);
    I128 num = (I128)a.num_ * (b.den_ / g) + (I128)b.num_ * (a.den_ / g);
    I128 den = (I128)a.den_ * (b.den_ / g);
    return from_i128(num, den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_big_auto(a.to_big() - b.to_big());
    long long g = std::gcd(a.den_, b.den_);
    I128 num = (I128)a.num_ * (b.den_ / g) - (I128)b.num_ * (a.den_ / g);
    I128 den = (I128)a.den_ * (b.den_ / g);
    return from_i128(num, den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_big_auto(a.to_big() * b.to_big());
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    long long g1 = std::gcd(std::abs(a.num_), b.den_);
    long long g2 = std::gcd(std::abs(b.num_), a.den_);
    I128 num = (I128)(a.num_ / g1) * (b.num_ / g2);
    I128 den = (I128)(a.den_ / g2) * (b.den_ / g1);
    return from_i128_reduced(num, den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    if (a.big_ || b.big_) return from_big_auto(a.to_big() / b.to_big());
    if (a.num_ == 0) return Rational();
    long long g1 = std::gcd(std::abs(a.num_), std::abs(b.num_));
    long long g2 = std::gcd(std::abs(b.den_), a.den_);
    I128 num = (I128)(a.num_ / g1) * (b.den_ / g2);
    I128 den = (I128)(a.den_ / g2) * (b.num_ / g1);
    return from_i128_sign(num, den);
  }

  Rational operator-() const {
    if (big_) return from_big_auto(-*big_);
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
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_big() == b.to_big();
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return (I128)a.num_ * b.den_ < (I128)b.num_ * a.den_;
    return a.to_big() < b.to_big();
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const {
    if (big_) {
      std::string s = boost::multiprecision::numerator(*big_).str();
      if (boost::multiprecision::denominator(*big_) != 1)
        s += "/" + boost::multiprecision::denominator(*big_).str();
      return s;
    }
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      BigInt n(text);
      return from_big_auto(BigRational(n));
    }
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return from_big_auto(BigRational(n) / BigRational(d));
  }

 private:
  using I128 = __int128;

  static BigInt big_from_i128(I128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    BigInt r = (std::uint64_t)(u >> 64);
    r <<= 64;
    r += (std::uint64_t)(u & 0xFFFFFFFFFFFFFFFFULL);
    return neg ? -r : r;
  }

  static Rational from_big_auto(BigRational v) {
    Rational r;
    r.assign_big(v);
    return r;
  }

  // num/den arbitrary (den > 0 not assumed), not reduced
  static Rational from_i128(I128 num, I128 den) {
    if (num == 0) return Rational();
    if (den < 0) {
      num = -num;
      den = -den;
    }
    I128 a = num < 0 ? -num : num;
    I128 g = a, b = den;
    while (b != 0) {
      I128 t = g % b;
      g = b;
      b = t;
    }
    num /= g;
    den /= g;
    return fit_or_big(num, den);
  }

  // already coprime, den > 0
  static Rational from_i128_reduced(I128 num, I128 den) { return fit_or_big(num, den); }

  // coprime but sign of den unknown
  static Rational from_i128_sign(I128 num, I128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return fit_or_big(num, den);
  }

  static Rational fit_or_big(I128 num, I128 den) {
    Rational r;
    if (num >= INT64_MIN && num <= INT64_MAX && den <= INT64_MAX) {
      r.num_ = (long long)num;
      r.den_ = (long long)den;
    } else {
      r.big_ = std::make_unique<BigRational>(
          BigRational(big_from_i128(num), big_from_i128(den)));
      r.num_ = 0;
      r.den_ = 1;
    }
    return r;
  }

  void assign_big(const BigRational& v) {
    const BigInt& n = boost::multiprecision::numerator(v);
    const BigInt& d = boost::multiprecision::denominator(v);
    if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
      num_ = (long long)n;
      den_ = (long long)d;
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_unique<BigRational>(v);
    }
  }

  long long num_;
  long long den_;
  std::unique_ptr<BigRational> big_;
};

inline Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

}  // namespace polyglue
