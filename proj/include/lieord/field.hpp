#pragma once

#include <cstdint>
#include <string>

#include "lieord/bigint.hpp"

namespace lieord {

/// Exact rational scalar.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigRational v) : v_(std::move(v)) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Integer n in the same field.
  Rational make(long n) const { return Rational(n); }
  const BigRational& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  Rational inverse() const;
  std::string to_string() const { return v_.str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this *= o.inverse(); }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(BigRational(-a.v_)); }
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  BigRational v_;
};

/// Element of the prime field F_p, p >= 5 prime and below 2^31.
class Fp {
 public:
  Fp(std::int64_t p, std::int64_t value);

  Fp make(long n) const { return Fp(p_, n); }
  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  Fp inverse() const;
  std::string to_string() const { return std::to_string(v_) + " mod " + std::to_string(p_); }

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a) { return Fp(a.p_, a.p_ - a.v_, Raw{}); }
  /// FieldMismatch across moduli.
  friend bool operator==(const Fp& a, const Fp& b);

 private:
  struct Raw {};
  Fp(std::int64_t p, std::int64_t reduced, Raw) : p_(p), v_(reduced == p ? 0 : reduced) {}
  void same_field(const Fp& o) const;
  std::int64_t p_;
  std::int64_t v_;
};

}  // namespace lieord
