#include "lieord/field.hpp"

#include <mutex>
#include <tuple>
#include <set>

#include "lieord/errors.hpp"
#include "lieord/factor.hpp"

namespace lieord {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  v_ = BigRational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(BigRational(1) / v_);
}

namespace {

void check_modulus(std::int64_t p) {
  static std::mutex mutex;
  static std::set<std::int64_t> accepted;
  std::lock_guard lock(mutex);
  if (accepted.contains(p)) return;
  if (p < 5 || p >= (std::int64_t{1} << 31) || !is_prime(BigInt(p))) {
    throw DomainError("F_p requires a prime p with 5 <= p < 2^31, got " + std::to_string(p));
  }
  accepted.insert(p);
}

}  // namespace

Fp::Fp(std::int64_t p, std::int64_t value) : p_(p), v_(0) {
  check_modulus(p);
  v_ = value % p;
  if (v_ < 0) v_ += p;
}

void Fp::same_field(const Fp& o) const {
  if (p_ != o.p_) throw FieldMismatch("F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_) + " mixed");
}

Fp& Fp::operator+=(const Fp& o) {
  same_field(o);
  v_ += o.v_;
  if (v_ >= p_) v_ -= p_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  same_field(o);
  v_ -= o.v_;
  if (v_ < 0) v_ += p_;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  same_field(o);
  v_ = (v_ * o.v_) % p_;
  return *this;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw DomainError("division by zero in F_" + std::to_string(p_));
  // extended Euclid
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  return Fp(p_, x0);
}

bool operator==(const Fp& a, const Fp& b) {
  a.same_field(b);
  return a.v_ == b.v_;
}

}  // namespace lieord
