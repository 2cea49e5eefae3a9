#include "lieord/valuation.hpp"

#include "lieord/errors.hpp"
#include "lieord/factor.hpp"

namespace lieord {

unsigned ord_p(const BigInt& m, const BigInt& p) {
  if (m == 0) throw DomainError("valuation of 0 is undefined");
  if (p < 2) throw DomainError("valuation base must be >= 2");
  BigInt rest = m < 0 ? BigInt(-m) : m;
  unsigned e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  return e;
}

BigInt p_contribution(const BigInt& m, const BigInt& p) {
  if (m < 1) throw DomainError("p_contribution requires m >= 1");
  return pow(p, ord_p(m, p));
}

BigInt multiplicative_order(const BigInt& a, const BigInt& p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw DomainError("multiplicative order of 0");
  BigInt order = p - 1;
  for (const auto& [q, e] : factorize(p - 1)) {
    for (unsigned i = 0; i < e; ++i) {
      if (boost::multiprecision::powm(r, BigInt(order / q), p) != 1) break;
      order /= q;
    }
  }
  return order;
}

unsigned ord_p_power_diff(const BigInt& p, const BigInt& a, const BigInt& b, unsigned n) {
  if (n == 0) throw DomainError("ord_p_power_diff requires n >= 1");
  if (!is_prime(p)) throw DomainError("ord_p_power_diff requires a prime p");
  const BigInt abs_a = a < 0 ? BigInt(-a) : a;
  const BigInt abs_b = b < 0 ? BigInt(-b) : b;
  if (!(abs_a >= abs_b + 1 && abs_b + 1 >= 2)) throw DomainError("ord_p_power_diff requires |a| >= |b| + 1 >= 2");
  if (boost::multiprecision::gcd(abs_a, abs_b) != 1) throw DomainError("ord_p_power_diff requires gcd(a, b) = 1");
  if (a % p == 0 || b % p == 0) throw DomainError("p divides a or b; p never divides a^n - b^n");

  const BigInt bn(n);
  if (p == 2) {
    // both odd here, f = 1
    const auto mod4 = [](const BigInt& x) {
      BigInt r = x % 4;
      return r < 0 ? BigInt(r + 4) : r;
    };
    const unsigned ord_n = ord_p(bn, p);
    if (mod4(a - b) == 0) {
      // Psi_1 carries ord_2(a - b); each Psi_{2^i}, i >= 1, carries one 2
      return ord_p(a - b, p) + ord_n;
    }
    // a + b = 0 mod 4: Psi_1 and Psi_{2^i} (i >= 2) carry one 2, Psi_2 carries ord_2(a + b)
    if (ord_n == 0) return 1;
    return 1 + ord_p(a + b, p) + (ord_n - 1);
  }

  const BigInt b_inv = [&]() -> BigInt {
    BigInt r = b % p;
    if (r < 0) r += p;
    return boost::multiprecision::powm(r, BigInt(p - 2), p);
  }();
  const BigInt ratio = (((a % p) + p) % p) * b_inv % p;
  const BigInt f = multiplicative_order(ratio, p);
  if (bn % f != 0) return 0;
  const unsigned fu = static_cast<unsigned>(f);
  return ord_p(pow(a, fu) - pow(b, fu), p) + ord_p(bn, p);
}

}  // namespace lieord
