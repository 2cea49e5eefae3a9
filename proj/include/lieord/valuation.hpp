#pragma once

#include "lieord/bigint.hpp"

namespace lieord {

/// Exponent of p in m (m != 0).
unsigned ord_p(const BigInt& m, const BigInt& p);

/// p^{ord_p(m)}, the p-contribution to m.
BigInt p_contribution(const BigInt& m, const BigInt& p);

/// Multiplicative order of a modulo a prime p (p must not divide a).
BigInt multiplicative_order(const BigInt& a, const BigInt& p);

/// ord_p(a^n - b^n) via Artin's rules, without expanding a^n - b^n.
///
/// Requires gcd(a, b) = 1 and |a| >= |b| + 1 >= 2. For odd p with f the order
/// of a/b mod p the value is 0 unless f | n, and ord_p(a^f - b^f) + ord_p(n)
/// otherwise. For p = 2 the answer is assembled from the 2-adic contributions
/// of the homogeneous cyclotomic forms Psi_{2^i}(a, b), which depend only on
/// whether a - b or a + b is divisible by 4.
unsigned ord_p_power_diff(const BigInt& p, const BigInt& a, const BigInt& b, unsigned n);

}  // namespace lieord
