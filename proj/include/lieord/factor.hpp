#pragma once

#include <map>
#include <optional>
#include <utility>

#include "lieord/bigint.hpp"

namespace lieord {

/// Largest input accepted by the factorization routines, in bits.
inline constexpr unsigned kMaxFactorBits = 400;

/// Certified primality: deterministic Miller-Rabin below 3.3e24, a recursive
/// Pocklington certificate above. Throws SizeLimitError when a certificate
/// cannot be produced at desk scale.
bool is_prime(const BigInt& n);

/// Complete factorization prime -> exponent (empty for n = 1).
/// Trial division up to 10^6, then Pollard-Brent rho on the remainder.
std::map<BigInt, unsigned> factorize(const BigInt& n);

/// (p, e) with p^e the largest prime power exactly dividing m.
std::pair<BigInt, unsigned> largest_prime_power_divisor(const BigInt& m);
/// Same, from a known factorization.
std::pair<BigInt, unsigned> largest_prime_power(const std::map<BigInt, unsigned>& factorization);

/// (p, t) with q = p^t, or nullopt if q is not a prime power.
std::optional<std::pair<BigInt, unsigned>> as_prime_power(const BigInt& q);

}  // namespace lieord
