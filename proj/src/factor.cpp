#include "lieord/factor.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "lieord/errors.hpp"

namespace lieord {
namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  return boost::multiprecision::powm(base, exp, mod);
}

void check_size(const BigInt& n) {
  if (boost::multiprecision::msb(n) + 1 > kMaxFactorBits) {
    throw SizeLimitError("integer exceeds the " + std::to_string(kMaxFactorBits) + "-bit desk-scale limit");
  }
}

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s) {
  BigInt x = powm(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

// Deterministic for n < 3.317e24 with the first thirteen primes as bases.
bool miller_rabin(const BigInt& n, std::span<const unsigned> bases) {
  BigInt d = n - 1;
  unsigned s = 0;
  while (boost::multiprecision::bit_test(d, 0) == false) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : bases) {
    if (BigInt(a) % n == 0) continue;
    if (miller_rabin_witness(n, BigInt(a), d, s)) return false;
  }
  return true;
}

constexpr std::array<unsigned, 13> kDeterministicBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
const BigInt& deterministic_mr_bound() {
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

std::optional<BigInt> pollard_brent(const BigInt& n, std::mt19937_64& rng, std::uint64_t max_iterations) {
  if (!boost::multiprecision::bit_test(n, 0)) return BigInt(2);
  std::uniform_int_distribution<std::uint64_t> dist(1, std::numeric_limits<std::uint32_t>::max());
  std::uint64_t spent = 0;
  while (spent < max_iterations) {
    const BigInt c = BigInt(dist(rng)) % n;
    BigInt y = BigInt(dist(rng)) % n;
    BigInt g = 1, q = 1, x, ys;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          BigInt diff = x > y ? BigInt(x - y) : BigInt(y - x);
          q = (q * diff) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += m;
        spent += steps;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && spent < max_iterations);
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        BigInt diff = x > ys ? BigInt(x - ys) : BigInt(ys - x);
        g = boost::multiprecision::gcd(diff, n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return std::nullopt;
}

struct Splitter {
  std::mt19937_64 rng{0x5eed'f4c7ULL};
  std::uint64_t budget;

  // Factors n (no prime factor below kTrialLimit) into primes.
  void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
      out[n] += 1;
      return;
    }
    if (auto root = perfect_power_root(n)) {
      std::map<BigInt, unsigned> inner;
      split(root->first, inner);
      for (const auto& [p, e] : inner) out[p] += e * root->second;
      return;
    }
    auto d = pollard_brent(n, rng, budget);
    if (!d) throw SizeLimitError("rho failed to split a composite within the iteration budget");
    split(*d, out);
    split(n / *d, out);
  }

  static std::optional<std::pair<BigInt, unsigned>> perfect_power_root(const BigInt& n) {
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    for (unsigned k = bits; k >= 2; --k) {
      BigInt r;
      mpz_root(r.backend().data(), n.backend().data(), k);
      if (pow(r, k) == n && r > 1) return std::make_pair(r, k);
    }
    return std::nullopt;
  }
};

bool pocklington(const BigInt& n);

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  check_size(n);
  for (std::uint32_t p : small_primes()) {
    const BigInt bp(p);
    if (bp * bp > n) return true;
    if (n % p == 0) return n == bp;
  }
  // n has no factor below 10^6 and n > 10^12
  if (n < deterministic_mr_bound()) return miller_rabin(n, kDeterministicBases);
  if (!miller_rabin(n, kDeterministicBases)) return false;
  return pocklington(n);
}

namespace {

// Proves n prime given a certified factored part F of n - 1 with F^2 > n.
bool pocklington(const BigInt& n) {
  BigInt rest = n - 1;
  std::map<BigInt, unsigned> known;
  for (std::uint32_t p : small_primes()) {
    while (rest % p == 0) {
      rest /= p;
      known[BigInt(p)] += 1;
    }
  }
  BigInt factored = (n - 1) / rest;
  Splitter splitter{.budget = 1u << 22};
  // peel rho factors off the cofactor until F^2 > n
  std::vector<BigInt> pending{rest};
  while (factored * factored <= n) {
    if (pending.empty()) break;
    BigInt m = pending.back();
    pending.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      known[m] += 1;
      factored *= m;
      continue;
    }
    auto d = pollard_brent(m, splitter.rng, splitter.budget);
    if (!d) throw SizeLimitError("cannot certify primality: n - 1 resists factorization");
    pending.push_back(*d);
    pending.push_back(m / *d);
  }
  if (factored * factored <= n) throw SizeLimitError("cannot certify primality: insufficient factored part");
  for (const auto& [q, e] : known) {
    bool certified = false;
    for (unsigned a = 2; a < 1000; ++a) {
      if (powm(BigInt(a), n - 1, n) != 1) return false;
      const BigInt t = powm(BigInt(a), (n - 1) / q, n);
      if (boost::multiprecision::gcd(BigInt(t - 1), n) == 1) {
        certified = true;
        break;
      }
    }
    if (!certified) return false;
  }
  return true;
}

}  // namespace

std::map<BigInt, unsigned> factorize(const BigInt& n) {
  if (n < 1) throw DomainError("factorize requires n >= 1");
  check_size(n);
  std::map<BigInt, unsigned> out;
  BigInt rest = n;
  for (std::uint32_t p : small_primes()) {
    const BigInt bp(p);
    if (bp * bp > rest) break;
    while (rest % p == 0) {
      rest /= p;
      out[bp] += 1;
    }
  }
  if (rest == 1) return out;
  Splitter splitter{.budget = 1u << 26};
  splitter.split(rest, out);
  return out;
}

std::pair<BigInt, unsigned> largest_prime_power(const std::map<BigInt, unsigned>& factorization) {
  if (factorization.empty()) throw DomainError("no prime power divides 1");
  std::pair<BigInt, unsigned> best{1, 0};
  BigInt best_value = 1;
  for (const auto& [p, e] : factorization) {
    BigInt v = pow(p, e);
    if (v > best_value) {
      best_value = v;
      best = {p, e};
    }
  }
  return best;
}

std::pair<BigInt, unsigned> largest_prime_power_divisor(const BigInt& m) {
  if (m < 2) throw DomainError("largest_prime_power_divisor requires m >= 2");
  return largest_prime_power(factorize(m));
}

std::optional<std::pair<BigInt, unsigned>> as_prime_power(const BigInt& q) {
  if (q < 2) return std::nullopt;
  if (is_prime(q)) return std::make_pair(q, 1u);
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return *f.begin();
}

}  // namespace lieord
