#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lieord/errors.hpp"
#include "lieord/valuation.hpp"
#include "oracles.hpp"

using namespace lieord;

TEST(Valuation, OrdAndContribution) {
  EXPECT_EQ(ord_p(51840, 3), 4u);
  EXPECT_EQ(p_contribution(51840, 3), 81);
  EXPECT_EQ(p_contribution(51840, 7), 1);
  EXPECT_EQ(ord_p(-96, 2), 5u);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const BigInt m = 1 + static_cast<long>(rng() % 1000000);
    const BigInt p = std::vector<int>{2, 3, 5, 7, 11, 13}[rng() % 6];
    const BigInt c = p_contribution(m, p);
    EXPECT_EQ(m % c, 0);
    EXPECT_NE((m / c) % p, 0);
    EXPECT_EQ(ord_p(m, p), oracle::valuation(m, p));
  }
}

TEST(Valuation, MultiplicativeOrder) {
  EXPECT_EQ(multiplicative_order(2, 7), 3);
  EXPECT_EQ(multiplicative_order(3, 7), 6);
  EXPECT_EQ(multiplicative_order(-1, 5), 2);
  for (int p : {5, 7, 11, 13, 101}) {
    for (int a = 1; a < p; ++a) {
      int k = 1;
      long long x = a % p;
      while (x != 1) {
        x = x * a % p;
        ++k;
      }
      EXPECT_EQ(multiplicative_order(a, p), k);
    }
  }
}

// The full small grid against direct valuation of a^n - b^n.
TEST(Valuation, ArtinRulesMatchDirectValuation) {
  int checked = 0;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int a = -30; a <= 30; ++a) {
      for (int b = -30; b <= 30; ++b) {
        if (std::abs(a) < std::abs(b) + 1 || std::abs(a) < 2) continue;
        if (std::gcd(a, b) != 1 || a % p == 0 || b % p == 0) continue;
        for (unsigned n = 1; n <= 30; ++n) {
          const BigInt direct = pow(BigInt(a), n) - pow(BigInt(b), n);
          ASSERT_EQ(ord_p_power_diff(p, a, b, n), oracle::valuation(direct, p))
              << "p=" << p << " a=" << a << " b=" << b << " n=" << n;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 100000);
}

TEST(Valuation, ArtinRejectsBadInput) {
  EXPECT_THROW(ord_p_power_diff(3, 6, 3, 2), DomainError);  // gcd 3
  EXPECT_THROW(ord_p_power_diff(4, 5, 3, 2), DomainError);  // 4 not prime
  EXPECT_THROW(ord_p_power_diff(3, 2, 3, 2), DomainError);  // |a| < |b| + 1
  EXPECT_THROW(ord_p_power_diff(5, 10, 3, 2), DomainError);  // p | a
}
