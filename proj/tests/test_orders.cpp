#include <gtest/gtest.h>

#include <random>

#include "lieord/errors.hpp"
#include "lieord/factor.hpp"
#include "lieord/orders.hpp"
#include "oracles.hpp"

using namespace lieord;

namespace {

// q^N prod (q^d - 1) straight from the degrees.
BigInt direct_order(const SemisimpleType& t, const BigInt& q) {
  BigInt m = 1;
  for (int d : t.degrees()) m *= pow(q, d) - 1;
  int n = 0;
  for (int d : t.degrees()) n += d - 1;
  return m * pow(q, n);
}

bool is_prime_small(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace

TEST(Orders, Examples) {
  EXPECT_EQ(order_value(parse_type("A1"), 9), 720);
  EXPECT_EQ(order_value(parse_type("B2"), 2), 720);
  EXPECT_EQ(order_value(parse_type("B2"), 3), 51840);
  EXPECT_EQ(order_value(parse_type("A1"), 2), 6);
  EXPECT_EQ(order_value(parse_type("A2"), 2), 168);
  const auto g2 = order_factored(parse_type("G2"), 5);
  EXPECT_EQ(g2.n_exp, 6);
  EXPECT_EQ(g2.degrees, (DegreeMultiset{2, 6}));
  EXPECT_EQ(g2.p, 5);
  EXPECT_EQ(g2.t, 1u);
  EXPECT_EQ(g2.value(), pow(BigInt(5), 6) * 24 * (pow(BigInt(5), 6) - 1));
  EXPECT_THROW(order_value(parse_type("A1"), 6), DomainError);
  EXPECT_THROW(order_value(parse_type("A1"), 1), DomainError);
}

TEST(Orders, RandomAgainstDirectFormula) {
  std::mt19937_64 rng(17);
  const auto catalogue = simple_types_up_to(8);
  const std::vector<long> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 81, 121, 125, 128};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SimpleType> fs;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) fs.push_back(catalogue[rng() % catalogue.size()]);
    const SemisimpleType t(fs);
    const BigInt q = qs[rng() % qs.size()];
    const auto f = order_factored(t, q);
    EXPECT_EQ(f.value(), direct_order(t, q)) << t.render() << " q=" << q;
    EXPECT_EQ(f.n_exp, t.positive_root_count());
    EXPECT_EQ(pow(f.p, f.t), q);
    EXPECT_EQ(eval_cyclo_product(f.cyclotomic_part(), q) * pow(q, f.n_exp), f.value());
  }
}

TEST(Orders, SameOrderAllExtensions) {
  EXPECT_TRUE(same_order_all_extensions(parse_type("A1xA3"), parse_type("A2xB2")));
  EXPECT_TRUE(same_order_all_extensions(parse_type("B5"), parse_type("C5")));
  EXPECT_FALSE(same_order_all_extensions(parse_type("A2"), parse_type("B2")));
  EXPECT_EQ(order_value(parse_type("A1xA3"), 7), order_value(parse_type("A2xB2"), 7));
}

TEST(Orders, LargestPowerWitness) {
  const auto b2 = p_contribution_is_largest(parse_type("B2"), 3);
  EXPECT_FALSE(b2.p_is_largest);
  EXPECT_EQ(b2.p_part, 81);
  EXPECT_EQ(b2.other_part, 128);
  EXPECT_EQ(b2.other_prime, 2);
  const auto a1 = p_contribution_is_largest(parse_type("A1"), 8);
  EXPECT_FALSE(a1.p_is_largest);
  EXPECT_EQ(a1.p_part, 8);
  EXPECT_EQ(a1.other_part, 9);
  const auto a2 = p_contribution_is_largest(parse_type("A2"), 2);
  EXPECT_TRUE(a2.p_is_largest);
  EXPECT_EQ(a2.p_part, 8);
  EXPECT_EQ(a2.other_part, 7);
}

// The witness agrees with factoring the whole order.
TEST(Orders, WitnessAgreesWithFullFactorization) {
  for (const auto& s : simple_types_up_to(4)) {
    for (long q : {2, 3, 4, 5, 7, 8, 9}) {
      const SemisimpleType t{s};
      const BigInt m = order_value(t, q);
      const auto w = p_contribution_is_largest(t, q);
      auto f = factorize(m);
      const auto pq = *as_prime_power(q);
      EXPECT_EQ(w.p_part, pow(pq.first, f.at(pq.first)));
      f.erase(pq.first);
      BigInt best = 1;
      for (const auto& [p, e] : f) best = std::max(best, BigInt(pow(p, e)));
      EXPECT_EQ(w.other_part, best) << s.render() << " q=" << q;
      EXPECT_EQ(w.p_is_largest, w.p_part > best);
    }
  }
}

TEST(Orders, ExceptionList) {
  EXPECT_TRUE(in_exception_list(SimpleType::make('A', 1), 5));
  EXPECT_TRUE(in_exception_list(SimpleType::make('B', 2), 3));
  EXPECT_FALSE(in_exception_list(SimpleType::make('A', 1), 11));
  EXPECT_TRUE(in_exception_list(SimpleType::make('A', 1), 8));
  EXPECT_TRUE(in_exception_list(SimpleType::make('A', 1), 9));
  EXPECT_TRUE(in_exception_list(SimpleType::make('A', 1), 16));  // 17 prime
  EXPECT_FALSE(in_exception_list(SimpleType::make('A', 2), 2));
}

// The p-contribution fails to be the largest prime power exactly on the list.
TEST(Orders, ExceptionSweep) {
  for (const auto& s : simple_types_up_to(6)) {
    for (long q = 2; q <= 16; ++q) {
      if (!as_prime_power(q)) continue;
      const auto w = p_contribution_is_largest(SemisimpleType{s}, q);
      EXPECT_EQ(!w.p_is_largest, in_exception_list(s, q)) << s.render() << " q=" << q;
    }
  }
}

TEST(Orders, FieldDetermination) {
  const auto same = check_field_determination(parse_type("A1xA3"), 5, parse_type("A2xB2"), 5);
  EXPECT_TRUE(same.orders_equal);
  EXPECT_TRUE(same.q_equal);
  EXPECT_TRUE(same.degrees_equal);
  EXPECT_TRUE(same.holds());
  const auto differ = check_field_determination(parse_type("A1"), 4, parse_type("A1"), 8);
  EXPECT_FALSE(differ.orders_equal);
  EXPECT_TRUE(differ.holds());
  EXPECT_TRUE(check_field_determination(parse_type("A1"), 2, parse_type("A1"), 2).orders_equal);
  EXPECT_THROW(check_field_determination(parse_type("A1"), 9, parse_type("B2"), 2), DomainError);
  // Exhaustive small grid within one characteristic.
  const auto types = semisimple_types_up_to(3, simple_types_up_to(3));
  for (const auto& t1 : types) {
    for (const auto& t2 : types) {
      for (long q1 : {2, 4, 8}) {
        for (long q2 : {2, 4, 8}) {
          EXPECT_TRUE(check_field_determination(t1, q1, t2, q2).holds()) << t1.render() << " " << t2.render();
        }
      }
    }
  }
}

TEST(Orders, RecognizeExamples) {
  using R = std::vector<std::pair<SemisimpleType, BigInt>>;
  EXPECT_EQ(recognize_order(720, 2), (R{{parse_type("A1"), 9}, {parse_type("B2"), 2}}));
  EXPECT_EQ(recognize_order(6, 2), (R{{parse_type("A1"), 2}}));
  EXPECT_TRUE(recognize_order(7, 4).empty());
}

// Random (type, q) must be found among the hits; each hit must evaluate back.
TEST(Orders, RecognizeRandom) {
  std::mt19937_64 rng(23);
  const auto types = semisimple_types_up_to(4, simple_types_up_to(4));
  std::vector<long> qs;
  for (long q = 2; q <= 64; ++q) {
    long p = 2;
    while (q % p) ++p;
    long r = q;
    while (r % p == 0) r /= p;
    if (r == 1 && is_prime_small(p)) qs.push_back(q);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto& t = types[rng() % types.size()];
    const BigInt q = qs[rng() % qs.size()];
    const BigInt m = order_value(t, q);
    const auto hits = recognize_order(m, 4);
    EXPECT_NE(std::find(hits.begin(), hits.end(), std::make_pair(t, q)), hits.end()) << t.render() << " " << q;
    for (const auto& [u, r] : hits) EXPECT_EQ(order_value(u, r), m);
  }
}

TEST(Orders, CrossCharacteristic) {
  const auto hits = cross_characteristic_collisions(2, 32);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].order, 720);
  const auto pp = prime_powers_up_to(20);
  EXPECT_EQ(pp, (std::vector<BigInt>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19}));
}
