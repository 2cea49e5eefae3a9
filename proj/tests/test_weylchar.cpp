#include <gtest/gtest.h>

#include "lieord/errors.hpp"
#include "lieord/weylchar.hpp"
#include "oracles.hpp"

using namespace lieord;

namespace {

std::map<oracle::Signature, BigInt> keyed(const CharPolyTable& table) {
  std::map<oracle::Signature, BigInt> out;
  for (const auto& [poly, count] : table.entries) out[oracle::signature_of_product(poly, table.rank())] += count;
  return out;
}

CycloProduct P(std::initializer_list<std::pair<const int, int>> e) { return CycloProduct(e); }

std::set<int> divisor_closure(const DegreeMultiset& degrees) {
  std::set<int> out;
  for (int d : degrees) {
    for (int r = 1; r <= d; ++r) {
      if (d % r == 0) out.insert(r);
    }
  }
  return out;
}

}  // namespace

// Combinatorial tables against naive matrix closure with determinant evaluation.
TEST(WeylChar, ClassicalTablesMatchBruteForce) {
  for (const char* label : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4"}) {
    const auto t = parse_type(label);
    const auto& s = t.factors().front();
    const CharPolyTable table = charpolys_classical(s);
    const auto expected = oracle::brute_force_counts(reflection_generators(t), t.rank());
    EXPECT_EQ(keyed(table), expected) << label;
    EXPECT_EQ(table.group_order, t.weyl_order());
    EXPECT_NO_THROW(table.validate());
  }
}

TEST(WeylChar, ExceptionalTablesMatchBruteForce) {
  for (const char* label : {"G2", "F4"}) {
    const auto t = parse_type(label);
    const CharPolyTable table = charpolys_exceptional(t.factors().front());
    EXPECT_EQ(keyed(table), oracle::brute_force_counts(reflection_generators(t), t.rank())) << label;
  }
}

TEST(WeylChar, SmallTables) {
  const auto a1 = charpolys(parse_type("A1"));
  EXPECT_EQ(a1.entries, (std::map<CycloProduct, BigInt>{{P({{1, 1}}), 1}, {P({{2, 1}}), 1}}));
  const auto a2 = charpolys(parse_type("A2"));
  EXPECT_EQ(a2.entries,
            (std::map<CycloProduct, BigInt>{{P({{1, 2}}), 1}, {P({{1, 1}, {2, 1}}), 3}, {P({{3, 1}}), 2}}));
  // Dihedral group of order 8: identity, -1, four reflections, two quarter turns.
  const auto b2 = charpolys(parse_type("B2"));
  EXPECT_EQ(b2.entries, (std::map<CycloProduct, BigInt>{
                            {P({{1, 2}}), 1}, {P({{1, 1}, {2, 1}}), 4}, {P({{2, 2}}), 1}, {P({{4, 1}}), 2}}));
  const auto a1a1 = charpolys(parse_type("A1xA1"));
  EXPECT_EQ(a1a1.entries, (std::map<CycloProduct, BigInt>{
                              {P({{1, 2}}), 1}, {P({{1, 1}, {2, 1}}), 2}, {P({{2, 2}}), 1}}));
  EXPECT_EQ(charpolys(parse_type("G2xA1")).group_order, 24);
  const auto g2 = charpolys(parse_type("G2")).polynomials();
  EXPECT_TRUE(g2.count(P({{3, 1}})));
  EXPECT_TRUE(g2.count(P({{6, 1}})));
  EXPECT_FALSE(g2.count(P({{4, 1}})));
}

TEST(WeylChar, EnumerationGroupOrders) {
  EXPECT_EQ(charpolys_exceptional(SimpleType::make('G', 2)).group_order, 12);
  EXPECT_EQ(charpolys_exceptional(SimpleType::make('F', 4)).group_order, 1152);
  const auto e6 = charpolys_exceptional(SimpleType::make('E', 6));
  EXPECT_EQ(e6.group_order, 51840);
  BigInt sum = 0;
  for (const auto& [p, c] : e6.entries) sum += c;
  EXPECT_EQ(sum, 51840);
  EXPECT_THROW(charpolys_exceptional(SimpleType::make('E', 8)), E8WithoutTable);
  EXPECT_THROW(charpolys(parse_type("E8xA1")), E8WithoutTable);
}

TEST(WeylChar, EnumerationSizeLimit) {
  const auto t = parse_type("F4");
  EXPECT_THROW(enumerate_group(reflection_generators(t), t, 100), SizeLimitError);
}

// Springer: the cyclotomic indices occurring are the divisors of the degrees.
TEST(WeylChar, SpringerIndexSets) {
  for (const auto& s : simple_types_up_to(7)) {
    if (s.letter() == 'E' && s.rank() == 7) continue;  // covered by the acceptance run
    const SemisimpleType t{s};
    const auto table = charpolys(t);
    EXPECT_EQ(table.indices(), divisor_closure(s.degrees())) << s.render();
    EXPECT_EQ(ch_star(t), divisor_closure(s.degrees())) << s.render();
  }
  EXPECT_EQ(ch_star(parse_type("G2")), (std::set<int>{1, 2, 3, 6}));
  EXPECT_EQ(ch_star(parse_type("F4")), (std::set<int>{1, 2, 3, 4, 6, 8, 12}));
  EXPECT_EQ(ch_star(parse_type("E8")),
            (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30}));
}

// Largest Phi_d exponent equals the number of degrees divisible by d.
TEST(WeylChar, MaximalEigenspaceDimension) {
  for (const auto& t : semisimple_types_up_to(5, simple_types_up_to(5))) {
    const auto table = charpolys(t);
    for (int d = 1; d <= 30; ++d) {
      int count = 0;
      for (int x : t.degrees()) count += x % d == 0 ? 1 : 0;
      EXPECT_EQ(table.max_exponent(d), count) << t.render() << " d=" << d;
      EXPECT_EQ(mu(t, d), count);
    }
  }
}

TEST(WeylChar, MuExamples) {
  EXPECT_EQ(mu(parse_type("E8"), 30), 1);
  EXPECT_EQ(mu(parse_type("B2"), 4), 1);
  EXPECT_EQ(mu(parse_type("E7"), 6), 3);
  EXPECT_EQ(mu_prime(parse_type("A2"), 3), 0);
  EXPECT_EQ(mu_prime(parse_type("G2"), 5), 0);
  EXPECT_EQ(mu_joint(parse_type("B3"), 4, 6), 1);
  EXPECT_EQ(mu_joint(parse_type("E8"), 28, 30), 1);
  EXPECT_EQ(mu_joint(parse_type("A1"), 1, 2), 1);
  EXPECT_EQ(mu_prime(parse_type("D4"), 6), mu_prime(parse_type("B3"), 6) + 1);
  EXPECT_THROW(mu_prime(parse_type("E8"), 5), Unresolvable);
  EXPECT_THROW(mu_joint(parse_type("E8"), 24, 30), Unresolvable);
  // E8 has no degree divisible by 11, so its factor contributes 0.
  EXPECT_EQ(mu_prime(parse_type("E8xA1"), 11), 0);
}

// Direct-factor additivity of all three invariants, against tables read whole.
TEST(WeylChar, InvariantsAreAdditive) {
  for (const auto& t : semisimple_types_up_to(5, simple_types_up_to(5))) {
    const auto whole = charpolys(t);
    for (int i = 1; i <= 12; ++i) {
      EXPECT_EQ(mu(t, i), mu_from_table(whole, i)) << t.render();
      if (i > 2) EXPECT_EQ(mu_prime(t, i), mu_prime_from_table(whole, i)) << t.render() << " i=" << i;
      for (int j = i + 1; j <= 12; ++j) {
        EXPECT_EQ(mu_joint(t, i, j), mu_joint_from_table(whole, i, j)) << t.render() << " " << i << "," << j;
      }
    }
  }
}

TEST(WeylChar, InvariantProfile) {
  const auto a1 = invariant_profile(parse_type("A1"));
  EXPECT_EQ(a1.mu.at(1), 1);
  EXPECT_EQ(a1.mu.at(2), 1);
  for (const auto& [i, v] : a1.mu) {
    if (i > 2) EXPECT_EQ(v, 0);
  }
  const auto b2 = invariant_profile(parse_type("B2"));
  EXPECT_EQ(b2.mu.at(4), 1);
  EXPECT_EQ(b2.mu.at(2), 2);
  EXPECT_NE(invariant_profile(parse_type("B3xB3")), invariant_profile(parse_type("D4xG2")));
}

TEST(WeylChar, ProductTableCounts) {
  const auto t = parse_type("A2xB2");
  const auto table = charpolys(t);
  EXPECT_EQ(keyed(table), oracle::brute_force_counts(reflection_generators(t), t.rank()));
  EXPECT_EQ(charpoly_set(t), table.polynomials());
}

TEST(WeylChar, ValidateCatchesBadTables) {
  auto table = charpolys(parse_type("B2"));
  table.entries.begin()->second += 1;
  EXPECT_THROW(table.validate(), CacheInvalid);
  auto wrong_degree = charpolys(parse_type("B2"));
  wrong_degree.entries[P({{3, 1}, {1, 1}})] = 0;
  EXPECT_THROW(wrong_degree.validate(), CacheInvalid);
}
