#include <gtest/gtest.h>

#include "lieord/errors.hpp"
#include "lieord/types.hpp"

using namespace lieord;

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int sum_minus_one(const DegreeMultiset& d) {
  int s = 0;
  for (int x : d) s += x - 1;
  return s;
}

BigInt product(const DegreeMultiset& d) {
  BigInt p = 1;
  for (int x : d) p *= x;
  return p;
}

}  // namespace

// Weyl group orders and root counts from the classification table.
TEST(Types, ClassicalOrdersAndRootCounts) {
  for (int n = 1; n <= 30; ++n) {
    const auto a = SimpleType::make('A', n);
    EXPECT_EQ(product(a.degrees()), factorial(n + 1));
    EXPECT_EQ(a.weyl_order(), factorial(n + 1));
    EXPECT_EQ(2 * sum_minus_one(a.degrees()), n * (n + 1));
    if (n >= 2) {
      for (char l : {'B', 'C'}) {
        const auto b = SimpleType::make(l, n);
        EXPECT_EQ(product(b.degrees()), pow(BigInt(2), n) * factorial(n));
        EXPECT_EQ(2 * sum_minus_one(b.degrees()), 2 * n * n);
      }
    }
    if (n >= 4) {
      const auto d = SimpleType::make('D', n);
      EXPECT_EQ(product(d.degrees()), pow(BigInt(2), n - 1) * factorial(n));
      EXPECT_EQ(2 * sum_minus_one(d.degrees()), 2 * n * (n - 1));
    }
  }
}

TEST(Types, ExceptionalOrdersAndRootCounts) {
  struct Row {
    char letter;
    int rank;
    int roots;
    BigInt order;
  };
  const BigInt two = 2, three = 3, five = 5;
  const std::vector<Row> rows = {
      {'G', 2, 12, BigInt(12)},
      {'F', 4, 48, pow(two, 7) * pow(three, 2)},
      {'E', 6, 72, pow(two, 7) * pow(three, 4) * 5},
      {'E', 7, 126, pow(two, 10) * pow(three, 4) * 5 * 7},
      {'E', 8, 240, pow(two, 14) * pow(three, 5) * pow(five, 2) * 7},
  };
  for (const auto& r : rows) {
    const auto t = SimpleType::make(r.letter, r.rank);
    EXPECT_EQ(product(t.degrees()), r.order) << t.render();
    EXPECT_EQ(2 * sum_minus_one(t.degrees()), r.roots) << t.render();
    EXPECT_EQ(2 * t.positive_root_count(), r.roots);
    EXPECT_EQ(static_cast<int>(t.degrees().size()), r.rank);
  }
  EXPECT_EQ(SimpleType::make('E', 8).weyl_order(), BigInt(696729600));
  EXPECT_EQ(SimpleType::make('E', 8).positive_root_count(), 120);
}

TEST(Types, Degrees) {
  EXPECT_EQ(SimpleType::make('D', 4).degrees(), (DegreeMultiset{2, 4, 4, 6}));
  EXPECT_EQ(SimpleType::make('E', 6).degrees(), (DegreeMultiset{2, 5, 6, 8, 9, 12}));
  EXPECT_EQ(SimpleType::make('F', 4).degrees(), (DegreeMultiset{2, 6, 8, 12}));
  EXPECT_EQ(SimpleType::make('E', 7).coxeter_number(), 18);
  EXPECT_EQ(parse_type("B3xB3").degrees(), parse_type("D4xG2").degrees());
}

TEST(Types, Canonicalization) {
  EXPECT_EQ(SimpleType::make('C', 5), SimpleType::make('B', 5));
  EXPECT_EQ(SimpleType::make('B', 1), SimpleType::make('A', 1));
  EXPECT_EQ(SimpleType::make('C', 1), SimpleType::make('A', 1));
  EXPECT_EQ(parse_type("c3 x a1"), parse_type("A1xB3"));
  EXPECT_EQ(parse_type("B3xA2").render(), "A2xB3");
}

TEST(Types, InvalidRanks) {
  EXPECT_THROW(SimpleType::make('D', 3), DomainError);
  EXPECT_THROW(SimpleType::make('A', 0), DomainError);
  EXPECT_THROW(SimpleType::make('E', 9), DomainError);
  EXPECT_THROW(SimpleType::make('G', 3), DomainError);
  EXPECT_THROW(SimpleType::make('F', 5), DomainError);
  EXPECT_THROW(SimpleType::make('H', 3), DomainError);
}

TEST(Types, ParseErrorsNameTheToken) {
  try {
    parse_type("A2xQ7");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(e.token().find('Q'), std::string::npos);
  }
  EXPECT_THROW(parse_type("A2x"), ParseError);
  EXPECT_THROW(parse_type("xA2"), ParseError);
  EXPECT_THROW(parse_type("B"), ParseError);
}

TEST(Types, RenderParseRoundTrip) {
  const auto all = semisimple_types_up_to(6, simple_types_up_to(6));
  EXPECT_FALSE(all.empty());
  for (const auto& t : all) EXPECT_EQ(parse_type(t.render()), t) << t.render();
}

TEST(Types, SemisimpleAggregates) {
  const auto t = parse_type("A1xA1xG2");
  EXPECT_EQ(t.rank(), 4);
  EXPECT_EQ(t.multiplicity(SimpleType::make('A', 1)), 2);
  EXPECT_EQ(t.weyl_order(), 48);
  EXPECT_EQ(t.positive_root_count(), 8);
  EXPECT_EQ(t.max_degree(), 6);
  auto u = t;
  EXPECT_TRUE(u.remove_one(SimpleType::make('A', 1)));
  EXPECT_FALSE(u.remove_one(SimpleType::make('B', 2)));
  EXPECT_EQ(u, parse_type("A1xG2"));
  EXPECT_EQ(u * parse_type("A1"), t);
  EXPECT_EQ(SemisimpleType{}.render(), "");
}

TEST(Types, CoxeterNumberLookup) {
  for (int h = 2; h <= 40; ++h) {
    for (const auto& t : types_with_coxeter_number(h)) EXPECT_EQ(t.coxeter_number(), h);
  }
  const auto six = types_with_coxeter_number(6);
  const std::vector<SimpleType> expected = {SimpleType::make('A', 5), SimpleType::make('B', 3),
                                            SimpleType::make('D', 4), SimpleType::make('G', 2)};
  EXPECT_EQ(six, expected);
}

TEST(Types, EnumerationCounts) {
  // Partitions-like counts over the full alphabet up to rank 3:
  // rank 1: A1; rank 2: A2, B2, G2, A1^2; rank 3: A3, B3, A1A2, A1B2, A1G2, A1^3.
  EXPECT_EQ(semisimple_types_up_to(3, simple_types_up_to(3)).size(), 11u);
}
