#include <gtest/gtest.h>

#include <random>

#include "lieord/coincidence.hpp"
#include "lieord/errors.hpp"
#include "lieord/orders.hpp"

using namespace lieord;

namespace {

CoincidencePair pair_of(const char* l, const char* r) { return CoincidencePair{parse_type(l), parse_type(r)}; }

void expect_invariants(const CoincidencePair& p) {
  EXPECT_EQ(p.left.degrees(), p.right.degrees()) << p.render();
  for (const auto& f : p.left.factors()) EXPECT_EQ(p.right.multiplicity(f), 0) << p.render();
}

}  // namespace

TEST(Coincidence, ReduceExamples) {
  EXPECT_EQ(reduce(parse_type("A1xA3"), parse_type("A2xB2")), pair_of("A1xA3", "A2xB2"));
  EXPECT_EQ(reduce(parse_type("A2xB2xA5"), parse_type("A1xA3xA5")), pair_of("A2xB2", "A1xA3"));
  EXPECT_THROW(reduce(parse_type("A2xB2xA5"), parse_type("A2xA3xA1xA5")), NotCoincident);
  EXPECT_TRUE(reduce(parse_type("A2"), parse_type("A2")).is_identity());
  EXPECT_THROW(reduce(parse_type("A2"), parse_type("B2")), NotCoincident);
}

TEST(Coincidence, ParseAndRender) {
  const auto p = parse_pair("A1xA3:A2xB2");
  EXPECT_EQ(p, pair_of("A1xA3", "A2xB2"));
  EXPECT_EQ(p.render(), "A1xA3:A2xB2");
  EXPECT_TRUE(parse_pair(":").is_identity());
  EXPECT_EQ(parse_pair("A2xB2xG2:G2xA1xA3"), pair_of("A2xB2", "A1xA3"));
  EXPECT_THROW(parse_pair("A2xB2"), ParseError);
  EXPECT_THROW(parse_pair("A2:B2"), NotCoincident);
}

TEST(Coincidence, NumericCheck) {
  EXPECT_TRUE(is_coincidence(parse_type("A1xA3"), parse_type("A2xB2"), 3));
  EXPECT_TRUE(is_coincidence(parse_type("A2"), parse_type("A2"), 5));
  EXPECT_FALSE(is_coincidence(parse_type("A2"), parse_type("B2"), 2));
}

TEST(Coincidence, ComposeExamples) {
  const auto g2 = generator(GeneratorId::make('G', 2));
  const auto d4 = generator(GeneratorId::make('D', 4));
  EXPECT_EQ(compose(g2, inverse(d4)).oriented(), pair_of("B3xB3", "D4xG2").oriented());
  EXPECT_TRUE(compose(g2, inverse(g2)).is_identity());
  const auto b2 = generator(GeneratorId::make('B', 2));
  EXPECT_EQ(compose(b2, CoincidencePair{}), b2);
}

TEST(Coincidence, GeneratorShapes) {
  EXPECT_EQ(generator(GeneratorId::make('B', 2)).oriented(), pair_of("A2xB2", "A1xA3").oriented());
  EXPECT_EQ(generator(GeneratorId::make('F', 4)).oriented(), pair_of("A1xB4xB6", "B2xB5xF4").oriented());
  const auto e8 = generator(GeneratorId::make('E', 8));
  EXPECT_EQ(e8.left.rank(), 49);
  EXPECT_EQ(e8.right.rank(), 49);
  for (const auto& [id, p] : generators(20)) {
    expect_invariants(p);
    EXPECT_EQ(id.rank(), p.left.rank());
    EXPECT_EQ(id.level(), p.left.max_degree());
    EXPECT_EQ(GeneratorId::parse(id.render()), id);
  }
  EXPECT_THROW(GeneratorId::make('D', 3), DomainError);
  EXPECT_THROW(GeneratorId::make('A', 3), DomainError);
}

TEST(Coincidence, TwoFactorEnumerationSmall) {
  EXPECT_TRUE(enumerate_two_factor_pairs(3).empty());
  const auto four = enumerate_two_factor_pairs(4);
  EXPECT_NE(std::find(four.begin(), four.end(), pair_of("A2xB2", "A1xA3").oriented()), four.end());
  const auto seven = enumerate_two_factor_pairs(7);
  for (const auto& p : {pair_of("A1xB3", "B2xG2"), pair_of("A2xB3", "A3xG2")}) {
    EXPECT_NE(std::find(seven.begin(), seven.end(), p.oriented()), seven.end()) << p.render();
  }
  EXPECT_EQ(seven, classified_two_factor_pairs(7));
  for (const auto& p : seven) {
    expect_invariants(p);
    EXPECT_EQ(p.left.size(), 2u);
    EXPECT_EQ(p.right.size(), 2u);
  }
}

TEST(Coincidence, DecomposeExamples) {
  const auto w = decompose(pair_of("B3xB3", "D4xG2"));
  EXPECT_EQ(evaluate(w), pair_of("B3xB3", "D4xG2"));
  ASSERT_EQ(w.size(), 2u);
  EXPECT_TRUE(decompose(CoincidencePair{}).empty());
  const auto v = decompose(pair_of("A1xD4", "B2xB3"));
  EXPECT_EQ(evaluate(v), pair_of("A1xD4", "B2xB3"));
  EXPECT_EQ(render(v), "B2- D4+");
  const auto e8 = generator(GeneratorId::make('E', 8));
  EXPECT_EQ(render(decompose(e8)), "E8+");
}

TEST(Coincidence, DecomposeRandomProducts) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_generator_product(rng, 14);
    expect_invariants(p);
    const auto w = decompose(p);
    EXPECT_EQ(evaluate(w), p) << p.render();
  }
}

TEST(Coincidence, GroupAxioms) {
  const auto report = verify_group_axioms(100, 20);
  EXPECT_TRUE(report.ok());
  for (const auto& v : report.violations) ADD_FAILURE() << v;
  const auto gens = generators(12);
  for (const auto& [a, p] : gens) {
    EXPECT_EQ(inverse(inverse(p)), p);
    for (const auto& [b, r] : gens) EXPECT_EQ(compose(p, r), compose(r, p));
  }
}

TEST(Coincidence, OrdersAgreeOverExtensions) {
  for (const auto& p : enumerate_two_factor_pairs(12)) {
    for (long q : {2, 3}) {
      for (unsigned r : {2u, 3u}) {
        const BigInt qr = pow(BigInt(q), r);
        EXPECT_EQ(order_value(p.left, qr), order_value(p.right, qr)) << p.render();
      }
    }
  }
}
