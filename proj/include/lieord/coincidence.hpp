#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieord/bigint.hpp"
#include "lieord/types.hpp"

namespace lieord {

/// Reduced pair of semisimple types with equal degree multisets and no common
/// simple factor. (empty, empty) is the identity.
struct CoincidencePair {
  SemisimpleType left;
  SemisimpleType right;

  bool is_identity() const { return left.empty() && right.empty(); }
  /// "L:R", either side possibly empty.
  std::string render() const;
  /// The same pair with the smaller side first; used for unordered comparison.
  CoincidencePair oriented() const;

  friend auto operator<=>(const CoincidencePair&, const CoincidencePair&) = default;
  friend bool operator==(const CoincidencePair&, const CoincidencePair&) = default;
};

/// Parses "L:R" (sides in type grammar, either may be empty) and reduces.
CoincidencePair parse_pair(std::string_view text);

/// Cancels common simple factors with multiplicity. NotCoincident if the
/// degree multisets differ.
CoincidencePair reduce(const SemisimpleType& h1, const SemisimpleType& h2);
CoincidencePair compose(const CoincidencePair& a, const CoincidencePair& b);
CoincidencePair inverse(const CoincidencePair& a);

/// Numeric order comparison over F_q.
bool is_coincidence(const SemisimpleType& h1, const SemisimpleType& h2, const BigInt& q);

/// Reduced pairs with exactly two simple factors per side and total rank <=
/// rank_bound, oriented with the smaller side on the left, sorted.
std::vector<CoincidencePair> enumerate_two_factor_pairs(int rank_bound);

/// The eight two-factor families of the classification, instantiated up to
/// rank_bound; oriented and sorted like enumerate_two_factor_pairs.
std::vector<CoincidencePair> classified_two_factor_pairs(int rank_bound);

/// Generator label: B_n (n >= 2), D_n (n >= 4), G2, F4, E6, E7, E8.
struct GeneratorId {
  char letter = 'B';
  int n = 2;

  static GeneratorId make(char letter, int n);
  static GeneratorId parse(std::string_view text);
  std::string render() const;
  /// Largest degree occurring in the generator.
  int level() const;
  /// Rank of each side.
  int rank() const;

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

struct GeneratorLetter {
  GeneratorId id;
  int sign = 1;  // +1 or -1

  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

using GeneratorWord = std::vector<GeneratorLetter>;

std::string render(const GeneratorWord& word);

/// Positive orientation: the exceptional or higher type sits on the right.
CoincidencePair generator(const GeneratorId& id);
/// All generators whose sides have rank <= rank_bound.
std::map<GeneratorId, CoincidencePair> generators(int rank_bound);

CoincidencePair evaluate(const GeneratorWord& word);

/// Peels off the factors of highest degree one pair at a time. The returned
/// word is normalized (net exponent per generator, sorted by id) and its
/// evaluation equals p. NoPeelingElement if no element of the required shape
/// is found among generator words of length <= 3.
GeneratorWord decompose(const CoincidencePair& p);

struct GroupAxiomsReport {
  int samples = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Random products of generators with side rank <= rank_bound, checked for
/// associativity, commutativity, identity, inverses and the pair invariants.
GroupAxiomsReport verify_group_axioms(int samples, int rank_bound, std::uint64_t seed = 20240601);

/// Random product of 1..max_length generator letters drawn from generators(rank_bound).
CoincidencePair random_generator_product(std::mt19937_64& rng, int rank_bound, int max_length = 4);

}  // namespace lieord
