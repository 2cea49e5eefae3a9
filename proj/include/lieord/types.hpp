#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lieord/bigint.hpp"

namespace lieord {

/// Sorted multiset of fundamental degrees.
using DegreeMultiset = std::vector<int>;

/// A split simple type such as A3, B5, E7. Constructed only through
/// SimpleType::make, which validates the rank and canonicalizes C_n to B_n
/// (n >= 2) and B_1 / C_1 to A_1.
class SimpleType {
 public:
  static SimpleType make(char letter, int rank);

  char letter() const { return letter_; }
  int rank() const { return rank_; }
  bool is_exceptional() const { return letter_ == 'E' || letter_ == 'F' || letter_ == 'G'; }

  DegreeMultiset degrees() const;
  /// Largest fundamental degree.
  int coxeter_number() const;
  int positive_root_count() const;
  BigInt weyl_order() const;
  std::string render() const;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;

 private:
  SimpleType(char letter, int rank) : letter_(letter), rank_(rank) {}
  char letter_;
  int rank_;
};

/// Multiset of simple factors kept in canonical (letter, rank) order. May be
/// empty; the empty type is the neutral element of products.
class SemisimpleType {
 public:
  SemisimpleType() = default;
  SemisimpleType(std::initializer_list<SimpleType> factors);
  explicit SemisimpleType(std::vector<SimpleType> factors);

  const std::vector<SimpleType>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  int rank() const;
  DegreeMultiset degrees() const;
  int positive_root_count() const;
  BigInt weyl_order() const;
  /// Highest fundamental degree over all factors (0 if empty).
  int max_degree() const;
  int multiplicity(const SimpleType& t) const;

  SemisimpleType& operator*=(const SemisimpleType& other);
  friend SemisimpleType operator*(SemisimpleType a, const SemisimpleType& b) { return a *= b; }
  /// Removes one copy of t; returns false if absent.
  bool remove_one(const SimpleType& t);

  /// "A2xB3"; the empty type renders as "".
  std::string render() const;

  friend auto operator<=>(const SemisimpleType&, const SemisimpleType&) = default;
  friend bool operator==(const SemisimpleType&, const SemisimpleType&) = default;

 private:
  std::vector<SimpleType> factors_;
};

/// Grammar: type := factor ("x" factor)*; factor := [ABCDEFG][0-9]+.
/// Whitespace and letter case are ignored. Throws ParseError naming the
/// offending token.
SemisimpleType parse_type(std::string_view text);

DegreeMultiset degrees(const SimpleType& t);
int positive_root_count(const SemisimpleType& t);
BigInt weyl_order(const SemisimpleType& t);

/// All simple types of rank <= max_rank whose letter is in `letters`
/// (letters after canonicalization: A, B, D, E, F, G), in canonical order.
std::vector<SimpleType> simple_types_up_to(int max_rank, std::string_view letters = "ABDEFG");

/// All nonempty semisimple types with total rank <= max_rank built from the
/// given simple catalogue.
std::vector<SemisimpleType> semisimple_types_up_to(int max_rank, const std::vector<SimpleType>& catalogue);

/// Simple types with the given Coxeter number (largest degree).
std::vector<SimpleType> types_with_coxeter_number(int h);

}  // namespace lieord
