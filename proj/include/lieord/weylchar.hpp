#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lieord/cyclotomic.hpp"
#include "lieord/rootsystem.hpp"
#include "lieord/types.hpp"

namespace lieord {

/// Characteristic polynomials of all elements of a Weyl group, with the
/// number of elements carrying each polynomial.
struct CharPolyTable {
  SemisimpleType type;
  BigInt group_order;
  std::map<CycloProduct, BigInt> entries;

  int rank() const { return type.rank(); }
  std::set<CycloProduct> polynomials() const;
  /// Largest exponent of Phi_d over all entries.
  int max_exponent(int d) const;
  /// Cyclotomic indices occurring in some entry.
  std::set<int> indices() const;

  /// Throws CacheInvalid naming the failed certificate: counts summing to
  /// the group order, entry degrees equal to the rank, identity present once.
  void validate() const;

  friend bool operator==(const CharPolyTable&, const CharPolyTable&) = default;
};

/// Set of characteristic polynomials without counts.
using CharPolySet = std::set<CycloProduct>;

/// Breadth-first closure of integer generators under left multiplication.
/// Entries are held in int8 with overflow checks; throws ArithmeticOverflow if
/// a coordinate leaves that range and SizeLimitError past `max_elements`.
CharPolyTable enumerate_group(const std::vector<IntMatrix>& generators, const SemisimpleType& label,
                              std::size_t max_elements = 50'000'000);

/// Combinatorial table for A_n (partitions), B_n (bipartitions) and D_n
/// (bipartitions with an even number of negative cycles).
CharPolyTable charpolys_classical(const SimpleType& t);

/// Exhaustive enumeration for G2, F4, E6, E7. E8 is rejected.
CharPolyTable charpolys_exceptional(const SimpleType& t);

/// Memoized table of one simple factor. E8 needs `e8_table`.
const CharPolyTable& simple_charpolys(const SimpleType& t, const CharPolyTable* e8_table = nullptr);

/// Direct-product table: polynomials multiply, counts multiply.
CharPolyTable product(const CharPolyTable& a, const CharPolyTable& b);

CharPolyTable charpolys(const SemisimpleType& t, const CharPolyTable* e8_table = nullptr);

/// Distinct characteristic polynomials of W(t), built factor by factor.
CharPolySet charpoly_set(const SemisimpleType& t, const CharPolyTable* e8_table = nullptr);
CharPolySet product(const CharPolySet& a, const CharPolySet& b);

/// Indices r such that Phi_r divides a characteristic polynomial; computed
/// from the degrees (r divides some degree).
std::set<int> ch_star(const SemisimpleType& t);

/// Number of degrees divisible by i.
int mu(const SemisimpleType& t, int i);
/// Phi_2-exponent accompanying the maximal Phi_i-exponent (i > 2), minimized.
int mu_prime(const SemisimpleType& t, int i, const CharPolyTable* e8_table = nullptr);
/// Maximal combined exponent of Phi_i and Phi_j (i != j).
int mu_joint(const SemisimpleType& t, int i, int j, const CharPolyTable* e8_table = nullptr);

/// The same invariants read directly off one table (no factor splitting).
int mu_from_table(const CharPolyTable& table, int i);
int mu_prime_from_table(const CharPolyTable& table, int i);
int mu_joint_from_table(const CharPolyTable& table, int i, int j);

struct InvariantProfile {
  std::map<int, int> mu;
  std::map<int, int> mu_prime;
  /// Keys (i, j) with i < j. Pairs that cannot be resolved without an E8
  /// table are absent.
  std::map<std::pair<int, int>, int> mu_joint;
  int index_bound = 0;

  friend auto operator<=>(const InvariantProfile&, const InvariantProfile&) = default;
  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const SemisimpleType& t, const CharPolyTable* e8_table = nullptr);

}  // namespace lieord
