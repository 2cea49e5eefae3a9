#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieord/weylchar.hpp"

namespace lieord {

/// Distinct characteristic polynomials of a reflection group, without counts.
struct CharPolyFamily {
  std::set<CycloProduct> polys;
  int rank = 0;

  static CharPolyFamily of(const SemisimpleType& t, const CharPolyTable* e8_table = nullptr);
  /// Throws NotAWeylFamily unless every entry has degree `rank` and Phi_1^rank is present.
  void check() const;

  friend bool operator==(const CharPolyFamily&, const CharPolyFamily&) = default;
};

/// Irreducible factors sharing the largest Coxeter number, with the
/// characteristic polynomial of their Coxeter element.
struct CoxeterBlock {
  int h = 0;
  SemisimpleType factors;
  CycloProduct f;
  int residual_dim = 0;
  /// Number of factor multisets matching the block degrees before the family check.
  int candidate_covers = 1;
};

/// a(d) = max exponent of Phi_d over the family.
int eigenspace_bound(const CharPolyFamily& family, int d);

/// Degrees recovered from a(d) by downward induction.
DegreeMultiset degrees_from_family(const CharPolyFamily& family);

/// Splits off every factor of maximal Coxeter number. The second member is
/// the family of the remaining factors. If several covers of the block degrees
/// exist, candidates whose product family fails to reproduce the input are
/// discarded; AmbiguousBlock is raised if more than one survives.
std::pair<CoxeterBlock, CharPolyFamily> peel_max_coxeter(const CharPolyFamily& family,
                                                         const CharPolyTable* e8_table = nullptr);

/// Peels blocks until nothing is left, then checks that the result reproduces
/// the whole family (NotAWeylFamily otherwise).
SemisimpleType reconstruct(const CharPolyFamily& family, const CharPolyTable* e8_table = nullptr);

struct DeterminationReport {
  int rank_bound = 0;
  std::string alphabet;
  std::size_t types_checked = 0;
  /// (a) pairs of distinct types with equal families.
  std::vector<std::pair<SemisimpleType, SemisimpleType>> family_collisions;
  /// (b) types that failed to round-trip, with the reason.
  std::vector<std::pair<SemisimpleType, std::string>> round_trip_failures;
  /// (c) pairs of distinct types with equal invariant profiles.
  std::vector<std::pair<SemisimpleType, SemisimpleType>> profile_collisions;
  bool profiles_checked = false;
  /// Number of blocks where the degree cover alone was not unique.
  std::size_t ambiguous_covers_resolved = 0;

  bool families_ok() const { return family_collisions.empty() && round_trip_failures.empty(); }
};

/// Exhaustive check over all types of rank <= rank_bound built from the
/// alphabet. Letters: A, B, D, G (G2), F (F4), E (E6, E7; E8 is never
/// enumerated).
DeterminationReport verify_determination(int rank_bound, std::string_view alphabet = "ABDGFE",
                                         bool check_profiles = true);

}  // namespace lieord
