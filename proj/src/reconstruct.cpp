#include "lieord/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "lieord/errors.hpp"

namespace lieord {

CharPolyFamily CharPolyFamily::of(const SemisimpleType& t, const CharPolyTable* e8_table) {
  return {charpoly_set(t, e8_table), t.rank()};
}

void CharPolyFamily::check() const {
  if (rank < 0) throw NotAWeylFamily("negative rank");
  for (const auto& p : polys) {
    if (p.degree() != rank) {
      throw NotAWeylFamily("entry " + p.to_string() + " has degree " + std::to_string(p.degree()) + ", expected " +
                           std::to_string(rank));
    }
  }
  const CycloProduct identity = rank > 0 ? CycloProduct::phi(1, rank) : CycloProduct{};
  if (!polys.contains(identity)) throw NotAWeylFamily("family lacks the identity polynomial " + identity.to_string());
}

int eigenspace_bound(const CharPolyFamily& family, int d) {
  int m = 0;
  for (const auto& p : family.polys) m = std::max(m, p.exponent(d));
  return m;
}

DegreeMultiset degrees_from_family(const CharPolyFamily& family) {
  family.check();
  int top = 1;
  for (const auto& p : family.polys) {
    for (const auto& [d, t] : p.exponents()) top = std::max(top, d);
  }
  DegreeMultiset found;  // descending while building
  for (int v = top; v >= 1; --v) {
    const int a = eigenspace_bound(family, v);
    const int above = static_cast<int>(std::count_if(found.begin(), found.end(), [v](int d) { return d % v == 0; }));
    const int mult = a - above;
    if (mult < 0) {
      throw NotAWeylFamily("a(" + std::to_string(v) + ") = " + std::to_string(a) + " is smaller than the " +
                           std::to_string(above) + " larger degrees it divides");
    }
    if (v == 1 && mult != 0) throw NotAWeylFamily("a(1) exceeds the number of recovered degrees");
    for (int k = 0; k < mult; ++k) found.push_back(v);
  }
  if (static_cast<int>(found.size()) != family.rank) {
    throw NotAWeylFamily("recovered " + std::to_string(found.size()) + " degrees for rank " +
                         std::to_string(family.rank));
  }
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

// All multisets over `catalogue` whose combined degrees equal `target` (sorted).
std::vector<SemisimpleType> degree_covers(const std::vector<SimpleType>& catalogue, const DegreeMultiset& target) {
  std::vector<SemisimpleType> out;
  std::vector<SimpleType> chosen;
  std::function<void(std::size_t, DegreeMultiset)> search = [&](std::size_t from, DegreeMultiset remaining) {
    if (remaining.empty()) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t i = from; i < catalogue.size(); ++i) {
      DegreeMultiset rest = remaining;
      bool fits = true;
      for (int d : catalogue[i].degrees()) {
        auto it = std::find(rest.begin(), rest.end(), d);
        if (it == rest.end()) {
          fits = false;
          break;
        }
        rest.erase(it);
      }
      if (!fits) continue;
      chosen.push_back(catalogue[i]);
      search(i, rest);
      chosen.pop_back();
    }
  };
  search(0, target);
  return out;
}

}  // namespace

std::pair<CoxeterBlock, CharPolyFamily> peel_max_coxeter(const CharPolyFamily& family, const CharPolyTable* e8_table) {
  if (family.rank < 1) throw NotAWeylFamily("cannot peel a rank-0 family");
  const DegreeMultiset degs = degrees_from_family(family);
  CoxeterBlock block;
  block.h = degs.back();
  const int h = block.h;
  const int b = eigenspace_bound(family, h);

  std::vector<CycloProduct> top;
  for (const auto& p : family.polys) {
    if (p.exponent(h) == b) top.push_back(p);
  }
  int best = -1;
  int best_count = 0;
  const CycloProduct* star = nullptr;
  for (const auto& p : top) {
    const int e = p.exponent(1);
    if (e > best) {
      best = e;
      best_count = 1;
      star = &p;
    } else if (e == best) {
      ++best_count;
    }
  }
  if (star == nullptr || best_count != 1) {
    throw NotAWeylFamily("no unique polynomial with maximal Phi_" + std::to_string(h) + "-exponent and maximal Phi_1-exponent");
  }
  block.f = star->without(1);
  block.residual_dim = best;

  // Eigenvalues zeta_h^e of the Coxeter element; the block degrees are e + 1.
  DegreeMultiset block_degrees;
  for (const auto& [d, t] : block.f.exponents()) {
    if (h % d != 0) throw NotAWeylFamily("Phi_" + std::to_string(d) + " in the Coxeter polynomial does not divide h = " + std::to_string(h));
    for (int k = 1; k <= d; ++k) {
      if (std::gcd(k, d) != 1) continue;
      for (int r = 0; r < t; ++r) block_degrees.push_back(k * (h / d) + 1);
    }
  }
  std::sort(block_degrees.begin(), block_degrees.end());

  std::vector<SimpleType> catalogue;
  for (const auto& s : types_with_coxeter_number(h)) {
    if (s.letter() == 'E' && s.rank() == 8 && e8_table == nullptr) continue;
    catalogue.push_back(s);
  }
  std::vector<SemisimpleType> covers = degree_covers(catalogue, block_degrees);
  if (covers.empty()) {
    throw NotAWeylFamily("no product of simple types with Coxeter number " + std::to_string(h) + " has the block degrees");
  }
  block.candidate_covers = static_cast<int>(covers.size());

  CharPolyFamily residual{{}, block.residual_dim};
  for (const auto& p : top) {
    auto q = p.divide(block.f);
    if (!q) throw NotAWeylFamily(p.to_string() + " is not divisible by the Coxeter polynomial " + block.f.to_string());
    residual.polys.insert(*q);
  }
  residual.check();

  if (covers.size() > 1) {
    // Equal degrees, different groups: keep the candidates that reproduce the family.
    std::vector<SemisimpleType> survivors;
    for (const auto& c : covers) {
      if (product(charpoly_set(c, e8_table), residual.polys) == family.polys) survivors.push_back(c);
    }
    if (survivors.size() != 1) {
      std::string names;
      for (const auto& c : covers) names += (names.empty() ? "" : ", ") + c.render();
      throw AmbiguousBlock("block with h = " + std::to_string(h) + " has " + std::to_string(survivors.size()) +
                           " consistent identifications among {" + names + "}");
    }
    covers = survivors;
  }
  block.factors = covers.front();
  return {block, residual};
}

SemisimpleType reconstruct(const CharPolyFamily& family, const CharPolyTable* e8_table) {
  family.check();
  SemisimpleType out;
  CharPolyFamily current = family;
  while (current.rank > 0) {
    auto [block, rest] = peel_max_coxeter(current, e8_table);
    out *= block.factors;
    current = std::move(rest);
  }
  // Peeling only reads part of the family; confirm the whole of it.
  if (charpoly_set(out, e8_table) != family.polys) {
    throw NotAWeylFamily("family is not the characteristic-polynomial set of " + out.render());
  }
  return out;
}

DeterminationReport verify_determination(int rank_bound, std::string_view alphabet, bool check_profiles) {
  DeterminationReport report;
  report.rank_bound = rank_bound;
  report.alphabet = std::string(alphabet);
  report.profiles_checked = check_profiles;

  std::vector<SimpleType> catalogue;
  for (const auto& s : simple_types_up_to(rank_bound, alphabet)) {
    if (s.letter() == 'E' && s.rank() == 8) continue;
    catalogue.push_back(s);
  }
  const auto types = semisimple_types_up_to(rank_bound, catalogue);
  report.types_checked = types.size();

  std::map<CharPolySet, SemisimpleType> by_family;
  std::map<InvariantProfile, SemisimpleType> by_profile;

  for (const auto& t : types) {
    CharPolyFamily family = CharPolyFamily::of(t);
    auto [it, fresh] = by_family.emplace(family.polys, t);
    if (!fresh) report.family_collisions.emplace_back(it->second, t);

    try {
      CharPolyFamily current = family;
      SemisimpleType rebuilt;
      while (current.rank > 0) {
        auto [block, rest] = peel_max_coxeter(current);
        if (block.candidate_covers > 1) ++report.ambiguous_covers_resolved;
        rebuilt *= block.factors;
        current = std::move(rest);
      }
      if (rebuilt != t) report.round_trip_failures.emplace_back(t, "reconstructed as " + rebuilt.render());
    } catch (const Error& e) {
      report.round_trip_failures.emplace_back(t, e.what());
    }

    if (check_profiles) {
      auto [pit, pfresh] = by_profile.emplace(invariant_profile(t), t);
      if (!pfresh) report.profile_collisions.emplace_back(pit->second, t);
    }
  }
  return report;
}

}  // namespace lieord
