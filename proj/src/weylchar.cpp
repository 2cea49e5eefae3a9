#include "lieord/weylchar.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "lieord/errors.hpp"

namespace lieord {

std::set<CycloProduct> CharPolyTable::polynomials() const {
  std::set<CycloProduct> out;
  for (const auto& [p, c] : entries) out.insert(p);
  return out;
}

int CharPolyTable::max_exponent(int d) const {
  int m = 0;
  for (const auto& [p, c] : entries) m = std::max(m, p.exponent(d));
  return m;
}

std::set<int> CharPolyTable::indices() const {
  std::set<int> out;
  for (const auto& [p, c] : entries) {
    for (const auto& [d, t] : p.exponents()) out.insert(d);
  }
  return out;
}

void CharPolyTable::validate() const {
  const int n = rank();
  BigInt total = 0;
  for (const auto& [p, c] : entries) {
    if (p.degree() != n) {
      throw CacheInvalid("degree certificate failed for " + type.render() + ": entry " + p.to_string() +
                         " has degree " + std::to_string(p.degree()) + ", rank is " + std::to_string(n));
    }
    if (c < 1) throw CacheInvalid("count certificate failed for " + type.render() + ": nonpositive count");
    total += c;
  }
  if (total != group_order) {
    throw CacheInvalid("sum-of-counts certificate failed for " + type.render() + ": counts sum to " +
                       total.str() + ", group order is " + group_order.str());
  }
  if (group_order != type.weyl_order()) {
    throw CacheInvalid("group order certificate failed for " + type.render() + ": expected " +
                       type.weyl_order().str() + ", found " + group_order.str());
  }
  CycloProduct identity;
  if (n > 0) identity = CycloProduct::phi(1, n);
  auto it = entries.find(identity);
  if (it == entries.end() || it->second != 1) {
    throw CacheInvalid("identity certificate failed for " + type.render() + ": Phi_1^rank must occur exactly once");
  }
}

namespace {

constexpr int kMaxDim = 8;
using Coeffs = std::array<std::int64_t, kMaxDim + 1>;

struct CoeffsHash {
  std::size_t operator()(const Coeffs& c) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int64_t v : c) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier, constant term first.
Coeffs charpoly(const std::int8_t* a, int n) {
  Coeffs c{};
  c[n] = 1;
  std::array<std::int64_t, kMaxDim * kMaxDim> m{};
  std::array<std::int64_t, kMaxDim * kMaxDim> am{};
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  for (int k = 1; k <= n; ++k) {
    // am = A * m
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int l = 0; l < n; ++l) s += a[i * n + l] * m[l * n + j];
        am[i * n + j] = s;
      }
    }
    std::int64_t trace = 0;
    for (int i = 0; i < n; ++i) trace += am[i * n + i];
    c[n - k] = -trace / k;
    m = am;
    for (int i = 0; i < n; ++i) m[i * n + i] += c[n - k];
  }
  return c;
}

std::uint64_t hash_bytes(const std::int8_t* p, std::size_t len) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= static_cast<std::uint8_t>(p[i]);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

struct Generator {
  std::vector<int> rows;  // rows where the generator differs from the identity
  IntMatrix matrix;
};

}  // namespace

CharPolyTable enumerate_group(const std::vector<IntMatrix>& generators, const SemisimpleType& label,
                              std::size_t max_elements) {
  const int n = label.rank();
  if (n == 0) return charpolys(SemisimpleType{});
  if (n > kMaxDim) throw SizeLimitError("exhaustive enumeration supports rank <= 8");
  const std::size_t cells = static_cast<std::size_t>(n) * n;

  std::vector<Generator> gens;
  for (const auto& g : generators) {
    if (g.size() != n) throw DomainError("generator size does not match the rank of " + label.render());
    Generator gen{{}, g};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (g(i, j) != (i == j ? 1 : 0)) {
          gen.rows.push_back(i);
          break;
        }
      }
    }
    gens.push_back(std::move(gen));
  }

  std::vector<std::int8_t> elems;
  std::size_t count = 0;
  constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> slots(1 << 10, kEmpty);
  std::size_t mask = slots.size() - 1;

  auto find_or_insert = [&](const std::int8_t* m) -> bool {
    std::size_t pos = hash_bytes(m, cells) & mask;
    while (slots[pos] != kEmpty) {
      if (std::equal(m, m + cells, elems.data() + slots[pos] * cells)) return false;
      pos = (pos + 1) & mask;
    }
    if (count >= max_elements) throw SizeLimitError("group enumeration exceeded the element budget");
    slots[pos] = static_cast<std::uint32_t>(count);
    elems.insert(elems.end(), m, m + cells);
    ++count;
    if (2 * count > slots.size()) {
      std::vector<std::uint32_t> bigger(slots.size() * 2, kEmpty);
      const std::size_t bigger_mask = bigger.size() - 1;
      for (std::uint32_t idx : slots) {
        if (idx == kEmpty) continue;
        std::size_t p = hash_bytes(elems.data() + idx * cells, cells) & bigger_mask;
        while (bigger[p] != kEmpty) p = (p + 1) & bigger_mask;
        bigger[p] = idx;
      }
      slots.swap(bigger);
      mask = bigger_mask;
    }
    return true;
  };

  std::vector<std::int8_t> buf(cells, 0);
  for (int i = 0; i < n; ++i) buf[i * n + i] = 1;
  find_or_insert(buf.data());

  std::unordered_map<Coeffs, std::uint64_t, CoeffsHash> poly_counts;
  for (std::size_t idx = 0; idx < count; ++idx) {
    poly_counts[charpoly(elems.data() + idx * cells, n)] += 1;
    for (const auto& g : gens) {
      std::copy(elems.begin() + idx * cells, elems.begin() + (idx + 1) * cells, buf.begin());
      const std::int8_t* cur = elems.data() + idx * cells;
      for (int r : g.rows) {
        for (int j = 0; j < n; ++j) {
          std::int64_t s = 0;
          for (int k = 0; k < n; ++k) s += g.matrix(r, k) * cur[k * n + j];
          if (s < std::numeric_limits<std::int8_t>::min() || s > std::numeric_limits<std::int8_t>::max()) {
            throw ArithmeticOverflow("matrix entry left the int8 range while enumerating " + label.render());
          }
          buf[r * n + j] = static_cast<std::int8_t>(s);
        }
      }
      find_or_insert(buf.data());
    }
  }

  CharPolyTable table{label, BigInt(count), {}};
  for (const auto& [coeffs, c] : poly_counts) {
    auto factored = cyclotomic_factorization(std::span<const std::int64_t>(coeffs.data(), n + 1));
    if (!factored) throw Error("characteristic polynomial is not a product of cyclotomic polynomials");
    table.entries[*factored] += c;
  }
  return table;
}

namespace {

using Partition = std::vector<int>;

void partitions_of(int n, int max_part, Partition& current, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_of(n - part, part, current, out);
    current.pop_back();
  }
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition current;
  partitions_of(n, n, current, out);
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Centralizer order prod_i w(i)^{m_i} m_i! where m_i counts parts equal to i.
BigInt centralizer(const Partition& p, int weight_per_length) {
  std::map<int, int> mult;
  for (int part : p) mult[part] += 1;
  BigInt z = 1;
  for (const auto& [len, m] : mult) z *= pow(BigInt(weight_per_length * len), static_cast<unsigned>(m)) * factorial(m);
  return z;
}

}  // namespace

CharPolyTable charpolys_classical(const SimpleType& t) {
  const int n = t.rank();
  CharPolyTable table{SemisimpleType{t}, t.weyl_order(), {}};
  switch (t.letter()) {
    case 'A': {
      const BigInt sym_order = factorial(n + 1);
      for (const auto& lambda : partitions(n + 1)) {
        CycloProduct poly;
        for (int part : lambda) poly *= factor_power_minus_one(part);
        poly = *poly.divide(CycloProduct::phi(1));
        table.entries[poly] += sym_order / centralizer(lambda, 1);
      }
      break;
    }
    case 'B':
    case 'D': {
      const BigInt hyper_order = pow(BigInt(2), static_cast<unsigned>(n)) * factorial(n);
      for (int k = 0; k <= n; ++k) {
        const auto positive = partitions(k);
        const auto negative = partitions(n - k);
        for (const auto& lambda : positive) {
          for (const auto& nu : negative) {
            if (t.letter() == 'D' && nu.size() % 2 != 0) continue;
            CycloProduct poly;
            for (int part : lambda) poly *= factor_power_minus_one(part);
            for (int part : nu) poly *= factor_power_plus_one(part);
            // split D_n classes (nu empty, all parts even) keep their combined size
            table.entries[poly] += hyper_order / (centralizer(lambda, 2) * centralizer(nu, 2));
          }
        }
      }
      break;
    }
    default:
      throw DomainError("charpolys_classical handles A, B and D only, not " + t.render());
  }
  return table;
}

CharPolyTable charpolys_exceptional(const SimpleType& t) {
  if (t.letter() == 'E' && t.rank() == 8) {
    throw E8WithoutTable(
        "W(E8) has 696729600 elements and is not enumerated; supply a validated E8 table (cache file E8.json)");
  }
  if (!t.is_exceptional()) throw DomainError("charpolys_exceptional handles G2, F4, E6, E7 only, not " + t.render());
  CharPolyTable table = enumerate_group(reflection_generators(t), SemisimpleType{t});
  if (table.group_order != t.weyl_order()) {
    throw Error("enumeration of " + t.render() + " produced " + table.group_order.str() + " elements, expected " +
                t.weyl_order().str());
  }
  return table;
}

namespace {

struct SimpleTableCache {
  std::mutex mutex;
  std::map<SimpleType, std::unique_ptr<CharPolyTable>> tables;
};

SimpleTableCache& simple_table_cache() {
  static SimpleTableCache cache;
  return cache;
}

bool is_e8(const SimpleType& t) { return t.letter() == 'E' && t.rank() == 8; }

}  // namespace

const CharPolyTable& simple_charpolys(const SimpleType& t, const CharPolyTable* e8_table) {
  if (is_e8(t)) {
    if (e8_table == nullptr) {
      throw E8WithoutTable("E8 factor requires a supplied characteristic-polynomial table (cache file E8.json)");
    }
    if (e8_table->type != SemisimpleType{t}) throw DomainError("supplied E8 table is labelled " + e8_table->type.render());
    return *e8_table;
  }
  auto& cache = simple_table_cache();
  std::lock_guard lock(cache.mutex);
  auto it = cache.tables.find(t);
  if (it != cache.tables.end()) return *it->second;
  auto table = std::make_unique<CharPolyTable>(t.is_exceptional() ? charpolys_exceptional(t) : charpolys_classical(t));
  auto [pos, inserted] = cache.tables.emplace(t, std::move(table));
  return *pos->second;
}

CharPolyTable product(const CharPolyTable& a, const CharPolyTable& b) {
  CharPolyTable out{a.type * b.type, a.group_order * b.group_order, {}};
  for (const auto& [pa, ca] : a.entries) {
    for (const auto& [pb, cb] : b.entries) out.entries[pa * pb] += ca * cb;
  }
  return out;
}

CharPolyTable charpolys(const SemisimpleType& t, const CharPolyTable* e8_table) {
  CharPolyTable acc{SemisimpleType{}, 1, {{CycloProduct{}, 1}}};
  for (const auto& f : t.factors()) acc = product(acc, simple_charpolys(f, e8_table));
  return acc;
}

CharPolySet product(const CharPolySet& a, const CharPolySet& b) {
  CharPolySet out;
  for (const auto& pa : a) {
    for (const auto& pb : b) out.insert(pa * pb);
  }
  return out;
}

CharPolySet charpoly_set(const SemisimpleType& t, const CharPolyTable* e8_table) {
  CharPolySet acc{CycloProduct{}};
  for (const auto& f : t.factors()) acc = product(acc, simple_charpolys(f, e8_table).polynomials());
  return acc;
}

std::set<int> ch_star(const SemisimpleType& t) {
  std::set<int> out;
  for (int d : t.degrees()) {
    for (std::uint64_t e : divisors(static_cast<std::uint64_t>(d))) out.insert(static_cast<int>(e));
  }
  return out;
}

int mu(const SemisimpleType& t, int i) {
  if (i < 1) throw DomainError("mu index must be >= 1");
  int count = 0;
  for (int d : t.degrees()) count += (d % i == 0) ? 1 : 0;
  return count;
}

int mu_from_table(const CharPolyTable& table, int i) {
  if (i < 1) throw DomainError("mu index must be >= 1");
  return table.max_exponent(i);
}

int mu_prime_from_table(const CharPolyTable& table, int i) {
  if (i <= 2) throw DomainError("mu_prime is defined for i > 2 only");
  const int top = table.max_exponent(i);
  int best = std::numeric_limits<int>::max();
  for (const auto& [p, c] : table.entries) {
    if (p.exponent(i) == top) best = std::min(best, p.exponent(2));
  }
  return best;
}

int mu_joint_from_table(const CharPolyTable& table, int i, int j) {
  if (i < 1 || j < 1) throw DomainError("mu_joint indices must be >= 1");
  if (i == j) throw DomainError("mu_joint requires distinct indices");
  int best = 0;
  for (const auto& [p, c] : table.entries) best = std::max(best, p.exponent(i) + p.exponent(j));
  return best;
}

int mu_prime(const SemisimpleType& t, int i, const CharPolyTable* e8_table) {
  if (i <= 2) throw DomainError("mu_prime is defined for i > 2 only");
  int total = 0;
  for (const auto& f : t.factors()) {
    const SemisimpleType single{f};
    if (mu(single, i) == 0) continue;  // the identity attains the minimum 0
    if (is_e8(f) && e8_table == nullptr) {
      throw Unresolvable("mu'_" + std::to_string(i) + " of E8 needs an E8 table");
    }
    total += mu_prime_from_table(simple_charpolys(f, e8_table), i);
  }
  return total;
}

int mu_joint(const SemisimpleType& t, int i, int j, const CharPolyTable* e8_table) {
  if (i < 1 || j < 1) throw DomainError("mu_joint indices must be >= 1");
  if (i == j) throw DomainError("mu_joint requires distinct indices");
  int total = 0;
  for (const auto& f : t.factors()) {
    const SemisimpleType single{f};
    const int mi = mu(single, i);
    const int mj = mu(single, j);
    if (mi == 0 || mj == 0) {
      total += mi + mj;
      continue;
    }
    if (is_e8(f) && e8_table == nullptr) {
      throw Unresolvable("mu_{" + std::to_string(i) + "," + std::to_string(j) + "} of E8 needs an E8 table");
    }
    total += mu_joint_from_table(simple_charpolys(f, e8_table), i, j);
  }
  return total;
}

namespace {

InvariantProfile simple_profile(const SimpleType& f, int bound, const CharPolyTable* e8_table) {
  const SemisimpleType single{f};
  InvariantProfile profile;
  profile.index_bound = bound;
  for (int i = 1; i <= bound; ++i) profile.mu[i] = mu(single, i);
  for (int i = 3; i <= bound; ++i) {
    try {
      profile.mu_prime[i] = mu_prime(single, i, e8_table);
    } catch (const Unresolvable&) {
    }
  }
  for (int i = 1; i <= bound; ++i) {
    for (int j = i + 1; j <= bound; ++j) {
      try {
        profile.mu_joint[{i, j}] = mu_joint(single, i, j, e8_table);
      } catch (const Unresolvable&) {
      }
    }
  }
  return profile;
}

const InvariantProfile& cached_simple_profile(const SimpleType& f, int bound) {
  static std::mutex mutex;
  static std::map<std::pair<SimpleType, int>, InvariantProfile> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({f, bound});
  if (it == cache.end()) it = cache.emplace(std::make_pair(f, bound), simple_profile(f, bound, nullptr)).first;
  return it->second;
}

template <class Key>
void accumulate(std::map<Key, int>& total, const std::map<Key, int>& part, bool first) {
  if (first) {
    total = part;
    return;
  }
  // keys missing from either side stay missing
  for (auto it = total.begin(); it != total.end();) {
    auto p = part.find(it->first);
    if (p == part.end()) {
      it = total.erase(it);
    } else {
      it->second += p->second;
      ++it;
    }
  }
}

}  // namespace

InvariantProfile invariant_profile(const SemisimpleType& t, const CharPolyTable* e8_table) {
  const int bound = std::max(30, 2 * t.rank());
  InvariantProfile profile;
  profile.index_bound = bound;
  if (t.empty()) {
    for (int i = 1; i <= bound; ++i) profile.mu[i] = 0;
    for (int i = 3; i <= bound; ++i) profile.mu_prime[i] = 0;
    for (int i = 1; i <= bound; ++i) {
      for (int j = i + 1; j <= bound; ++j) profile.mu_joint[{i, j}] = 0;
    }
    return profile;
  }
  bool first = true;
  for (const auto& f : t.factors()) {
    const bool uncached = is_e8(f) && e8_table != nullptr;
    const InvariantProfile part = uncached ? simple_profile(f, bound, e8_table) : cached_simple_profile(f, bound);
    accumulate(profile.mu, part.mu, first);
    accumulate(profile.mu_prime, part.mu_prime, first);
    accumulate(profile.mu_joint, part.mu_joint, first);
    first = false;
  }
  return profile;
}

}  // namespace lieord
