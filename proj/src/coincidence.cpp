#include "lieord/coincidence.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "lieord/errors.hpp"
#include "lieord/orders.hpp"

namespace lieord {

namespace {

SimpleType S(char letter, int rank) { return SimpleType::make(letter, rank); }

}  // namespace

std::string CoincidencePair::render() const { return left.render() + ":" + right.render(); }

CoincidencePair CoincidencePair::oriented() const {
  if (right < left) return {right, left};
  return *this;
}

CoincidencePair parse_pair(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("pair must have the form L:R", std::string(text));
  auto side = [](std::string_view s) {
    const bool blank = std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    return blank ? SemisimpleType{} : parse_type(s);
  };
  return reduce(side(text.substr(0, colon)), side(text.substr(colon + 1)));
}

CoincidencePair reduce(const SemisimpleType& h1, const SemisimpleType& h2) {
  if (h1.degrees() != h2.degrees()) {
    throw NotCoincident(h1.render() + " and " + h2.render() + " have different degree multisets");
  }
  std::vector<SimpleType> left;
  std::vector<SimpleType> right;
  const auto& a = h1.factors();
  const auto& b = h2.factors();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(left));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(right));
  return {SemisimpleType(std::move(left)), SemisimpleType(std::move(right))};
}

CoincidencePair compose(const CoincidencePair& a, const CoincidencePair& b) {
  return reduce(a.left * b.left, a.right * b.right);
}

CoincidencePair inverse(const CoincidencePair& a) { return {a.right, a.left}; }

bool is_coincidence(const SemisimpleType& h1, const SemisimpleType& h2, const BigInt& q) {
  return order_value(h1, q) == order_value(h2, q);
}

std::vector<CoincidencePair> enumerate_two_factor_pairs(int rank_bound) {
  if (rank_bound < 2) throw DomainError("rank bound must be at least 2");
  const auto simple = simple_types_up_to(rank_bound - 1);
  std::map<DegreeMultiset, std::vector<SemisimpleType>> buckets;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    for (std::size_t j = i; j < simple.size(); ++j) {
      if (simple[i].rank() + simple[j].rank() > rank_bound) continue;
      SemisimpleType t{simple[i], simple[j]};
      buckets[t.degrees()].push_back(t);
    }
  }
  std::vector<CoincidencePair> out;
  for (const auto& [degs, types] : buckets) {
    for (std::size_t i = 0; i < types.size(); ++i) {
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        const CoincidencePair p = reduce(types[i], types[j]);
        if (p.left.size() == 2 && p.right.size() == 2) out.push_back(p.oriented());
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoincidencePair> classified_two_factor_pairs(int rank_bound) {
  std::vector<CoincidencePair> out;
  auto add = [&](SemisimpleType l, SemisimpleType r) {
    if (l.rank() <= rank_bound) out.push_back(reduce(l, r).oriented());
  };
  for (int n = 2; 3 * n - 2 <= rank_bound; ++n) add({S('A', 2 * n - 2), S('B', n)}, {S('A', 2 * n - 1), S('B', n - 1)});
  for (int n = 4; 2 * n - 2 <= rank_bound; ++n) add({S('A', n - 2), S('D', n)}, {S('A', n - 1), S('B', n - 1)});
  for (int n = 2; 3 * n - 1 <= rank_bound; ++n) add({S('B', n - 1), S('D', 2 * n)}, {S('B', 2 * n - 1), S('B', n)});
  add({S('A', 1), S('A', 5)}, {S('A', 4), S('G', 2)});
  add({S('A', 1), S('B', 3)}, {S('B', 2), S('G', 2)});
  add({S('A', 1), S('D', 6)}, {S('B', 5), S('G', 2)});
  add({S('A', 2), S('B', 3)}, {S('A', 3), S('G', 2)});
  add({S('B', 3), S('B', 3)}, {S('D', 4), S('G', 2)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GeneratorId GeneratorId::make(char letter, int n) {
  letter = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  const bool valid = (letter == 'B' && n >= 2) || (letter == 'D' && n >= 4) || (letter == 'G' && n == 2) ||
                     (letter == 'F' && n == 4) || (letter == 'E' && n >= 6 && n <= 8);
  if (!valid) throw DomainError("no generator " + std::string(1, letter) + std::to_string(n));
  return {letter, n};
}

GeneratorId GeneratorId::parse(std::string_view text) {
  if (text.size() < 2 || !std::all_of(text.begin() + 1, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || text.size() > 7) {
    throw ParseError("malformed generator label", std::string(text));
  }
  try {
    return make(text[0], std::stoi(std::string(text.substr(1))));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), std::string(text));
  }
}

std::string GeneratorId::render() const { return std::string(1, letter) + std::to_string(n); }

CoincidencePair generator(const GeneratorId& id) {
  SemisimpleType l;
  SemisimpleType r;
  const int n = id.n;
  switch (id.letter) {
    case 'B':
      l = {S('A', 2 * n - 2), S('B', n)};
      r = {S('A', 2 * n - 1), S('B', n - 1)};
      break;
    case 'D':
      l = {S('A', n - 2), S('D', n)};
      r = {S('A', n - 1), S('B', n - 1)};
      break;
    case 'G':
      l = {S('A', 2), S('B', 3)};
      r = {S('A', 3), S('G', 2)};
      break;
    case 'F':
      l = {S('A', 1), S('B', 4), S('B', 6)};
      r = {S('B', 2), S('B', 5), S('F', 4)};
      break;
    case 'E':
      if (n == 6) {
        l = {S('A', 4), S('G', 2), S('A', 8), S('B', 6)};
        r = {S('A', 3), S('A', 6), S('B', 5), S('E', 6)};
      } else if (n == 7) {
        l = {S('A', 1), S('B', 7), S('B', 9)};
        r = {S('B', 2), S('B', 8), S('E', 7)};
      } else {
        l = {S('A', 1), S('B', 4), S('B', 7), S('B', 10), S('B', 12), S('B', 15)};
        r = {S('B', 3), S('B', 5), S('B', 8), S('B', 11), S('B', 14), S('E', 8)};
      }
      break;
    default:
      throw DomainError("unknown generator " + id.render());
  }
  CoincidencePair p = reduce(l, r);
  if (p.left != l || p.right != r) throw Error("generator " + id.render() + " is not reduced");
  return p;
}

int GeneratorId::level() const { return generator(*this).left.max_degree(); }
int GeneratorId::rank() const { return generator(*this).left.rank(); }

std::map<GeneratorId, CoincidencePair> generators(int rank_bound) {
  std::map<GeneratorId, CoincidencePair> out;
  for (int n = 2; 3 * n - 2 <= rank_bound; ++n) out.emplace(GeneratorId::make('B', n), generator(GeneratorId::make('B', n)));
  for (int n = 4; 2 * n - 2 <= rank_bound; ++n) out.emplace(GeneratorId::make('D', n), generator(GeneratorId::make('D', n)));
  for (auto id : {GeneratorId::make('G', 2), GeneratorId::make('F', 4), GeneratorId::make('E', 6),
                  GeneratorId::make('E', 7), GeneratorId::make('E', 8)}) {
    CoincidencePair p = generator(id);
    if (p.left.rank() <= rank_bound) out.emplace(id, p);
  }
  return out;
}

std::string render(const GeneratorWord& word) {
  std::string s;
  for (const auto& l : word) {
    if (!s.empty()) s += " ";
    s += l.id.render() + (l.sign > 0 ? "+" : "-");
  }
  return s;
}

CoincidencePair evaluate(const GeneratorWord& word) {
  CoincidencePair acc;
  for (const auto& l : word) {
    const CoincidencePair g = generator(l.id);
    acc = compose(acc, l.sign > 0 ? g : inverse(g));
  }
  return acc;
}

namespace {

// Generators whose largest degree is exactly n.
std::vector<GeneratorId> level_generators(int n) {
  std::vector<GeneratorId> out;
  if (n % 2 == 0 && n / 2 >= 2) out.push_back(GeneratorId::make('B', n / 2));
  if (n % 2 == 0 && n / 2 + 1 >= 4) out.push_back(GeneratorId::make('D', n / 2 + 1));
  if (n == 6) out.push_back(GeneratorId::make('G', 2));
  if (n == 12) {
    out.push_back(GeneratorId::make('F', 4));
    out.push_back(GeneratorId::make('E', 6));
  }
  if (n == 18) out.push_back(GeneratorId::make('E', 7));
  if (n == 30) out.push_back(GeneratorId::make('E', 8));
  return out;
}

// k1 once on the left, k2 once on the right, every other factor of degree < n.
bool peels(const CoincidencePair& e, const SimpleType& k1, const SimpleType& k2, int n) {
  SemisimpleType l = e.left;
  SemisimpleType r = e.right;
  if (!l.remove_one(k1) || !r.remove_one(k2)) return false;
  return l.max_degree() < n && r.max_degree() < n;
}

struct PeelCache {
  std::mutex mutex;
  std::map<std::pair<SimpleType, SimpleType>, std::optional<GeneratorWord>> words;
};

PeelCache& peel_cache() {
  static PeelCache cache;
  return cache;
}

// Word e with k1 on the left of evaluate(e) and k2 on the right.
std::optional<GeneratorWord> find_peeling_word(const SimpleType& k1, const SimpleType& k2, int n) {
  std::vector<GeneratorLetter> letters;
  for (const auto& id : level_generators(n)) {
    letters.push_back({id, 1});
    letters.push_back({id, -1});
  }
  std::vector<std::pair<GeneratorWord, CoincidencePair>> frontier{{{}, CoincidencePair{}}};
  for (int length = 1; length <= 3; ++length) {
    std::vector<std::pair<GeneratorWord, CoincidencePair>> next;
    for (const auto& [word, value] : frontier) {
      for (const auto& letter : letters) {
        GeneratorWord w = word;
        w.push_back(letter);
        const CoincidencePair g = generator(letter.id);
        CoincidencePair v = compose(value, letter.sign > 0 ? g : inverse(g));
        if (peels(v, k1, k2, n)) return w;
        next.emplace_back(std::move(w), std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

GeneratorWord peeling_word(const SimpleType& k1, const SimpleType& k2, int n) {
  auto& cache = peel_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.words.find({k1, k2});
    if (it != cache.words.end()) {
      if (!it->second) throw NoPeelingElement("no peeling element for " + k1.render() + " / " + k2.render());
      return *it->second;
    }
  }
  auto found = find_peeling_word(k1, k2, n);
  std::lock_guard lock(cache.mutex);
  cache.words[{k1, k2}] = found;
  if (!found) throw NoPeelingElement("no peeling element for " + k1.render() + " / " + k2.render());
  return *found;
}

GeneratorWord normalize(const GeneratorWord& word) {
  std::map<GeneratorId, int> net;
  for (const auto& l : word) net[l.id] += l.sign;
  GeneratorWord out;
  for (const auto& [id, e] : net) {
    for (int k = 0; k < std::abs(e); ++k) out.push_back({id, e > 0 ? 1 : -1});
  }
  return out;
}

}  // namespace

GeneratorWord decompose(const CoincidencePair& p) {
  const CoincidencePair start = reduce(p.left, p.right);
  if (start != p) throw NotCoincident(p.render() + " is not reduced");
  CoincidencePair current = p;
  GeneratorWord word;
  while (!current.is_identity()) {
    const int n = current.left.max_degree();
    const SimpleType* k1 = nullptr;
    const SimpleType* k2 = nullptr;
    for (const auto& f : current.left.factors()) {
      if (f.coxeter_number() == n) k1 = &f;
    }
    for (const auto& f : current.right.factors()) {
      if (f.coxeter_number() == n) k2 = &f;
    }
    if (k1 == nullptr || k2 == nullptr) throw Error("pair " + current.render() + " has unequal top degrees");
    const GeneratorWord e = peeling_word(*k1, *k2, n);
    // current = rest o e
    current = compose(current, inverse(evaluate(e)));
    word.insert(word.end(), e.begin(), e.end());
  }
  word = normalize(word);
  if (evaluate(word) != p) throw Error("decomposition of " + p.render() + " does not evaluate back");
  return word;
}

CoincidencePair random_generator_product(std::mt19937_64& rng, int rank_bound, int max_length) {
  std::vector<GeneratorId> ids;
  for (const auto& [id, pair] : generators(rank_bound)) ids.push_back(id);
  if (ids.empty()) throw DomainError("no generators within the rank bound");
  std::uniform_int_distribution<int> length_dist(1, std::max(1, max_length));
  std::uniform_int_distribution<std::size_t> id_dist(0, ids.size() - 1);
  std::bernoulli_distribution sign_dist(0.5);
  GeneratorWord w;
  const int length = length_dist(rng);
  for (int k = 0; k < length; ++k) w.push_back({ids[id_dist(rng)], sign_dist(rng) ? 1 : -1});
  return evaluate(w);
}

GroupAxiomsReport verify_group_axioms(int samples, int rank_bound, std::uint64_t seed) {
  GroupAxiomsReport report;
  report.samples = samples;
  std::mt19937_64 rng(seed);
  const CoincidencePair identity;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) report.violations.push_back(what);
  };
  auto valid = [](const CoincidencePair& p) {
    if (p.left.degrees() != p.right.degrees()) return false;
    const auto& a = p.left.factors();
    const auto& b = p.right.factors();
    std::vector<SimpleType> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.empty();
  };
  for (int s = 0; s < samples; ++s) {
    const CoincidencePair a = random_generator_product(rng, rank_bound);
    const CoincidencePair b = random_generator_product(rng, rank_bound);
    const CoincidencePair c = random_generator_product(rng, rank_bound);
    const std::string tag = " [" + a.render() + ", " + b.render() + ", " + c.render() + "]";
    check(compose(compose(a, b), c) == compose(a, compose(b, c)), "associativity" + tag);
    check(compose(a, b) == compose(b, a), "commutativity" + tag);
    check(compose(a, identity) == a && compose(identity, a) == a, "identity" + tag);
    check(compose(a, inverse(a)).is_identity(), "inverse" + tag);
    check(inverse(inverse(a)) == a, "double inverse" + tag);
    check(valid(a) && valid(compose(a, b)) && valid(compose(compose(a, b), c)), "pair invariant" + tag);
  }
  return report;
}

}  // namespace lieord
