#include "lieord/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lieord/cache.hpp"
#include "lieord/coincidence.hpp"
#include "lieord/compalg.hpp"
#include "lieord/errors.hpp"
#include "lieord/factor.hpp"
#include "lieord/orders.hpp"
#include "lieord/reconstruct.hpp"

namespace lieord::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string type;
  std::string q;
  bool factored = false;
  std::string cache_dir;
  int mu_index = 0;
  std::vector<int> joint;
  std::string input;
  int factors = 2;
  int max_rank = -1;
  std::string pair;
  std::string order;
  std::string suite;
  int samples = 0;
};

BigInt parse_big(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 1000 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(what + " must be a positive decimal integer", s);
  }
  return BigInt(s);
}

ordered_json degrees_json(const DegreeMultiset& d) { return ordered_json(d); }

ordered_json exps_json(const CycloProduct& p) {
  ordered_json o = ordered_json::object();
  for (const auto& [d, t] : p.exponents()) o[std::to_string(d)] = t;
  return o;
}

// Table for t, going through the cache for exceptional factors when a directory is given.
CharPolyTable table_for(const SemisimpleType& t, const std::string& cache_dir) {
  if (cache_dir.empty()) return charpolys(t);
  CharPolyTable acc{SemisimpleType{}, 1, {{CycloProduct{}, 1}}};
  for (const auto& f : t.factors()) acc = product(acc, cached_simple_table(f, cache_dir));
  return acc;
}

std::optional<CharPolyTable> e8_from(const std::string& cache_dir) {
  if (cache_dir.empty()) return std::nullopt;
  return load_e8_table(cache_dir);
}

int cmd_order(const Options& o, std::ostream& out, std::ostream& err) {
  const SemisimpleType t = parse_type(o.type);
  const BigInt q = parse_big(o.q, "--q");
  const FactoredOrder f = order_factored(t, q);
  ordered_json j;
  j["type"] = t.render();
  j["q"] = q.str();
  j["p"] = f.p.str();
  j["order"] = f.value().str();
  if (o.factored) {
    j["N"] = f.n_exp;
    j["degrees"] = degrees_json(f.degrees);
    j["factored"] = f.to_string();
    j["cyclotomic"] = exps_json(f.cyclotomic_part());
  }
  out << j.dump(2) << '\n';
  err << "|" << t.render() << "(F_" << q << ")| = " << f.value() << '\n';
  return kExitOk;
}

int cmd_charpolys(const Options& o, std::ostream& out, std::ostream& err) {
  const SemisimpleType t = parse_type(o.type);
  const CharPolyTable table = table_for(t, o.cache_dir);
  ordered_json entries = ordered_json::array();
  for (const auto& [p, c] : table.entries) {
    entries.push_back({{"poly", p.to_string()}, {"exps", exps_json(p)}, {"count", c.str()}});
  }
  ordered_json j;
  j["type"] = t.render();
  j["group_order"] = table.group_order.str();
  j["distinct"] = table.entries.size();
  j["entries"] = entries;
  out << j.dump(2) << '\n';
  err << t.render() << ": " << table.entries.size() << " distinct characteristic polynomials over "
      << table.group_order << " elements\n";
  return kExitOk;
}

int cmd_invariants(const Options& o, std::ostream& out, std::ostream& err) {
  const SemisimpleType t = parse_type(o.type);
  const auto e8 = e8_from(o.cache_dir);
  const CharPolyTable* e8p = e8 ? &*e8 : nullptr;
  ordered_json j;
  j["type"] = t.render();
  j["degrees"] = degrees_json(t.degrees());
  j["ch_star"] = ch_star(t);
  if (o.mu_index != 0) {
    const int i = o.mu_index;
    j["i"] = i;
    j["mu"] = mu(t, i);
    if (i > 2) {
      try {
        j["mu_prime"] = mu_prime(t, i, e8p);
      } catch (const Unresolvable& e) {
        j["mu_prime"] = nullptr;
        err << e.what() << '\n';
      }
    }
  }
  if (!o.joint.empty()) {
    j["joint"] = o.joint;
    j["mu_joint"] = mu_joint(t, o.joint[0], o.joint[1], e8p);
  }
  if (o.mu_index == 0 && o.joint.empty()) {
    const InvariantProfile profile = invariant_profile(t, e8p);
    j["index_bound"] = profile.index_bound;
    ordered_json m = ordered_json::object();
    for (const auto& [i, v] : profile.mu) m[std::to_string(i)] = v;
    ordered_json mp = ordered_json::object();
    for (const auto& [i, v] : profile.mu_prime) mp[std::to_string(i)] = v;
    ordered_json mj = ordered_json::object();
    for (const auto& [ij, v] : profile.mu_joint) {
      if (v != 0) mj[std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
    }
    j["mu"] = m;
    j["mu_prime"] = mp;
    j["mu_joint_nonzero"] = mj;
  }
  out << j.dump(2) << '\n';
  err << t.render() << ": degrees";
  for (int d : t.degrees()) err << ' ' << d;
  err << '\n';
  return kExitOk;
}

CharPolyFamily read_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file", path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    CharPolyFamily f;
    f.rank = doc.at("rank").get<int>();
    for (const auto& p : doc.at("polys")) {
      CycloProduct poly;
      for (const auto& [key, value] : p.items()) {
        std::size_t used = 0;
        const int d = std::stoi(key, &used);
        const int t = value.get<int>();
        if (used != key.size() || d < 1 || t < 1) throw ParseError("bad cyclotomic exponent entry", key);
        poly.add(d, t);
      }
      f.polys.insert(poly);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed family JSON: ") + e.what(), path);
  } catch (const std::invalid_argument&) {
    throw ParseError("cyclotomic index is not an integer", path);
  } catch (const std::out_of_range&) {
    throw ParseError("cyclotomic index out of range", path);
  }
}

int cmd_reconstruct(const Options& o, std::ostream& out, std::ostream& err) {
  const CharPolyFamily family = read_family(o.input);
  const auto e8 = e8_from(o.cache_dir);
  const CharPolyTable* e8p = e8 ? &*e8 : nullptr;
  family.check();
  ordered_json blocks = ordered_json::array();
  SemisimpleType result;
  CharPolyFamily current = family;
  while (current.rank > 0) {
    auto [block, rest] = peel_max_coxeter(current, e8p);
    blocks.push_back({{"h", block.h},
                      {"factors", block.factors.render()},
                      {"coxeter_poly", block.f.to_string()},
                      {"residual_dim", block.residual_dim},
                      {"candidate_covers", block.candidate_covers}});
    result *= block.factors;
    current = std::move(rest);
  }
  if (charpoly_set(result, e8p) != family.polys) {
    throw NotAWeylFamily("family is not the characteristic-polynomial set of " + result.render());
  }
  ordered_json j;
  j["type"] = result.render();
  j["rank"] = family.rank;
  j["degrees"] = degrees_json(degrees_from_family(family));
  j["blocks"] = blocks;
  out << j.dump(2) << '\n';
  err << "reconstructed " << result.render() << '\n';
  return kExitOk;
}

int cmd_coincide(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.factors != 2) throw ParseError("only --factors 2 is supported", std::to_string(o.factors));
  const int bound = o.max_rank < 0 ? 20 : o.max_rank;
  const auto pairs = enumerate_two_factor_pairs(bound);
  ordered_json list = ordered_json::array();
  for (const auto& p : pairs) list.push_back(p.render());
  ordered_json j;
  j["factors"] = 2;
  j["max_rank"] = bound;
  j["count"] = pairs.size();
  j["pairs"] = list;
  out << j.dump(2) << '\n';
  err << pairs.size() << " two-factor coincidence pairs of rank <= " << bound << '\n';
  return kExitOk;
}

ordered_json word_json(const GeneratorWord& w) {
  ordered_json a = ordered_json::array();
  for (const auto& l : w) a.push_back({{"generator", l.id.render()}, {"sign", l.sign}});
  return a;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const CoincidencePair p = parse_pair(o.pair);
  const GeneratorWord w = decompose(p);
  ordered_json j;
  j["pair"] = p.render();
  j["word"] = word_json(w);
  j["evaluates_to"] = evaluate(w).render();
  out << j.dump(2) << '\n';
  err << p.render() << " = " << (w.empty() ? "identity" : render(w)) << '\n';
  return kExitOk;
}

int cmd_recognize(const Options& o, std::ostream& out, std::ostream& err) {
  const BigInt m = parse_big(o.order, "--order");
  const int bound = o.max_rank < 0 ? 4 : o.max_rank;
  const auto hits = recognize_order(m, bound);
  ordered_json list = ordered_json::array();
  for (const auto& [t, q] : hits) list.push_back({{"type", t.render()}, {"q", q.str()}});
  ordered_json j;
  j["order"] = m.str();
  j["max_rank"] = bound;
  j["matches"] = list;
  out << j.dump(2) << '\n';
  err << hits.size() << " (type, q) pairs of rank <= " << bound << " with order " << m << '\n';
  return kExitOk;
}

ordered_json pairs_json(const std::vector<std::pair<SemisimpleType, SemisimpleType>>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& [x, y] : v) a.push_back({x.render(), y.render()});
  return a;
}

bool suite_determination(int bound, ordered_json& j, std::ostream& err) {
  const DeterminationReport r = verify_determination(bound < 0 ? 8 : bound, "ABDGFE", true);
  j["rank_bound"] = r.rank_bound;
  j["alphabet"] = "A,B,D,G2,F4,E6,E7";
  j["types_checked"] = r.types_checked;
  j["family_collisions"] = pairs_json(r.family_collisions);
  ordered_json failures = ordered_json::array();
  for (const auto& [t, why] : r.round_trip_failures) failures.push_back({t.render(), why});
  j["round_trip_failures"] = failures;
  j["profile_collisions"] = pairs_json(r.profile_collisions);
  j["ambiguous_covers_resolved"] = r.ambiguous_covers_resolved;
  err << r.types_checked << " types, " << r.family_collisions.size() << " family collisions, "
      << r.round_trip_failures.size() << " round-trip failures, " << r.profile_collisions.size()
      << " invariant-profile collisions\n";
  return r.families_ok();
}

bool suite_prop_counter(int bound, ordered_json& j, std::ostream& err) {
  const int rank_bound = bound < 0 ? 6 : bound;
  const BigInt q_bound = 16;
  ordered_json mismatches = ordered_json::array();
  int exceptions = 0;
  int checked = 0;
  for (const auto& s : simple_types_up_to(rank_bound)) {
    for (const auto& q : prime_powers_up_to(q_bound)) {
      const auto w = p_contribution_is_largest(SemisimpleType{s}, q);
      const bool listed = in_exception_list(s, q);
      exceptions += listed ? 1 : 0;
      ++checked;
      if (w.p_is_largest == listed) {
        mismatches.push_back({{"type", s.render()}, {"q", q.str()}, {"p_part", w.p_part.str()},
                              {"largest_other", w.other_part.str()}});
      }
    }
  }
  const auto collisions = cross_characteristic_collisions(3, 32);
  ordered_json coll = ordered_json::array();
  for (const auto& c : collisions) {
    coll.push_back({{"left", c.t1.render()}, {"q1", c.q1.str()}, {"right", c.t2.render()}, {"q2", c.q2.str()},
                    {"order", c.order.str()}});
  }
  const auto b23 = p_contribution_is_largest(parse_type("B2"), 3);
  j["rank_bound"] = rank_bound;
  j["q_bound"] = q_bound.str();
  j["cases"] = checked;
  j["exception_cases"] = exceptions;
  j["mismatches"] = mismatches;
  j["B2_F3"] = {{"order", order_value(parse_type("B2"), 3).str()}, {"p_part", b23.p_part.str()},
                {"largest_other", b23.other_part.str()}};
  j["cross_characteristic_collisions_rank3_q32"] = coll;
  err << checked << " (type, q) cases, " << exceptions << " on the exception list, " << mismatches.size()
      << " mismatches; " << collisions.size() << " cross-characteristic collisions at rank <= 3, q <= 32\n";
  return mismatches.empty();
}

bool suite_pairs(int bound, ordered_json& j, std::ostream& err) {
  const int rank_bound = bound < 0 ? 20 : bound;
  const auto found = enumerate_two_factor_pairs(rank_bound);
  const auto expected = classified_two_factor_pairs(rank_bound);
  ordered_json list = ordered_json::array();
  ordered_json failures = ordered_json::array();
  for (const auto& p : found) {
    try {
      const GeneratorWord w = decompose(p);
      list.push_back({{"pair", p.render()}, {"word", render(w)}});
    } catch (const Error& e) {
      failures.push_back({p.render(), e.what()});
    }
  }
  ordered_json extra = ordered_json::array();
  ordered_json missing = ordered_json::array();
  for (const auto& p : found) {
    if (!std::binary_search(expected.begin(), expected.end(), p)) extra.push_back(p.render());
  }
  for (const auto& p : expected) {
    if (!std::binary_search(found.begin(), found.end(), p)) missing.push_back(p.render());
  }
  j["rank_bound"] = rank_bound;
  j["count"] = found.size();
  j["pairs"] = list;
  j["unexpected"] = extra;
  j["missing"] = missing;
  j["decompose_failures"] = failures;
  err << found.size() << " pairs found, " << extra.size() << " unexpected, " << missing.size() << " missing, "
      << failures.size() << " decomposition failures\n";
  return extra.empty() && missing.empty() && failures.empty();
}

bool suite_group_axioms(int bound, int samples, ordered_json& j, std::ostream& err) {
  const int rank_bound = bound < 0 ? 20 : bound;
  const int n = samples > 0 ? samples : 100;
  const GroupAxiomsReport r = verify_group_axioms(n, rank_bound);
  j["rank_bound"] = rank_bound;
  j["samples"] = r.samples;
  j["violations"] = r.violations;
  err << r.samples << " samples, " << r.violations.size() << " violations\n";
  return r.ok();
}

bool suite_compalg(int samples, ordered_json& j, std::ostream& err) {
  const CompalgReport r = verify_compalg(samples > 0 ? samples : 1000);
  j["samples"] = r.samples;
  ordered_json f = ordered_json::object();
  int total = 0;
  for (const auto& [name, count] : r.failures) {
    f[name] = count;
    total += count;
  }
  j["failures"] = f;
  j["e0_dimension"] = r.e0_dimension;
  j["q_of_u"] = r.q_of_u;
  err << r.failures.size() << " checks, " << total << " failing samples, dim E0 = " << r.e0_dimension
      << ", Q(u) = " << r.q_of_u << '\n';
  return r.ok();
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  ordered_json j;
  j["suite"] = o.suite;
  bool passed = false;
  if (o.suite == "determination") {
    passed = suite_determination(o.max_rank, j, err);
  } else if (o.suite == "prop-counter") {
    passed = suite_prop_counter(o.max_rank, j, err);
  } else if (o.suite == "pairs") {
    passed = suite_pairs(o.max_rank, j, err);
  } else if (o.suite == "group-axioms") {
    passed = suite_group_axioms(o.max_rank, o.samples, j, err);
  } else if (o.suite == "compalg") {
    passed = suite_compalg(o.samples, j, err);
  } else {
    throw ParseError("unknown suite", o.suite);
  }
  j["passed"] = passed;
  out << j.dump(2) << '\n';
  err << "suite " << o.suite << ": " << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl-group characteristic polynomials, finite group orders and order coincidences"};
  app.name("lieord");
  app.require_subcommand(1);
  Options o;

  auto* order = app.add_subcommand("order", "order of the group of F_q-points");
  order->add_option("--type", o.type, "semisimple type, e.g. A2xB3")->required();
  order->add_option("--q", o.q, "prime power")->required();
  order->add_flag("--factored", o.factored, "include the symbolic form");

  auto* chp = app.add_subcommand("charpolys", "characteristic polynomials of the Weyl group");
  chp->add_option("--type", o.type)->required();
  chp->add_option("--cache", o.cache_dir, "directory of cached exceptional tables");

  auto* inv = app.add_subcommand("invariants", "mu, mu' and joint invariants");
  inv->add_option("--type", o.type)->required();
  inv->add_option("--mu", o.mu_index, "single index i")->check(CLI::PositiveNumber);
  inv->add_option("--joint", o.joint, "two distinct indices I J")->expected(2)->check(CLI::PositiveNumber);
  inv->add_option("--cache", o.cache_dir, "directory holding E8.json");

  auto* rec = app.add_subcommand("reconstruct", "recover the type from a characteristic-polynomial family");
  rec->add_option("--input", o.input, "JSON file {\"rank\": n, \"polys\": [{\"d\": t}, ...]}")->required();
  rec->add_option("--cache", o.cache_dir, "directory holding E8.json");

  auto* co = app.add_subcommand("coincide", "enumerate order-coincidence pairs");
  co->add_option("--factors", o.factors, "simple factors per side")->required();
  co->add_option("--max-rank", o.max_rank)->required()->check(CLI::NonNegativeNumber);

  auto* dec = app.add_subcommand("decompose", "express a coincidence pair in the generators");
  dec->add_option("--pair", o.pair, "L:R")->required();

  auto* recog = app.add_subcommand("recognize", "find (type, q) with a given order");
  recog->add_option("--order", o.order)->required();
  recog->add_option("--max-rank", o.max_rank)->required()->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"determination", "prop-counter", "pairs", "group-axioms", "compalg"}));
  ver->add_option("--max-rank", o.max_rank)->check(CLI::NonNegativeNumber);
  ver->add_option("--samples", o.samples)->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"lieord"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*order) return cmd_order(o, out, err);
    if (*chp) return cmd_charpolys(o, out, err);
    if (*inv) return cmd_invariants(o, out, err);
    if (*rec) return cmd_reconstruct(o, out, err);
    if (*co) return cmd_coincide(o, out, err);
    if (*dec) return cmd_decompose(o, out, err);
    if (*recog) return cmd_recognize(o, out, err);
    if (*ver) return cmd_verify(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (token '" << e.token() << "')\n";
    return kExitUsage;
  } catch (const E8WithoutTable& e) {
    err << "error: " << e.what() << "\nhint: pass --cache DIR with a validated E8.json\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lieord::cli
