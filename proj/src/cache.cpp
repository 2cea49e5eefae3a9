#include "lieord/cache.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>
#include <unistd.h>

#include "lieord/errors.hpp"

namespace lieord {

using nlohmann::json;

std::filesystem::path cache_path(const SemisimpleType& type_label, const std::filesystem::path& dir) {
  return dir / (type_label.render() + ".json");
}

std::string table_to_json(const CharPolyTable& table) {
  json entries = json::array();
  for (const auto& [poly, count] : table.entries) {
    json exps = json::object();
    for (const auto& [d, t] : poly.exponents()) exps[std::to_string(d)] = t;
    entries.push_back({{"exps", exps}, {"count", count.str()}});
  }
  json doc = {{"version", kCacheVersion},
              {"type_label", table.type.render()},
              {"group_order", table.group_order.str()},
              {"entries", entries}};
  return doc.dump(1);
}

namespace {

BigInt parse_decimal(const json& value, const std::string& what) {
  if (!value.is_string()) throw CacheInvalid(what + " must be a decimal string");
  const std::string s = value.get<std::string>();
  if (s.empty() || s.size() > 4000 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw CacheInvalid(what + " is not a nonnegative decimal integer");
  }
  return BigInt(s);
}

}  // namespace

CharPolyTable table_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CacheInvalid(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw CacheInvalid("top level must be an object");
    if (!doc.contains("version") || doc["version"] != kCacheVersion) {
      throw CacheInvalid("version certificate failed: expected version " + std::to_string(kCacheVersion));
    }
    CharPolyTable table;
    try {
      table.type = parse_type(doc.at("type_label").get<std::string>());
    } catch (const ParseError& e) {
      throw CacheInvalid(std::string("bad type_label: ") + e.what());
    }
    table.group_order = parse_decimal(doc.at("group_order"), "group_order");
    for (const auto& entry : doc.at("entries")) {
      CycloProduct poly;
      for (const auto& [key, value] : entry.at("exps").items()) {
        int d = 0;
        try {
          std::size_t used = 0;
          d = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw CacheInvalid("cyclotomic index '" + key + "' is not an integer");
        }
        const int t = value.get<int>();
        if (d < 1 || t < 1) throw CacheInvalid("indices and exponents must be positive");
        poly.add(d, t);
      }
      if (table.entries.contains(poly)) throw CacheInvalid("duplicate entry " + poly.to_string());
      table.entries[poly] = parse_decimal(entry.at("count"), "count");
    }
    table.validate();
    return table;
  } catch (const json::exception& e) {
    throw CacheInvalid(std::string("schema error: ") + e.what());
  }
}

void cache_store(const CharPolyTable& table, const std::filesystem::path& dir) {
  table.validate();
  std::filesystem::create_directories(dir);
  const auto target = cache_path(table.type, dir);
  static std::atomic<unsigned> counter{0};
  const auto tmp = dir / ("." + target.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
                          std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << table_to_json(table) << '\n';
    out.flush();
    if (!out) throw Error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

std::optional<CharPolyTable> cache_load(const SemisimpleType& type_label, const std::filesystem::path& dir) {
  const auto path = cache_path(type_label, dir);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheInvalid("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  CharPolyTable table = table_from_json(buffer.str());
  if (table.type != type_label) {
    throw CacheInvalid("label certificate failed: " + path.string() + " holds " + table.type.render());
  }
  return table;
}

CharPolyTable cached_simple_table(const SimpleType& t, const std::filesystem::path& dir) {
  const SemisimpleType label{t};
  if (!t.is_exceptional()) return simple_charpolys(t);
  if (auto hit = cache_load(label, dir)) return *hit;
  if (t.letter() == 'E' && t.rank() == 8) {
    throw E8WithoutTable("no E8 table at " + cache_path(label, dir).string() +
                         "; W(E8) is not enumerated, place a validated E8.json there");
  }
  CharPolyTable table = simple_charpolys(t);
  cache_store(table, dir);
  return table;
}

std::optional<CharPolyTable> load_e8_table(const std::filesystem::path& dir) {
  return cache_load(SemisimpleType{SimpleType::make('E', 8)}, dir);
}

}  // namespace lieord
