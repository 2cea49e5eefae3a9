#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lieord/cache.hpp"
#include "lieord/cli.hpp"
#include "lieord/errors.hpp"

using namespace lieord;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

class TempDir {
 public:
  explicit TempDir(const std::string& tag)
      : path_(fs::temp_directory_path() / ("lieord-test-" + tag + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, Order) {
  const auto r = invoke({"order", "--type", "A1", "--q", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["order"], "720");
  const auto g = invoke({"order", "--type", "G2", "--q", "2", "--factored"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(parse(g)["degrees"], nlohmann::json::array({2, 6}));
  EXPECT_EQ(parse(g)["order"], "12096");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({"order", "--type", "D3", "--q", "2"}).code, 2);
  EXPECT_EQ(invoke({"order", "--type", "A1", "--q", "6"}).code, 2);
  EXPECT_EQ(invoke({"order", "--type", "A1"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"charpolys", "--type", "E8"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--suite", "nonsense"}).code, 2);
  EXPECT_EQ(invoke({"decompose", "--pair", "A2:B2"}).code, 2);
}

TEST(Cli, Charpolys) {
  const auto r = invoke({"charpolys", "--type", "B2"});
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["group_order"], "8");
  EXPECT_EQ(j["distinct"], 4);
}

TEST(Cli, Invariants) {
  const auto r = invoke({"invariants", "--type", "E8", "--joint", "28", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["mu_joint"], 1);
  EXPECT_EQ(invoke({"invariants", "--type", "E8", "--joint", "24", "30"}).code, 2);
  const auto m = invoke({"invariants", "--type", "E7", "--mu", "6"});
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(parse(m)["mu"], 3);
}

TEST(Cli, CoincideDecomposeRecognize) {
  const auto c = invoke({"coincide", "--factors", "2", "--max-rank", "7"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_GT(parse(c)["count"].get<int>(), 0);
  const auto d = invoke({"decompose", "--pair", "B3xB3:D4xG2"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(parse(d)["evaluates_to"], "B3xB3:D4xG2");
  const auto g = invoke({"recognize", "--order", "720", "--max-rank", "2"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(parse(g)["matches"].size(), 2u);
}

TEST(Cli, VerifySuites) {
  const auto pairs = invoke({"verify", "--suite", "pairs", "--max-rank", "20"});
  EXPECT_EQ(pairs.code, 0) << pairs.err;
  EXPECT_TRUE(parse(pairs)["passed"].get<bool>());
  EXPECT_EQ(invoke({"verify", "--suite", "group-axioms", "--samples", "20", "--max-rank", "14"}).code, 0);
  EXPECT_EQ(invoke({"verify", "--suite", "compalg", "--samples", "20"}).code, 0);
  EXPECT_EQ(invoke({"verify", "--suite", "prop-counter", "--max-rank", "3"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"coincide", "--factors", "2", "--max-rank", "10"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, ReconstructFromFile) {
  TempDir dir("reconstruct");
  const auto path = dir.path() / "family.json";
  {
    // Family of A1xB2 written out by hand: products of {P1, P2} and {P1^2, P1P2, P2^2, P4}.
    std::ofstream f(path);
    f << R"({"rank": 3, "polys": [{"1": 3}, {"1": 2, "2": 1}, {"1": 1, "2": 2}, {"2": 3},)"
      << R"( {"1": 1, "4": 1}, {"2": 1, "4": 1}]})";
  }
  const auto r = invoke({"reconstruct", "--input", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["type"], "A1xB2");
  {
    std::ofstream f(path);
    f << R"({"rank": 2, "polys": [{"1": 2}, {"5": 1}]})";
  }
  EXPECT_EQ(invoke({"reconstruct", "--input", path.string()}).code, 2);
  EXPECT_EQ(invoke({"reconstruct", "--input", (dir.path() / "missing.json").string()}).code, 2);
}

TEST(Cache, RoundTripAndTamper) {
  TempDir dir("cache");
  const auto f4 = charpolys(parse_type("F4"));
  cache_store(f4, dir.path());
  const auto back = cache_load(parse_type("F4"), dir.path());
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, f4);
  EXPECT_EQ(table_from_json(table_to_json(f4)), f4);

  auto doc = nlohmann::json::parse(table_to_json(f4));
  doc["entries"][0]["count"] = (BigInt(doc["entries"][0]["count"].get<std::string>()) + 1).str();
  {
    std::ofstream f(cache_path(parse_type("F4"), dir.path()));
    f << doc.dump();
  }
  EXPECT_THROW(cache_load(parse_type("F4"), dir.path()), CacheInvalid);
  EXPECT_EQ(invoke({"charpolys", "--type", "F4", "--cache", dir.path().string()}).code, 2);

  auto wrong_version = nlohmann::json::parse(table_to_json(f4));
  wrong_version["version"] = 99;
  EXPECT_THROW(table_from_json(wrong_version.dump()), CacheInvalid);
  EXPECT_THROW(table_from_json("{not json"), CacheInvalid);
}

TEST(Cache, MissingE8) {
  TempDir dir("e8");
  EXPECT_FALSE(load_e8_table(dir.path()).has_value());
  EXPECT_FALSE(cache_load(parse_type("E8"), dir.path()).has_value());
  EXPECT_THROW(cached_simple_table(SimpleType::make('E', 8), dir.path()), E8WithoutTable);
}

TEST(Cache, CachedTablesAreStored) {
  TempDir dir("store");
  const auto g2 = cached_simple_table(SimpleType::make('G', 2), dir.path());
  EXPECT_TRUE(fs::exists(cache_path(parse_type("G2"), dir.path())));
  EXPECT_EQ(cached_simple_table(SimpleType::make('G', 2), dir.path()), g2);
}
