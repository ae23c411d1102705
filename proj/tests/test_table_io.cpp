#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kldecomp/errors.hpp"
#include "kldecomp/table_io.hpp"
#include "oracles.hpp"

using namespace kldecomp;
using LP = LaurentPolynomial;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() / ("kldecomp_test_" + tag + "_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("JSON round trip of computed tables") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(name);
    const WeylGroup g(build_system(name));
    const DecompTables t = full_tables(g, WordPolicy::lex_min());
    const TableFile f = make_table_file(g, t, kAllKinds);
    CHECK(parse_table_json(render_table_json(f)) == f);
    const DecompTables back = tables_from_file(g, WordPolicy::lex_min(), f);
    for (TableKind k : kAllKinds) CHECK(back.table(k) == t.table(k));
    CHECK(back.words == t.words);
  }
}

TEST_CASE("JSON round trip of arbitrary entries") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    TableFile f;
    f.cartan = "B3";
    f.policy = trial % 2 ? "lexmin" : "lexmax+0123456789abcdef";
    f.kinds = {TableKind::Dtilde, TableKind::P};
    for (int i = 0; i < 10; ++i) {
      TableEntry e;
      for (int n = static_cast<int>(rng() % 5); n > 0; --n) e.w.letters.push_back(static_cast<int>(rng() % 3));
      for (int n = static_cast<int>(rng() % 3); n > 0; --n) e.v.letters.push_back(static_cast<int>(rng() % 3));
      e.kind = i % 2 ? TableKind::P : TableKind::Dtilde;
      e.var = kind_variable(e.kind);
      e.poly = oracle::random_poly(rng, -6, 6, 1000);
      f.entries.push_back(e);
    }
    CHECK(parse_table_json(render_table_json(f)) == f);
  }
}

TEST_CASE("streaming writers match the in-memory renderers") {
  for (const char* name : {"A2", "B3"}) {
    const WeylGroup g(build_system(name));
    const DecompTables t = full_tables(g, WordPolicy::lex_min());
    const TableFile f = make_table_file(g, t, kAllKinds);
    std::ostringstream json, csv;
    write_table_json(json, g, t, kAllKinds);
    write_table_csv(csv, g, t, kAllKinds);
    CHECK(json.str() == render_table_json(f));
    CHECK(csv.str() == render_table_csv(f));

    std::istringstream in(json.str());
    std::size_t entries = 0;
    bool header_first = false;
    read_table_json(
        in, [&](const TableFile& h) { header_first = entries == 0 && h.cartan == name && h.entries.empty(); },
        [&](TableEntry&&) { ++entries; });
    CHECK(header_first);
    CHECK(entries == f.entries.size());
  }
}

TEST_CASE("rendered shapes") {
  const WeylGroup g(build_system("A1"));
  const DecompTables t = full_tables(g, WordPolicy::lex_min());
  const TableKind q_only[] = {TableKind::Q};
  const TableFile f = make_table_file(g, t, q_only);
  REQUIRE(f.entries.size() == 3);
  CHECK(render_table_csv(f) ==
        "w,v,kind,var,polynomial\n"
        "\"\",\"\",Q,q,\"1\"\n"
        "\"1\",\"\",Q,q,\"1\"\n"
        "\"1\",\"1\",Q,q,\"1\"\n");
  CHECK(render_table_json(f) ==
        "{\"cartan\": \"A1\", \"policy\": \"lexmin\", \"version\": \"1.0.0\", \"kinds\": [\"Q\"], \"entries\": [\n"
        "{\"w\": [], \"v\": [], \"kind\": \"Q\", \"var\": \"q\", \"coeffs\": {\"0\": 1}},\n"
        "{\"w\": [1], \"v\": [], \"kind\": \"Q\", \"var\": \"q\", \"coeffs\": {\"0\": 1}},\n"
        "{\"w\": [1], \"v\": [1], \"kind\": \"Q\", \"var\": \"q\", \"coeffs\": {\"0\": 1}}\n"
        "]}\n");

  const WeylGroup a2(build_system("A2"));
  const DecompTables t2 = full_tables(a2, WordPolicy::lex_min());
  const TableKind d_only[] = {TableKind::Dtilde};
  const std::string csv = render_table_csv(make_table_file(a2, t2, d_only));
  CHECK(csv.find("\"1,2,1\",\"1\",Dtilde,q,\"q\"") != std::string::npos);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_table_json("{"), Error);
  CHECK_THROWS_AS(parse_table_json("{}"), Error);
  CHECK_THROWS_AS(parse_table_json(R"({"cartan":"A1","policy":"lexmin","version":"1","entries":[{"w":[0],"v":[],"kind":"Q","var":"q","coeffs":{}}]})"), Error);
  CHECK_THROWS_AS(parse_table_json(R"({"cartan":"A1","policy":"lexmin","version":"1","entries":[{"w":[],"v":[],"kind":"X","var":"q","coeffs":{}}]})"), Error);
  CHECK_THROWS_AS(parse_table_json(R"({"cartan":"A1","policy":"lexmin","version":"1","entries":[{"w":[],"v":[],"kind":"Q","var":"z","coeffs":{}}]})"), Error);
  CHECK_THROWS_AS(parse_table_json(R"({"cartan":"A1","policy":"lexmin","version":"1","entries":[{"w":[],"v":[],"kind":"Q","var":"q","coeffs":{"1x":1}}]})"), Error);
  CHECK_THROWS_AS(parse_table_json(R"({"cartan":"A1","policy":"lexmin","version":"1","entries":[{"w":[],"v":[],"kind":"Q","var":"q"}]})"), Error);
  CHECK_THROWS_AS(parse_table_json(R"({"cartan":"A1","policy":"lexmin","version":"1","entries":[{"w":[],"v":[],"kind":"Q","var":"q","coeffs":{"0":1.5}}]})"), Error);
  CHECK_THROWS_AS(parse_table_json(R"({"entries":[],"cartan":"A1","policy":"lexmin","version":"1"})"), Error);
  CHECK_THROWS_AS(parse_table_json(R"({"cartan":"A1","policy":"lexmin","version":"1"})"), Error);
  CHECK_THROWS_AS(parse_table_json(R"({"cartan":"A1","policy":"lexmin","version":"1","extra":1,"entries":[]})"), Error);
  CHECK_THROWS_AS(parse_table_json(R"([1,2])"), Error);

  const TableFile empty = parse_table_json(R"({"cartan":"A1","policy":"lexmin","version":"1","kinds":[],"entries":[]})");
  CHECK(empty.cartan == "A1");
  CHECK(empty.entries.empty());
  const TableFile compact = parse_table_json(
      R"({"cartan":"A1","policy":"lexmin","version":"1","kinds":["Q"],"entries":[{"coeffs":{"-2":3,"0":-1},"var":"q","kind":"Q","v":[],"w":[1]}]})");
  REQUIRE(compact.entries.size() == 1);
  CHECK(compact.entries[0].poly == LP{{-2, 3}, {0, -1}});

  const WeylGroup g(build_system("A2"));
  const DecompTables t = full_tables(g, WordPolicy::lex_min());
  TableFile f = make_table_file(g, t, kAllKinds);
  CHECK_THROWS_AS(tables_from_file(g, WordPolicy::lex_max(), f), Error);
  TableFile wrong_pair = f;
  wrong_pair.entries.front().w = parse_word("");
  wrong_pair.entries.front().v = parse_word("1");
  CHECK_THROWS_AS(tables_from_file(g, WordPolicy::lex_min(), wrong_pair), Error);
  TableFile missing = f;
  std::erase(missing.kinds, TableKind::Htilde);
  CHECK_THROWS_AS(tables_from_file(g, WordPolicy::lex_min(), missing), Error);
  TableFile tampered = f;
  for (auto& e : tampered.entries)
    if (e.kind == TableKind::P && e.poly == LP(1) && !e.v.empty()) {
      e.poly = LP{{0, 1}, {1, 1}};
      break;
    }
  CHECK_THROWS_AS(tables_from_file(g, WordPolicy::lex_min(), tampered), Error);
  const DecompTables derived = tables_from_file(g, WordPolicy::lex_min(), make_table_file(g, t, kStoredKinds));
  CHECK(derived.q == t.q);
  CHECK(derived.s == t.s);
  CHECK(derived.p == t.p);
  CHECK_THROWS_AS(tables_from_file(WeylGroup(build_system("B2")), WordPolicy::lex_min(), f), Error);
}

TEST_CASE("cache: cold and warm runs give identical bytes") {
  TempDir dir("cache");
  const TableCache cache(dir.path);
  const WeylGroup g(build_system("B2"));
  const auto path = cache.path_for("B2", "lexmin");
  CHECK(path.filename() == "B2__lexmin.json");
  CHECK_FALSE(cache.load(g, WordPolicy::lex_min()).has_value());

  const DecompTables cold = load_or_compute(g, WordPolicy::lex_min(), &cache);
  REQUIRE(std::filesystem::exists(path));
  const std::string first = slurp(path);
  const DecompTables warm = load_or_compute(g, WordPolicy::lex_min(), &cache);
  for (TableKind k : kAllKinds) CHECK(cold.table(k) == warm.table(k));
  cache.store(g, warm);
  CHECK(slurp(path) == first);
  CHECK(render_table_json(make_table_file(g, warm, kStoredKinds)) == first);
}

TEST_CASE("cache: corruption names the file") {
  TempDir dir("corrupt");
  const TableCache cache(dir.path);
  const WeylGroup g(build_system("A2"));
  load_or_compute(g, WordPolicy::lex_min(), &cache);
  const auto path = cache.path_for("A2", "lexmin");
  std::string renamed = slurp(path);
  renamed.replace(renamed.find("\"A2\""), 4, "\"B2\"");
  for (const std::string& junk : {std::string("not json"), std::string("{\"cartan\": \"A2\"}"), renamed}) {
    {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      out << junk;
    }
    try {
      cache.load(g, WordPolicy::lex_min());
      FAIL("expected CacheCorruption");
    } catch (const CacheCorruption& e) {
      CHECK(e.path() == path.string());
    }
  }
}

TEST_CASE("default cache directory honours the environment") {
  ::setenv("KLDECOMP_CACHE", "/tmp/some/where", 1);
  CHECK(default_cache_dir() == std::filesystem::path("/tmp/some/where"));
  ::unsetenv("KLDECOMP_CACHE");
  ::setenv("XDG_DATA_HOME", "/tmp/xdg", 1);
  CHECK(default_cache_dir() == std::filesystem::path("/tmp/xdg/kldecomp"));
  ::unsetenv("XDG_DATA_HOME");
}
