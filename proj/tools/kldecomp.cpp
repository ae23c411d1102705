// kldecomp: compute, cache, export and verify Deodhar / decomposition /
// Kazhdan-Lusztig tables for finite Weyl groups.
//
// Exit codes: 0 success, 1 failed verification, 2 bad arguments,
// 3 corrupt cache.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "kldecomp/checks.hpp"
#include "kldecomp/coxeter.hpp"
#include "kldecomp/decomp.hpp"
#include "kldecomp/deodhar.hpp"
#include "kldecomp/errors.hpp"
#include "kldecomp/hecke.hpp"
#include "kldecomp/kl_oracle.hpp"
#include "kldecomp/table_io.hpp"
#include "kldecomp/word_policy.hpp"

using namespace kldecomp;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadArgs = 2, kCacheCorrupt = 3 };

struct Common {
  std::string type;
  std::string policy = "lexmin";
  std::string word_file;
  std::string cache_dir;
  bool no_cache = false;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_policy = true) {
  cmd->add_option("type", c.type, "Cartan type, e.g. A3, B2, D4")->required();
  if (with_policy) {
    cmd->add_option("--word-policy", c.policy, "Reduced word choice: lexmin, lexmax or file")
        ->check(CLI::IsMember({"lexmin", "lexmax", "file"}));
    cmd->add_option("--word-file", c.word_file, "Reduced words overriding lexmin, one per line (with --word-policy file)");
  }
  cmd->add_option("--cache-dir", c.cache_dir, "Table cache directory (default $KLDECOMP_CACHE or user data dir)");
  cmd->add_flag("--no-cache", c.no_cache, "Neither read nor write the table cache");
  cmd->add_option("--threads", c.threads, "Worker threads for table fill (0 = all cores)");
}

WordPolicy make_policy(const WeylGroup& group, const Common& c) {
  if (c.policy == "lexmax") return WordPolicy::lex_max();
  if (c.policy == "file") {
    if (c.word_file.empty()) throw Error("--word-policy file requires --word-file");
    return WordPolicy::from_file(group, c.word_file);
  }
  if (!c.word_file.empty()) throw Error("--word-file requires --word-policy file");
  return WordPolicy::lex_min();
}

std::optional<TableCache> make_cache(const Common& c) {
  if (c.no_cache) return std::nullopt;
  return TableCache(c.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(c.cache_dir));
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  Common common;
  std::vector<std::string> kinds;
  std::string format = "json";
  std::string out;
};

int run_table(const TableArgs& a) {
  const WeylGroup group(build_system(a.common.type));
  const WordPolicy policy = make_policy(group, a.common);
  std::vector<TableKind> kinds;
  for (const auto& k : a.kinds) {
    auto kind = parse_kind(k);
    if (!kind) throw Error("unknown table kind '" + k + "' (expected Q, Ftilde, Dtilde, Htilde, S or P)");
    kinds.push_back(*kind);
  }
  if (kinds.empty()) kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
  const auto cache = make_cache(a.common);
  const DecompTables tables = load_or_compute(group, policy, cache ? &*cache : nullptr, {a.common.threads});
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot write " + a.out);
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  if (a.format == "csv")
    write_table_csv(out, group, tables, kinds);
  else
    write_table_json(out, group, tables, kinds);
  if (!out.flush()) throw Error("failed writing " + (a.out.empty() ? std::string("stdout") : a.out));
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::vector<std::string> checks{"all"};
};

int run_verify(const VerifyArgs& a) {
  const WeylGroup group(build_system(a.common.type));
  const WordPolicy policy = make_policy(group, a.common);
  std::set<std::string> selected(a.checks.begin(), a.checks.end());
  auto wants = [&](const char* name) { return selected.count("all") || selected.count(name); };

  const auto cache = make_cache(a.common);
  const DecompTables tables = load_or_compute(group, policy, cache ? &*cache : nullptr, {a.common.threads});

  std::vector<CheckResult> results;
  if (wants("mass")) {
    results.push_back(check_mass(group, tables));
    results.push_back(check_engines(group, policy, 10));
  }
  if (wants("oracle")) results.push_back(check_oracle(group, tables, classical_kl_table(group)));
  if (wants("recon")) {
    results.push_back(check_reconstruction(group, tables));
    results.push_back(check_matrix_identity(group, tables));
    results.push_back(check_symmetry(group, tables));
  }
  if (wants("hecke")) {
    results.push_back(check_hecke_relations(group, tables));
    results.push_back(check_basis_theorem(group, tables));
  }
  if (wants("wordindep")) {
    const WordPolicy other = policy.name() == "lexmax" ? WordPolicy::lex_min() : WordPolicy::lex_max();
    const DecompTables alt = load_or_compute(group, other, cache ? &*cache : nullptr, {a.common.threads});
    results.push_back(check_word_independence(group, tables, alt));
  }

  bool all_passed = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << '\n';
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kOk : kCheckFailed;
}

// --- basis -----------------------------------------------------------------

struct BasisArgs {
  Common common;
  std::string element;
  std::string basis = "B";
  std::string express_in = "T";
};

int run_basis(const BasisArgs& a) {
  const WeylGroup group(build_system(a.common.type));
  const WordPolicy policy = make_policy(group, a.common);
  const ElementId w = group.evaluate_reduced(parse_word(a.element));
  const auto cache = make_cache(a.common);
  const DecompTables tables = load_or_compute(group, policy, cache ? &*cache : nullptr, {a.common.threads});
  const HeckeAlgebra hecke(group);
  const HeckeElement h = a.basis == "B" ? hecke.b_basis_element(w, tables.q) : hecke.c_basis_element(w, tables.p);
  if (a.express_in == "T")
    std::cout << hecke.format(h, 'T') << '\n';
  else
    std::cout << hecke.format(hecke.express_in_c_basis(h, tables.p), 'C') << '\n';
  return kOk;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  Common common;
  int min_length = 0;
  int max_length = -1;
  std::vector<std::string> engines{"brute", "dp"};
  std::string out;
};

int run_bench(const BenchArgs& a) {
  const WeylGroup group(build_system(a.common.type));
  const WordPolicy policy = make_policy(group, a.common);
  const int max_length = a.max_length < 0 ? group.max_length() : std::min(a.max_length, group.max_length());
  const bool brute = std::find(a.engines.begin(), a.engines.end(), "brute") != a.engines.end();
  const bool dp = std::find(a.engines.begin(), a.engines.end(), "dp") != a.engines.end();

  std::ostringstream out;
  out << "length,engine,rows,states,state_bound,seconds,status\n";
  const auto levels = group.elements_by_length();
  for (int len = std::max(a.min_length, 0); len <= max_length; ++len) {
    const auto& level = levels[static_cast<std::size_t>(len)];
    std::uint64_t bound = 0;
    for (ElementId w : level) bound += group.lower_interval(w).size() * static_cast<std::uint64_t>(std::max(len, 1));
    std::vector<QRow> dp_rows;
    if (dp) {
      const auto start = std::chrono::steady_clock::now();
      std::uint64_t states = 0;
      for (ElementId w : level) {
        dp_rows.push_back(q_row_dp(group, policy.word_for(group, w)));
        states += dp_rows.back().states;
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out << len << ",dp," << level.size() << ',' << states << ',' << bound << ',' << secs << ','
          << (states <= bound ? "ok" : "state-bound-exceeded") << '\n';
    }
    if (brute) {
      if (static_cast<std::size_t>(len) > kBruteForceCap) {
        out << len << ",brute," << level.size() << ",0,0,0,refused(cap=" << kBruteForceCap << ")\n";
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      std::uint64_t states = 0;
      bool match = true;
      for (std::size_t k = 0; k < level.size(); ++k) {
        const QRow row = q_row_bruteforce(group, policy.word_for(group, level[k]));
        states += row.states;
        if (dp && row.entries != dp_rows[k].entries) match = false;
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out << len << ",brute," << level.size() << ',' << states << ",0," << secs << ',' << (match ? "ok" : "mismatch")
          << '\n';
    }
  }
  write_output(out.str(), a.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deodhar polynomials, decomposition multiplicities and Kazhdan-Lusztig polynomials of Weyl groups",
               "kldecomp"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Write polynomial tables");
  add_common(table_cmd, table.common);
  table_cmd->add_option("--kind", table.kinds, "Table kind(s): Q, Ftilde, Dtilde, Htilde, S, P (default all)")
      ->delimiter(',');
  table_cmd->add_option("--format", table.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--out", table.out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run property checks");
  add_common(verify_cmd, verify.common);
  verify_cmd->add_option("--checks", verify.checks, "all, mass, oracle, hecke, recon, wordindep")
      ->delimiter(',')
      ->check(CLI::IsMember({"all", "mass", "oracle", "hecke", "recon", "wordindep"}));

  BasisArgs basis;
  auto* basis_cmd = app.add_subcommand("basis", "Expand a Hecke algebra basis element");
  add_common(basis_cmd, basis.common);
  basis_cmd->add_option("--element", basis.element, "Reduced word, comma separated, 1-based; \"\" for identity")
      ->required();
  basis_cmd->add_option("--basis", basis.basis, "B (Deodhar) or C (Kazhdan-Lusztig)")->check(CLI::IsMember({"B", "C"}));
  basis_cmd->add_option("--express-in", basis.express_in, "Target basis")->check(CLI::IsMember({"C", "T"}));

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time Q-row engines per length (CSV)");
  add_common(bench_cmd, bench.common);
  bench_cmd->add_option("--min-length", bench.min_length, "Smallest element length to include");
  bench_cmd->add_option("--max-length", bench.max_length, "Largest element length to include");
  bench_cmd->add_option("--engines", bench.engines, "brute, dp")->delimiter(',')->check(CLI::IsMember({"brute", "dp"}));
  bench_cmd->add_option("--out", bench.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  try {
    if (*table_cmd) return run_table(table);
    if (*verify_cmd) return run_verify(verify);
    if (*basis_cmd) return run_basis(basis);
    if (*bench_cmd) return run_bench(bench);
  } catch (const CacheCorruption& e) {
    std::cerr << "error: " << e.what() << " (" << e.path() << ")\n";
    return kCacheCorrupt;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  }
  return kBadArgs;
}
