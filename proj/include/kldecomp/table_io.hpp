#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kldecomp/coxeter.hpp"
#include "kldecomp/decomp.hpp"
#include "kldecomp/laurent.hpp"
#include "kldecomp/table.hpp"
#include "kldecomp/word_policy.hpp"

namespace kldecomp {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// One polynomial of one table. Elements are named by lex-min words.
struct TableEntry {
  ReducedWord w;
  ReducedWord v;
  TableKind kind = TableKind::Q;
  Variable var = Variable::q;
  LaurentPolynomial poly;
  bool operator==(const TableEntry&) const = default;
};

/// Interchange form of a set of tables. The JSON layout puts the header
/// first and one entry per line:
///
///   {"cartan": "A2", "policy": "lexmin", "version": "1.0.0", "kinds": ["Q"], "entries": [
///   {"w": [1,2,1], "v": [1], "kind": "Q", "var": "q", "coeffs": {"0": 1, "1": 1}},
///   ...
///   ]}
///
/// Readers accept any JSON with the same fields, provided the header keys
/// come before "entries".
struct TableFile {
  std::string cartan;
  std::string policy;
  std::string version{kToolVersion};
  std::vector<TableKind> kinds;
  std::vector<TableEntry> entries;
  bool operator==(const TableFile&) const = default;
};

TableFile make_table_file(const WeylGroup& group, const DecompTables& tables, std::span<const TableKind> kinds);

/// Throws Error on malformed input.
TableFile parse_table_json(std::string_view text);
std::string render_table_json(const TableFile& file);

/// Export only: "w,v,kind,var,polynomial", one line per entry, words quoted.
/// Polynomials are shown in q whenever every t-exponent is even.
std::string render_table_csv(const TableFile& file);

/// Streaming forms of the above. The writers produce the same bytes as
/// render_table_*(make_table_file(...)) without materializing entries; the
/// reader hands over the header (with no entries) before the first entry.
void write_table_json(std::ostream& out, const WeylGroup& group, const DecompTables& tables,
                      std::span<const TableKind> kinds);
void write_table_csv(std::ostream& out, const WeylGroup& group, const DecompTables& tables,
                     std::span<const TableKind> kinds);
void read_table_json(std::istream& in, const std::function<void(const TableFile&)>& on_header,
                     const std::function<void(TableEntry&&)>& on_entry);

/// The cache keeps only these; Q, S and P follow by t -> sqrt(q).
inline constexpr TableKind kStoredKinds[] = {TableKind::Ftilde, TableKind::Dtilde, TableKind::Htilde};

/// Rebuilds full tables from a file holding at least kStoredKinds. Validates
/// the group name, every word, and v <= w, and that any Q, S or P entries
/// match the tilde tables; throws Error on any mismatch.
DecompTables tables_from_file(const WeylGroup& group, const WordPolicy& policy, const TableFile& file);

/// $KLDECOMP_CACHE, else $XDG_DATA_HOME/kldecomp, else ~/.local/share/kldecomp.
std::filesystem::path default_cache_dir();

/// On-disk cache of complete tables keyed by (Cartan type, word policy).
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(std::string_view cartan, std::string_view policy) const;

  /// nullopt when no file exists; CacheCorruption when one exists but is
  /// unreadable or inconsistent.
  std::optional<DecompTables> load(const WeylGroup& group, const WordPolicy& policy) const;
  /// Writes to a temporary file and renames it into place.
  void store(const WeylGroup& group, const DecompTables& tables) const;

 private:
  std::filesystem::path dir_;
};

/// Cached tables if present, otherwise computes and stores them.
DecompTables load_or_compute(const WeylGroup& group, const WordPolicy& policy, const TableCache* cache,
                             FillOptions options = {});

}  // namespace kldecomp
