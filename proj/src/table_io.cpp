#include "kldecomp/table_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "kldecomp/errors.hpp"

namespace kldecomp {

namespace {

using json = nlohmann::json;

std::string word_json(const ReducedWord& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i] + 1);
  return out + "]";
}

void write_header_json(std::ostream& out, std::string_view cartan, std::string_view policy, std::string_view version,
                       std::span<const TableKind> kinds) {
  out << "{\"cartan\": " << json(cartan).dump() << ", \"policy\": " << json(policy).dump()
      << ", \"version\": " << json(version).dump() << ", \"kinds\": [";
  for (std::size_t i = 0; i < kinds.size(); ++i) out << (i ? ", " : "") << '"' << kind_name(kinds[i]) << '"';
  out << "], \"entries\": [";
}

void write_entry_json(std::ostream& out, bool first, std::string_view w, std::string_view v, TableKind kind,
                      Variable var, const LaurentPolynomial& poly) {
  out << (first ? "\n" : ",\n") << "{\"w\": " << w << ", \"v\": " << v;
  out << ", \"kind\": \"" << kind_name(kind) << "\", \"var\": \"" << variable_name(var) << "\", \"coeffs\": {";
  bool first_term = true;
  for (const auto& t : poly.terms()) {
    out << (first_term ? "" : ", ") << '"' << t.exponent << "\": " << t.coefficient;
    first_term = false;
  }
  out << "}}";
}

void write_footer_json(std::ostream& out) { out << "\n]}\n"; }

void write_entry_csv(std::ostream& out, const ReducedWord& w, const ReducedWord& v, TableKind kind, Variable var,
                     const LaurentPolynomial& poly) {
  Variable shown_var = var;
  const LaurentPolynomial* shown = &poly;
  LaurentPolynomial halved;
  if (var == Variable::t && !poly.has_odd_exponents()) {
    halved = evaluate_at_sqrt_q(poly);
    shown = &halved;
    shown_var = Variable::q;
  }
  out << '"' << format_word(w) << "\",\"" << format_word(v) << "\"," << kind_name(kind) << ','
      << variable_name(shown_var) << ",\"" << shown->to_string(shown_var) << "\"\n";
}

constexpr std::string_view kCsvHeader = "w,v,kind,var,polynomial\n";

// SAX consumer for the table layout. Tracks the key path by nesting depth:
// 1 = top-level object, 2 = "kinds"/"entries" arrays, 3 = one entry,
// 4 = an entry's word arrays or coefficient object.
class TableSax {
 public:
  TableSax(const std::function<void(const TableFile&)>& on_header, const std::function<void(TableEntry&&)>& on_entry)
      : on_header_(on_header), on_entry_(on_entry) {}

  bool null() { bad("unexpected null"); }
  bool boolean(bool) { bad("unexpected boolean"); }
  bool number_float(json::number_float_t, const std::string&) { bad("unexpected floating-point number"); }
  bool binary(json::binary_t&) { bad("unexpected binary value"); }

  bool number_integer(json::number_integer_t n) { return integer(n); }
  bool number_unsigned(json::number_unsigned_t n) {
    if (n > static_cast<json::number_unsigned_t>(std::numeric_limits<std::int64_t>::max())) bad("integer out of range");
    return integer(static_cast<std::int64_t>(n));
  }

  bool string(std::string& s) {
    if (depth_ == 1) {
      if (top_key_ == "cartan") header_.cartan = s;
      else if (top_key_ == "policy") header_.policy = s;
      else if (top_key_ == "version") header_.version = s;
      else bad("unexpected string for key '" + top_key_ + "'");
      seen_.insert(top_key_);
      return true;
    }
    if (depth_ == 2 && top_key_ == "kinds") {
      header_.kinds.push_back(kind_of(s));
      return true;
    }
    if (depth_ == 3 && entry_key_ == kKind) {
      entry_.kind = kind_of(s);
      entry_seen_ |= kKind;
      return true;
    }
    if (depth_ == 3 && entry_key_ == kVar) {
      if (s != "t" && s != "q") bad("unknown variable tag '" + s + "'");
      entry_.var = s == "t" ? Variable::t : Variable::q;
      entry_seen_ |= kVar;
      return true;
    }
    bad("unexpected string '" + s + "'");
  }

  bool start_object(std::size_t) {
    ++depth_;
    if (depth_ == 1) return true;
    if (depth_ == 3 && in_entries_) {
      entry_ = TableEntry{};
      terms_.clear();
      entry_seen_ = 0;
      return true;
    }
    if (depth_ == 4 && entry_key_ == kCoeffs) {
      entry_seen_ |= kCoeffs;
      return true;
    }
    bad("unexpected object");
  }

  bool end_object() {
    if (depth_ == 3) {
      if (entry_seen_ != kAllFields) bad("entry is missing one of w, v, kind, var, coeffs");
      entry_.poly = LaurentPolynomial::from_terms(std::move(terms_));
      terms_ = {};
      on_entry_(std::move(entry_));
    }
    if (depth_ == 1 && !header_sent_) {
      if (!seen_.count("entries")) bad("missing key 'entries'");
      send_header();
    }
    --depth_;
    return true;
  }

  bool start_array(std::size_t) {
    ++depth_;
    if (depth_ == 2 && top_key_ == "kinds") {
      seen_.insert("kinds");
      return true;
    }
    if (depth_ == 2 && top_key_ == "entries") {
      seen_.insert("entries");
      send_header();
      in_entries_ = true;
      return true;
    }
    if (depth_ == 4 && (entry_key_ == kW || entry_key_ == kV)) {
      entry_seen_ |= entry_key_;
      (entry_key_ == kW ? entry_.w : entry_.v).letters.reserve(32);
      return true;
    }
    bad("unexpected array");
  }

  bool end_array() {
    if (depth_ == 2) in_entries_ = false;
    --depth_;
    return true;
  }

  bool key(std::string& k) {
    if (depth_ == 1) {
      top_key_ = k;
      if (k != "cartan" && k != "policy" && k != "version" && k != "kinds" && k != "entries")
        bad("unknown key '" + k + "'");
      if (header_sent_) bad("header key '" + k + "' after entries");
      return true;
    }
    if (depth_ == 3) {
      if (k == "w") entry_key_ = kW;
      else if (k == "v") entry_key_ = kV;
      else if (k == "kind") entry_key_ = kKind;
      else if (k == "var") entry_key_ = kVar;
      else if (k == "coeffs") entry_key_ = kCoeffs;
      else bad("unknown entry key '" + k + "'");
      return true;
    }
    if (depth_ == 4 && entry_key_ == kCoeffs) {
      int exponent = 0;
      const auto [end, ec] = std::from_chars(k.data(), k.data() + k.size(), exponent);
      if (ec != std::errc() || end != k.data() + k.size() || k.empty()) bad("bad exponent key '" + k + "'");
      pending_exponent_ = exponent;
      return true;
    }
    bad("unexpected key '" + k + "'");
  }

  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }

 private:
  // Entry fields, as bits of entry_seen_.
  static constexpr unsigned kW = 1, kV = 2, kKind = 4, kVar = 8, kCoeffs = 16, kAllFields = 31;

  [[noreturn]] static void bad(const std::string& why) { throw Error("malformed table file: " + why); }

  static TableKind kind_of(const std::string& s) {
    auto k = parse_kind(s);
    if (!k) bad("unknown table kind '" + s + "'");
    return *k;
  }

  bool integer(std::int64_t n) {
    if (depth_ == 4 && (entry_key_ == kW || entry_key_ == kV)) {
      if (n < 1 || n > 64) bad("invalid generator index " + std::to_string(n));
      (entry_key_ == kW ? entry_.w : entry_.v).letters.push_back(static_cast<Generator>(n - 1));
      return true;
    }
    if (depth_ == 4 && entry_key_ == kCoeffs) {
      terms_.emplace_back(pending_exponent_, n);
      return true;
    }
    bad("unexpected number");
  }

  void send_header() {
    if (header_sent_) return;
    for (const char* k : {"cartan", "policy", "version"})
      if (!seen_.count(k)) bad(std::string("missing key '") + k + "' before entries");
    header_sent_ = true;
    on_header_(header_);
  }

  const std::function<void(const TableFile&)>& on_header_;
  const std::function<void(TableEntry&&)>& on_entry_;
  int depth_ = 0;
  std::string top_key_;
  unsigned entry_key_ = 0;
  std::set<std::string> seen_;
  TableFile header_;
  bool header_sent_ = false;
  bool in_entries_ = false;
  TableEntry entry_;
  std::vector<std::pair<int, LaurentPolynomial::Coefficient>> terms_;
  int pending_exponent_ = 0;
  unsigned entry_seen_ = 0;
};

template <class... Input>
void sax_read(const std::function<void(const TableFile&)>& on_header, const std::function<void(TableEntry&&)>& on_entry,
              Input&&... input) {
  TableSax sax(on_header, on_entry);
  try {
    json::sax_parse(std::forward<Input>(input)..., &sax);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

// Accumulates validated entries into full tables.
class TableBuilder {
 public:
  TableBuilder(const WeylGroup& group, const WordPolicy& policy) : group_(group), policy_(policy) {}

  void header(const TableFile& h) {
    if (h.cartan != group_.system().cartan().name())
      throw Error("file describes " + h.cartan + ", expected " + group_.system().cartan().name());
    if (h.policy != policy_.name()) throw Error("file uses word policy " + h.policy + ", expected " + policy_.name());
    for (TableKind k : kStoredKinds)
      if (std::find(h.kinds.begin(), h.kinds.end(), k) == h.kinds.end())
        throw Error("table kind " + std::string(kind_name(k)) + " missing");
    const std::size_t n = group_.size();
    t_.cartan = h.cartan;
    t_.policy = h.policy;
    for (TableKind k : kAllKinds) {
      t_.table(k) = PolynomialTable(k, n);
      rows_[static_cast<std::size_t>(k)].assign(n, {});
    }
    started_ = true;
  }

  void entry(const TableEntry& e) {
    if (!started_) throw Error("entry before header");
    const ElementId w = group_.evaluate_reduced(e.w);
    const ElementId v = group_.evaluate_reduced(e.v);
    if (group_.lex_min_word(w) != e.w || group_.lex_min_word(v) != e.v)
      throw Error("entry words must be lex-min reduced words");
    if (!group_.bruhat_leq(v, w))
      throw Error("entry (" + format_word(e.w) + " | " + format_word(e.v) + ") is not a Bruhat pair");
    if (e.var != kind_variable(e.kind)) throw Error("variable tag does not match table kind");
    rows_[static_cast<std::size_t>(e.kind)][w.value].emplace_back(v, e.poly);
  }

  DecompTables finish() {
    if (!started_) throw Error("no header");
    t_.words.resize(group_.size());
    for (ElementId w : group_.all()) t_.words[w.value] = policy_.word_for(group_, w);
    for (TableKind k : kStoredKinds) {
      auto& rows = rows_[static_cast<std::size_t>(k)];
      for (ElementId w : group_.all()) t_.table(k).set_row(w, std::move(rows[w.value]));
      rows = {};
    }
    derive(TableKind::Q, t_.f_tilde);
    derive(TableKind::S, t_.d_tilde);
    derive(TableKind::P, t_.h_tilde);
    return std::move(t_);
  }

 private:
  const WeylGroup& group_;
  const WordPolicy& policy_;
  DecompTables t_;
  std::array<std::vector<PolynomialTable::Row>, std::size(kAllKinds)> rows_;
  bool started_ = false;

  // Q, S and P are the tilde tables at t = sqrt(q). A file may carry them
  // too, in which case they have to agree.
  void derive(TableKind kind, const PolynomialTable& from) {
    auto& rows = rows_[static_cast<std::size_t>(kind)];
    PolynomialTable& to = t_.table(kind);
    for (ElementId w : group_.all()) {
      PolynomialTable::Row row;
      for (const auto& [v, poly] : from.row(w)) row.emplace_back(v, evaluate_at_sqrt_q(poly));
      to.set_row(w, std::move(row));
      if (rows.empty() || rows[w.value].empty()) continue;
      PolynomialTable::Row given = std::move(rows[w.value]);
      std::sort(given.begin(), given.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (given != to.row(w))
        throw Error("table " + std::string(kind_name(kind)) + " disagrees with the tilde tables at w=" + group_.label(w));
    }
    rows = {};
  }
};

}  // namespace

TableFile make_table_file(const WeylGroup& group, const DecompTables& tables, std::span<const TableKind> kinds) {
  TableFile f;
  f.cartan = tables.cartan;
  f.policy = tables.policy;
  f.kinds.assign(kinds.begin(), kinds.end());
  for (TableKind kind : kinds) {
    const PolynomialTable& t = tables.table(kind);
    for (ElementId w : group.all())
      for (const auto& [v, poly] : t.row(w))
        f.entries.push_back({group.lex_min_word(w), group.lex_min_word(v), kind, kind_variable(kind), poly});
  }
  return f;
}

std::string render_table_json(const TableFile& file) {
  std::ostringstream out;
  write_header_json(out, file.cartan, file.policy, file.version, file.kinds);
  bool first = true;
  for (const auto& e : file.entries) {
    write_entry_json(out, first, word_json(e.w), word_json(e.v), e.kind, e.var, e.poly);
    first = false;
  }
  write_footer_json(out);
  return out.str();
}

void write_table_json(std::ostream& out, const WeylGroup& group, const DecompTables& tables,
                      std::span<const TableKind> kinds) {
  write_header_json(out, tables.cartan, tables.policy, kToolVersion, kinds);
  std::vector<std::string> words;
  words.reserve(group.size());
  for (ElementId w : group.all()) words.push_back(word_json(group.lex_min_word(w)));
  bool first = true;
  for (TableKind kind : kinds)
    for (ElementId w : group.all())
      for (const auto& [v, poly] : tables.table(kind).row(w)) {
        write_entry_json(out, first, words[w.value], words[v.value], kind, kind_variable(kind), poly);
        first = false;
      }
  write_footer_json(out);
}

std::string render_table_csv(const TableFile& file) {
  std::ostringstream out;
  out << kCsvHeader;
  for (const auto& e : file.entries) write_entry_csv(out, e.w, e.v, e.kind, e.var, e.poly);
  return out.str();
}

void write_table_csv(std::ostream& out, const WeylGroup& group, const DecompTables& tables,
                     std::span<const TableKind> kinds) {
  out << kCsvHeader;
  for (TableKind kind : kinds)
    for (ElementId w : group.all())
      for (const auto& [v, poly] : tables.table(kind).row(w))
        write_entry_csv(out, group.lex_min_word(w), group.lex_min_word(v), kind, kind_variable(kind), poly);
}

void read_table_json(std::istream& in, const std::function<void(const TableFile&)>& on_header,
                     const std::function<void(TableEntry&&)>& on_entry) {
  sax_read(on_header, on_entry, in);
}

TableFile parse_table_json(std::string_view text) {
  TableFile f;
  sax_read([&](const TableFile& h) { f = h; }, [&](TableEntry&& e) { f.entries.push_back(std::move(e)); }, text);
  return f;
}

DecompTables tables_from_file(const WeylGroup& group, const WordPolicy& policy, const TableFile& file) {
  TableBuilder builder(group, policy);
  builder.header(file);
  for (const auto& e : file.entries) builder.entry(e);
  return builder.finish();
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("KLDECOMP_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "kldecomp";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".local" / "share" / "kldecomp";
  return std::filesystem::temp_directory_path() / "kldecomp";
}

std::filesystem::path TableCache::path_for(std::string_view cartan, std::string_view policy) const {
  auto clean = [](std::string_view s) {
    std::string out;
    for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) || c == '+' ? c : '_';
    return out;
  };
  return dir_ / (clean(cartan) + "__" + clean(policy) + ".json");
}

std::optional<DecompTables> TableCache::load(const WeylGroup& group, const WordPolicy& policy) const {
  const auto path = path_for(group.system().cartan().name(), policy.name());
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheCorruption("cannot open cache file", path.string());
  // The lexer is several times faster on a contiguous buffer than on a stream.
  std::string text;
  text.resize(std::filesystem::file_size(path, ec));
  if (ec || !in.read(text.data(), static_cast<std::streamsize>(text.size())))
    throw CacheCorruption("cannot read cache file", path.string());
  in.close();
  try {
    TableBuilder builder(group, policy);
    sax_read([&](const TableFile& h) { builder.header(h); }, [&](TableEntry&& e) { builder.entry(e); },
             std::string_view(text));
    return builder.finish();
  } catch (const Error& e) {
    throw CacheCorruption(std::string("corrupt cache file: ") + e.what(), path.string());
  }
}

void TableCache::store(const WeylGroup& group, const DecompTables& tables) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(tables.cartan, tables.policy);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    write_table_json(out, group, tables, kStoredKinds);
    if (!out.flush()) throw Error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

DecompTables load_or_compute(const WeylGroup& group, const WordPolicy& policy, const TableCache* cache,
                             FillOptions options) {
  if (cache)
    if (auto hit = cache->load(group, policy)) return std::move(*hit);
  DecompTables t = full_tables(group, policy, options);
  if (cache) cache->store(group, t);
  return t;
}

}  // namespace kldecomp
