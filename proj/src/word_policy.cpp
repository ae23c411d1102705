#include "kldecomp/word_policy.hpp"

#include <cstdio>
#include <fstream>

#include "kldecomp/errors.hpp"

namespace kldecomp {

WordPolicy WordPolicy::from_file(const WeylGroup& group, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read word file " + path.string());
  WordPolicy policy = lex_min();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      const ReducedWord word = parse_word(line);
      const ElementId w = group.evaluate_reduced(word);
      if (policy.overrides_.count(w))
        throw Error("element " + group.label(w) + " listed twice");
      policy.overrides_.emplace(w, word);
    } catch (const Error& e) {
      throw Error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return policy;
}

WordPolicy WordPolicy::with_override(const WeylGroup& group, const ReducedWord& word) const {
  WordPolicy copy = *this;
  copy.overrides_[group.evaluate_reduced(word)] = word;
  return copy;
}

std::string WordPolicy::name() const {
  std::string base = base_ == Base::lex_min ? "lexmin" : "lexmax";
  if (overrides_.empty()) return base;
  // FNV-1a over the override list; ElementId order makes it deterministic.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (const auto& [id, word] : overrides_) {
    for (char c : format_word(word)) mix(static_cast<unsigned char>(c));
    mix(';');
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return base + "+" + hex;
}

ReducedWord WordPolicy::word_for(const WeylGroup& group, ElementId w) const {
  if (auto it = overrides_.find(w); it != overrides_.end()) return it->second;
  if (base_ == Base::lex_min) return group.lex_min_word(w);
  ReducedWord word;
  while (group.length(w) > 0) {
    Generator s = group.rank() - 1;
    while (!group.descends_left(w, s)) --s;
    word.letters.push_back(s);
    w = group.left_mult(w, s);
  }
  return word;
}

}  // namespace kldecomp
