#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "kldecomp/coxeter.hpp"

namespace kldecomp {

/// Chooses the reduced word used for each element's Bott-Samelson
/// resolution. Q, F-tilde, D-tilde and S depend on this choice; P does not.
///
/// A policy is a base rule (lex-min or lex-max) plus optional per-element
/// overrides. The name is part of every cache key.
class WordPolicy {
 public:
  enum class Base { lex_min, lex_max };

  static WordPolicy lex_min() { return WordPolicy(Base::lex_min); }
  static WordPolicy lex_max() { return WordPolicy(Base::lex_max); }

  /// Lex-min base with overrides read from a text file, one comma-separated
  /// reduced word per line. Blank lines and lines starting with '#' are
  /// skipped. Each word must be reduced and no element may appear twice.
  static WordPolicy from_file(const WeylGroup& group, const std::filesystem::path& path);

  /// Returns a copy that uses `word` for the element it evaluates to.
  WordPolicy with_override(const WeylGroup& group, const ReducedWord& word) const;

  /// "lexmin", "lexmax", or "<base>+<16 hex digits>" when overrides exist.
  std::string name() const;

  ReducedWord word_for(const WeylGroup& group, ElementId w) const;

 private:
  explicit WordPolicy(Base base) : base_(base) {}

  Base base_;
  std::map<ElementId, ReducedWord> overrides_;
};

}  // namespace kldecomp
