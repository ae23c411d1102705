#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kldecomp {

/// Dense square integer matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n), 0) {}
  static SquareMatrix identity(int n);

  int size() const noexcept { return n_; }
  int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * n_ + c)]; }
  int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * n_ + c)]; }
  const std::vector<int>& data() const noexcept { return data_; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  bool operator==(const SquareMatrix&) const = default;

  /// Exact integer determinant (Bareiss elimination).
  long long determinant() const;

 private:
  int n_ = 0;
  std::vector<int> data_;
};

/// A generator index. Zero-based inside the library; words are printed and
/// parsed 1-based.
using Generator = int;

/// A sequence of generator indices. Whether it is reduced depends on the
/// group; see CoxeterSystem::is_reduced.
struct ReducedWord {
  std::vector<Generator> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Generator operator[](std::size_t i) const { return letters[i]; }
  auto operator<=>(const ReducedWord&) const = default;
};

/// "1,2,1"; the empty string for the identity.
std::string format_word(const ReducedWord& w);
/// Inverse of format_word. Whitespace around letters is ignored. Letters
/// must be positive integers; range checks against a rank happen later.
/// Throws WordError naming the first bad position.
ReducedWord parse_word(std::string_view text);

/// Finite crystallographic Cartan datum.
///
/// Either a named type ("A3", "B2", "D4", "E6", "F4", "G2") in Bourbaki
/// numbering, or an explicit Coxeter matrix with entries in {2,3,4,6} whose
/// diagram is a disjoint union of finite-type diagrams. Construction
/// validates both; failures raise CartanError naming the offending entry.
class CartanType {
 public:
  static CartanType parse(std::string_view name);
  static CartanType from_coxeter_matrix(const std::vector<std::vector<int>>& m);

  /// "A3" for named types, "coxeter[1,3;3,1]" for explicit matrices.
  const std::string& name() const noexcept { return name_; }
  int rank() const noexcept { return static_cast<int>(coxeter_.size()); }
  /// m(i, j), zero-based.
  int coxeter_entry(int i, int j) const { return coxeter_[i][j]; }
  /// <alpha_i^vee, alpha_j>, zero-based.
  int cartan_entry(int i, int j) const { return cartan_[i][j]; }
  /// Irreducible components, e.g. {"A2", "B2"}; product of their orders is
  /// the group order.
  const std::vector<std::string>& components() const noexcept { return components_; }
  std::uint64_t group_order() const noexcept { return order_; }

 private:
  CartanType() = default;
  void classify();

  std::string name_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::string> components_;
  std::uint64_t order_ = 0;
};

class CoxeterSystem;

/// An element of the Weyl group as an integer matrix acting on the root
/// lattice: column j is the image of the j-th simple root. Length is cached.
class WeylElement {
 public:
  WeylElement() = default;

  const SquareMatrix& matrix() const noexcept { return matrix_; }
  int length() const noexcept { return length_; }

  bool operator==(const WeylElement& o) const { return matrix_ == o.matrix_; }

 private:
  friend class CoxeterSystem;
  friend class WeylGroup;
  WeylElement(SquareMatrix m, int length) : matrix_(std::move(m)), length_(length) {}

  SquareMatrix matrix_;
  int length_ = 0;
};

/// Cartan datum together with its reflection representation on the root
/// lattice. Immutable after construction.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(CartanType cartan);

  const CartanType& cartan() const noexcept { return cartan_; }
  int rank() const noexcept { return cartan_.rank(); }
  std::uint64_t group_order() const noexcept { return cartan_.group_order(); }
  const std::vector<SquareMatrix>& simple_reflections() const noexcept { return reflections_; }
  /// Positive roots in the simple-root basis, simple roots first.
  const std::vector<std::vector<int>>& positive_roots() const noexcept { return positive_roots_; }

  WeylElement identity() const;
  WeylElement generator(Generator i) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  /// Evaluates a word; throws WordError for out-of-range letters.
  WeylElement evaluate(const ReducedWord& word) const;
  bool is_reduced(const ReducedWord& word) const;

  /// l(w s_i) < l(w), i.e. w sends alpha_i to a negative root.
  bool descends_right(const WeylElement& w, Generator i) const;
  /// l(s_i w) < l(w).
  bool descends_left(const WeylElement& w, Generator i) const;

  /// Bruhat order via the lifting property along right descents of w.
  bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;
  ReducedWord lex_min_reduced_word(const WeylElement& w) const;
  ReducedWord lex_max_reduced_word(const WeylElement& w) const;

  /// Number of positive roots sent to negative roots by m.
  int length_of(const SquareMatrix& m) const;
  /// m * s_i, computed column-wise.
  SquareMatrix right_reflect(const SquareMatrix& m, Generator i) const;
  /// s_i * m.
  SquareMatrix left_reflect(const SquareMatrix& m, Generator i) const;

 private:
  void check_generator(Generator i) const;

  CartanType cartan_;
  std::vector<SquareMatrix> reflections_;
  std::vector<std::vector<int>> positive_roots_;
};

CoxeterSystem build_system(const CartanType& cartan);
CoxeterSystem build_system(std::string_view cartan_name);

/// Index of an element inside an enumerated WeylGroup. Ids are ordered by
/// (length, lex-min reduced word), so the identity is 0 and the longest
/// element is last.
struct ElementId {
  std::uint32_t value = 0;
  auto operator<=>(const ElementId&) const = default;
};

/// A finite Weyl group with every element enumerated and indexed.
///
/// Holds multiplication tables by generators on both sides, lengths,
/// lex-min reduced words, and (for groups up to `bruhat_cache_limit`
/// elements) the full Bruhat order as one bitset per element.
class WeylGroup {
 public:
  struct Options {
    std::size_t max_elements = 100000;
    std::size_t bruhat_cache_limit = 8192;
  };

  explicit WeylGroup(CoxeterSystem system) : WeylGroup(std::move(system), Options{}) {}
  WeylGroup(CoxeterSystem system, Options options);

  const CoxeterSystem& system() const noexcept { return system_; }
  int rank() const noexcept { return system_.rank(); }
  std::size_t size() const noexcept { return elements_.size(); }
  ElementId identity() const noexcept { return ElementId{0}; }
  ElementId longest() const noexcept { return ElementId{static_cast<std::uint32_t>(size() - 1)}; }
  std::span<const ElementId> all() const noexcept { return ids_; }

  int length(ElementId w) const { return lengths_[w.value]; }
  int max_length() const { return lengths_.back(); }
  const WeylElement& element(ElementId w) const { return elements_[w.value]; }
  ElementId right_mult(ElementId w, Generator i) const { return right_[w.value * rank_ + static_cast<std::size_t>(i)]; }
  ElementId left_mult(ElementId w, Generator i) const { return left_[w.value * rank_ + static_cast<std::size_t>(i)]; }
  bool descends_right(ElementId w, Generator i) const { return length(right_mult(w, i)) < length(w); }
  bool descends_left(ElementId w, Generator i) const { return length(left_mult(w, i)) < length(w); }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId w) const;

  const ReducedWord& lex_min_word(ElementId w) const { return words_[w.value]; }
  /// Evaluates a word; throws WordError for out-of-range letters.
  ElementId evaluate(const ReducedWord& word) const;
  /// Throws WordError at the first letter that fails to increase length.
  ElementId evaluate_reduced(const ReducedWord& word) const;
  ElementId id_of(const WeylElement& w) const;
  std::optional<ElementId> find(const WeylElement& w) const;

  bool bruhat_leq(ElementId v, ElementId w) const;
  /// All v <= w, ascending by id (hence by length).
  std::vector<ElementId> lower_interval(ElementId w) const;
  /// Elements grouped by length, each group ascending by lex-min word.
  std::vector<std::vector<ElementId>> elements_by_length() const;

  /// "s1s2" style label for diagnostics; "e" for the identity.
  std::string label(ElementId w) const;
  bool has_bruhat_cache() const noexcept { return !bruhat_bits_.empty(); }

 private:
  static std::string key_of(const SquareMatrix& m);

  CoxeterSystem system_;
  std::size_t rank_;
  std::vector<WeylElement> elements_;
  std::vector<ElementId> ids_;
  std::vector<int> lengths_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
  std::vector<ReducedWord> words_;
  std::unordered_map<std::string, ElementId> index_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bruhat_bits_;
};

}  // namespace kldecomp

template <>
struct std::hash<kldecomp::ElementId> {
  std::size_t operator()(kldecomp::ElementId id) const noexcept { return id.value; }
};
