#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "kldecomp/coxeter.hpp"
#include "kldecomp/laurent.hpp"
#include "kldecomp/word_policy.hpp"

namespace kldecomp {

/// A subexpression of a reduced word: bit j selects the j-th letter.
/// Stored as a machine word, so words are limited to 64 letters.
struct Mask {
  std::uint64_t bits = 0;
  std::size_t size = 0;

  bool operator[](std::size_t j) const { return (bits >> j) & 1U; }
};

/// Number of positions j at which the prefix element sigma_{j-1} has the
/// j-th letter as a right descent. Independent of the bit chosen at j.
struct DefectCount {
  int value = 0;
  auto operator<=>(const DefectCount&) const = default;
};

DefectCount defect(const WeylGroup& group, const ReducedWord& word, Mask mask);

/// sigma_l, the element the subexpression multiplies to.
ElementId mask_product(const WeylGroup& group, const ReducedWord& word, Mask mask);

/// Deodhar polynomials Q_{w,v} for one reduced word of w, as polynomials in q.
struct QRow {
  ReducedWord word;
  ElementId w;
  std::map<ElementId, LaurentPolynomial> entries;
  /// Work counter: masks walked (brute force) or (position, state) pairs
  /// expanded (dynamic program).
  std::uint64_t states = 0;
};

inline constexpr std::size_t kBruteForceCap = 20;

/// Enumerates all 2^l masks. Refuses words longer than `cap`.
QRow q_row_bruteforce(const WeylGroup& group, const ReducedWord& word, std::size_t cap = kBruteForceCap);

/// Layered dynamic program over (position, sigma_j). Both transitions out of
/// a state pick up a factor q exactly when the next letter is a right descent
/// of the state, so no mask is ever materialized.
QRow q_row_dp(const WeylGroup& group, const ReducedWord& word);

/// F-tilde_{w,v}(t) = Q_{w,v}(t^2), the fiber Poincare polynomials in t.
std::map<ElementId, LaurentPolynomial> fiber_poincare_row(const WeylGroup& group, const ReducedWord& word);

/// Source of fiber Poincare polynomials for a family of equivariant
/// resolutions, one per element. The decomposition engine only sees this.
class FiberSupplier {
 public:
  virtual ~FiberSupplier() = default;
  virtual std::string name() const = 0;
  /// Word identifying the resolution of w.
  virtual ReducedWord word(ElementId w) const = 0;
  /// F-tilde_{w,v} in t for every v <= w. Must be safe to call concurrently.
  virtual std::map<ElementId, LaurentPolynomial> fiber_row(ElementId w) const = 0;
};

enum class QEngine { brute_force, dp };

/// Bott-Samelson resolutions along the words chosen by a WordPolicy.
class BottSamelsonSupplier final : public FiberSupplier {
 public:
  BottSamelsonSupplier(const WeylGroup& group, WordPolicy policy, QEngine engine = QEngine::dp)
      : group_(group), policy_(std::move(policy)), engine_(engine) {}

  std::string name() const override { return policy_.name(); }
  ReducedWord word(ElementId w) const override { return policy_.word_for(group_, w); }
  std::map<ElementId, LaurentPolynomial> fiber_row(ElementId w) const override;
  QRow q_row(ElementId w) const;

 private:
  const WeylGroup& group_;
  WordPolicy policy_;
  QEngine engine_;
};

}  // namespace kldecomp
