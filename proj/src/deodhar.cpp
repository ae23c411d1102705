#include "kldecomp/deodhar.hpp"

#include <unordered_map>
#include <vector>

#include "kldecomp/errors.hpp"

namespace kldecomp {

namespace {

void check_mask(const ReducedWord& word, Mask mask) {
  if (mask.size != word.size())
    throw ContractViolation("mask has " + std::to_string(mask.size) + " bits for a word of length " +
                            std::to_string(word.size()));
}

}  // namespace

DefectCount defect(const WeylGroup& group, const ReducedWord& word, Mask mask) {
  check_mask(word, mask);
  ElementId sigma = group.identity();
  DefectCount d;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (group.descends_right(sigma, word[j])) ++d.value;
    if (mask[j]) sigma = group.right_mult(sigma, word[j]);
  }
  return d;
}

ElementId mask_product(const WeylGroup& group, const ReducedWord& word, Mask mask) {
  check_mask(word, mask);
  ElementId sigma = group.identity();
  for (std::size_t j = 0; j < word.size(); ++j)
    if (mask[j]) sigma = group.right_mult(sigma, word[j]);
  return sigma;
}

QRow q_row_bruteforce(const WeylGroup& group, const ReducedWord& word, std::size_t cap) {
  if (word.size() > cap)
    throw ContractViolation("brute-force enumeration refuses words longer than " + std::to_string(cap) +
                            " (got length " + std::to_string(word.size()) + "); use the dynamic program");
  QRow row{word, group.evaluate_reduced(word), {}, 0};
  const std::size_t l = word.size();
  std::unordered_map<ElementId, std::vector<LaurentPolynomial::Coefficient>> counts;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l); ++bits) {
    ElementId sigma = group.identity();
    int d = 0;
    for (std::size_t j = 0; j < l; ++j) {
      if (group.descends_right(sigma, word[j])) ++d;
      if ((bits >> j) & 1U) sigma = group.right_mult(sigma, word[j]);
    }
    auto& c = counts[sigma];
    if (c.size() <= static_cast<std::size_t>(d)) c.resize(static_cast<std::size_t>(d) + 1, 0);
    ++c[static_cast<std::size_t>(d)];
    ++row.states;
  }
  for (auto& [v, c] : counts) row.entries.emplace(v, LaurentPolynomial::from_dense(c));
  return row;
}

QRow q_row_dp(const WeylGroup& group, const ReducedWord& word) {
  QRow row{word, group.evaluate_reduced(word), {}, 0};
  std::vector<LaurentPolynomial> current(group.size());
  std::vector<LaurentPolynomial> next(group.size());
  std::vector<ElementId> active{group.identity()};
  std::vector<ElementId> reached;
  std::vector<char> seen(group.size(), 0);
  current[0] = 1;

  for (std::size_t j = 0; j < word.size(); ++j) {
    const Generator s = word[j];
    reached.clear();
    for (ElementId sigma : active) {
      ++row.states;
      const bool descent = group.descends_right(sigma, s);
      const int k = descent ? 1 : 0;
      for (ElementId target : {sigma, group.right_mult(sigma, s)}) {
        next[target.value].add_scaled(current[sigma.value], 1, k);
        if (!seen[target.value]) {
          seen[target.value] = 1;
          reached.push_back(target);
        }
      }
      current[sigma.value] = LaurentPolynomial();
    }
    for (ElementId v : reached) {
      seen[v.value] = 0;
      current[v.value] = std::move(next[v.value]);
      next[v.value] = LaurentPolynomial();
    }
    active.swap(reached);
  }
  for (ElementId v : active)
    if (!current[v.value].is_zero()) row.entries.emplace(v, std::move(current[v.value]));
  return row;
}

std::map<ElementId, LaurentPolynomial> fiber_poincare_row(const WeylGroup& group, const ReducedWord& word) {
  QRow row = q_row_dp(group, word);
  std::map<ElementId, LaurentPolynomial> out;
  for (auto& [v, p] : row.entries) out.emplace(v, substitute_q(p));
  return out;
}

QRow BottSamelsonSupplier::q_row(ElementId w) const {
  const ReducedWord word = policy_.word_for(group_, w);
  QRow row = engine_ == QEngine::dp ? q_row_dp(group_, word) : q_row_bruteforce(group_, word);
  if (row.w != w) throw ContractViolation("word policy returned a word for a different element");
  return row;
}

std::map<ElementId, LaurentPolynomial> BottSamelsonSupplier::fiber_row(ElementId w) const {
  QRow row = q_row(w);
  std::map<ElementId, LaurentPolynomial> out;
  for (auto& [v, p] : row.entries) out.emplace(v, substitute_q(p));
  return out;
}

}  // namespace kldecomp
