#pragma once

// Reference implementations used only by the tests. None of them share code
// with the library beyond the public types they compare against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "kldecomp/coxeter.hpp"
#include "kldecomp/laurent.hpp"

namespace oracle {

using kldecomp::LaurentPolynomial;
using kldecomp::ReducedWord;

// Dense-map polynomial arithmetic, deliberately naive.
using NaivePoly = std::map<int, long long>;

inline NaivePoly naive(const LaurentPolynomial& p) {
  NaivePoly out;
  for (const auto& t : p.terms()) out[t.exponent] = t.coefficient;
  return out;
}

inline void prune(NaivePoly& p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
}

inline NaivePoly naive_add(NaivePoly a, const NaivePoly& b) {
  for (const auto& [e, c] : b) a[e] += c;
  prune(a);
  return a;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  prune(out);
  return out;
}

inline LaurentPolynomial random_poly(std::mt19937& rng, int lo = -4, int hi = 6, int max_coeff = 5) {
  std::uniform_int_distribution<int> terms(0, 5), exps(lo, hi), coeffs(-max_coeff, max_coeff);
  std::vector<std::pair<int, LaurentPolynomial::Coefficient>> v;
  for (int n = terms(rng); n > 0; --n) v.emplace_back(exps(rng), coeffs(rng));
  return LaurentPolynomial::from_terms(std::move(v));
}

// Symmetric group S_n acting on {0..n-1}; s_i swaps positions i and i+1
// (one-line notation, right multiplication permutes positions).
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_of_word(int n, const ReducedWord& w) {
  Perm p = perm_identity(n);
  for (int g : w.letters) std::swap(p[static_cast<std::size_t>(g)], p[static_cast<std::size_t>(g) + 1]);
  return p;
}

inline int inversions(const Perm& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

// Tableau criterion: v <= w iff for every prefix the sorted values of v are
// dominated entrywise by those of w.
inline bool perm_bruhat_leq(const Perm& v, const Perm& w) {
  for (std::size_t k = 1; k <= v.size(); ++k) {
    std::vector<int> a(v.begin(), v.begin() + static_cast<long>(k));
    std::vector<int> b(w.begin(), w.begin() + static_cast<long>(k));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Deodhar polynomials in S_n by enumerating masks on permutations, with the
// defect read off from inversion counts.
inline std::map<Perm, NaivePoly> perm_q_row(int n, const ReducedWord& word) {
  std::map<Perm, NaivePoly> row;
  const std::size_t l = word.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l); ++bits) {
    Perm sigma = perm_identity(n);
    int d = 0;
    for (std::size_t j = 0; j < l; ++j) {
      const auto g = static_cast<std::size_t>(word[j]);
      Perm moved = sigma;
      std::swap(moved[g], moved[g + 1]);
      if (inversions(moved) < inversions(sigma)) ++d;
      if ((bits >> j) & 1U) sigma = moved;
    }
    row[sigma][d] += 1;
  }
  return row;
}

// Subword property: v <= w iff v is the product of some subexpression of a
// reduced word for w.
inline std::vector<ReducedWord> subexpressions(const ReducedWord& w) {
  std::vector<ReducedWord> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << w.size()); ++bits) {
    ReducedWord sub;
    for (std::size_t j = 0; j < w.size(); ++j)
      if ((bits >> j) & 1U) sub.letters.push_back(w[j]);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace oracle
