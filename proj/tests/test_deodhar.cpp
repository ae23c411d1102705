#include <random>

#include "doctest.h"
#include "kldecomp/deodhar.hpp"
#include "kldecomp/errors.hpp"
#include "oracles.hpp"

using namespace kldecomp;
using LP = LaurentPolynomial;

namespace {

ReducedWord w(std::initializer_list<int> one_based) {
  ReducedWord r;
  for (int g : one_based) r.letters.push_back(g - 1);
  return r;
}

const LP one_plus_q{{0, 1}, {1, 1}};

}  // namespace

TEST_CASE("defect on hand-traced masks") {
  const WeylGroup g(build_system("A2"));
  const ReducedWord word = w({1, 2, 1});
  CHECK(defect(g, word, Mask{0b000, 3}).value == 0);
  CHECK(defect(g, word, Mask{0b101, 3}).value == 1);
  CHECK(defect(g, word, Mask{0b111, 3}).value == 0);
  CHECK(mask_product(g, word, Mask{0b101, 3}) == g.identity());
  CHECK(mask_product(g, word, Mask{0b111, 3}) == g.longest());
}

TEST_CASE("Q rows in A1 and A2") {
  const WeylGroup a1(build_system("A1"));
  const QRow r1 = q_row_bruteforce(a1, w({1}));
  CHECK(r1.entries.size() == 2);
  CHECK(r1.entries.at(a1.identity()) == LP(1));
  CHECK(r1.entries.at(a1.longest()) == LP(1));

  const WeylGroup g(build_system("A2"));
  const ElementId s1 = g.evaluate(w({1})), s2 = g.evaluate(w({2}));
  const ElementId s1s2 = g.evaluate(w({1, 2})), s2s1 = g.evaluate(w({2, 1}));
  const QRow row = q_row_bruteforce(g, w({1, 2, 1}));
  CHECK(row.w == g.longest());
  CHECK(row.entries == std::map<ElementId, LP>{{g.identity(), one_plus_q}, {s1, one_plus_q}, {s2, 1},
                                                {s1s2, 1}, {s2s1, 1}, {g.longest(), 1}});
  CHECK(q_row_dp(g, w({1, 2, 1})).entries == row.entries);

  const QRow short_row = q_row_bruteforce(g, w({1, 2}));
  CHECK(short_row.entries == std::map<ElementId, LP>{{g.identity(), 1}, {s1, 1}, {s2, 1}, {s1s2, 1}});

  const QRow other = q_row_dp(g, w({2, 1, 2}));
  CHECK(other.entries.at(s2) == one_plus_q);
  CHECK(other.entries.at(s1) == LP(1));
}

TEST_CASE("fiber Poincare polynomials are Q in t") {
  const WeylGroup g(build_system("A2"));
  const auto row = fiber_poincare_row(g, w({1, 2, 1}));
  CHECK(row.at(g.evaluate(w({1}))) == LP{{0, 1}, {2, 1}});
  CHECK(row.at(g.evaluate(w({2}))) == LP(1));
  CHECK(row.at(g.longest()) == LP(1));
}

TEST_CASE("B2 longest element has 16 masks") {
  const WeylGroup g(build_system("B2"));
  const QRow row = q_row_dp(g, w({1, 2, 1, 2}));
  LP::Coefficient total = 0;
  for (const auto& [v, q] : row.entries) total += q.value_at_one();
  CHECK(total == 16);
}

TEST_CASE("brute force refuses long words") {
  const WeylGroup g(build_system("A2"));
  CHECK_THROWS_AS(q_row_bruteforce(g, w({1, 2, 1}), 2), ContractViolation);
}

TEST_CASE("engines agree and satisfy the mass identity") {
  for (const char* name : {"A3", "B3", "G2"}) {
    CAPTURE(name);
    const WeylGroup g(build_system(name));
    for (ElementId x : g.all()) {
      const ReducedWord& word = g.lex_min_word(x);
      const QRow brute = q_row_bruteforce(g, word);
      const QRow dp = q_row_dp(g, word);
      CHECK(brute.entries == dp.entries);
      CHECK(dp.states <= g.lower_interval(x).size() * std::max<std::size_t>(word.size(), 1));
      LP mass;
      for (const auto& [v, q] : dp.entries) {
        mass.add_scaled(q, 1, g.length(v));
        CHECK(g.bruhat_leq(v, x));
        CHECK_FALSE(q.has_negative_coefficients());
      }
      CHECK(mass == one_plus_x_power(g.length(x)));
      CHECK(dp.entries.size() == g.lower_interval(x).size());
    }
  }
}

TEST_CASE("random words in A4 and D4 under the brute-force cap") {
  std::mt19937 rng(99);
  for (const char* name : {"A4", "D4"}) {
    const WeylGroup g(build_system(name));
    for (int trial = 0; trial < 25; ++trial) {
      ReducedWord word;
      ElementId x = g.identity();
      for (int step = 0; step < 40 && word.size() < 12; ++step) {
        const auto i = static_cast<Generator>(rng() % static_cast<unsigned>(g.rank()));
        if (g.descends_right(x, i)) continue;
        word.letters.push_back(i);
        x = g.right_mult(x, i);
      }
      CAPTURE(format_word(word));
      CHECK(q_row_bruteforce(g, word).entries == q_row_dp(g, word).entries);
    }
  }
}

TEST_CASE("type A Q rows agree with mask enumeration on permutations") {
  const int n = 4;
  const WeylGroup g(build_system("A3"));
  for (ElementId x : g.all()) {
    for (const ReducedWord& word : {g.lex_min_word(x), g.system().lex_max_reduced_word(g.element(x))}) {
      const auto expected = oracle::perm_q_row(n, word);
      const QRow row = q_row_dp(g, word);
      REQUIRE(row.entries.size() == expected.size());
      for (const auto& [v, q] : row.entries)
        CHECK(oracle::naive(q) == expected.at(oracle::perm_of_word(n, g.lex_min_word(v))));
    }
  }
}

TEST_CASE("Bott-Samelson supplier follows the word policy") {
  const WeylGroup g(build_system("A2"));
  const BottSamelsonSupplier lexmin(g, WordPolicy::lex_min());
  const BottSamelsonSupplier lexmax(g, WordPolicy::lex_max(), QEngine::brute_force);
  CHECK(lexmin.word(g.longest()) == w({1, 2, 1}));
  CHECK(lexmax.word(g.longest()) == w({2, 1, 2}));
  CHECK(lexmin.name() == "lexmin");
  CHECK(lexmax.name() == "lexmax");
  CHECK(lexmin.fiber_row(g.longest()).at(g.evaluate(w({1}))) == LP{{0, 1}, {2, 1}});
  CHECK(lexmax.fiber_row(g.longest()).at(g.evaluate(w({2}))) == LP{{0, 1}, {2, 1}});
}
