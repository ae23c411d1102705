#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "kldecomp/decomp.hpp"
#include "kldecomp/errors.hpp"
#include "kldecomp/kl_oracle.hpp"

using namespace kldecomp;
using LP = LaurentPolynomial;

namespace {

ReducedWord w(std::initializer_list<int> one_based) {
  ReducedWord r;
  for (int g : one_based) r.letters.push_back(g - 1);
  return r;
}

const LP one_plus_t2{{0, 1}, {2, 1}};

// Fiber rows that ignore geometry: the mass of every row is placed on the
// identity, which breaks positivity of the decomposition for longer words.
class BogusSupplier final : public FiberSupplier {
 public:
  explicit BogusSupplier(const WeylGroup& g) : g_(g) {}
  std::string name() const override { return "bogus"; }
  ReducedWord word(ElementId x) const override { return g_.lex_min_word(x); }
  std::map<ElementId, LP> fiber_row(ElementId x) const override {
    if (x == g_.identity()) return {{x, 1}};
    return {{x, 1}, {g_.identity(), LP{{0, 1}, {1, 1}}}};
  }

 private:
  const WeylGroup& g_;
};

}  // namespace

TEST_CASE("A2 hand recursion") {
  const WeylGroup g(build_system("A2"));
  const ElementId w0 = g.longest();
  const ElementId s1 = g.evaluate(w({1})), s2 = g.evaluate(w({2}));
  const ElementId s1s2 = g.evaluate(w({1, 2})), s2s1 = g.evaluate(w({2, 1}));

  SUBCASE("single cells") {
    const auto top = decompose_cell(g, w0, w0, 1);
    CHECK(top.d_tilde == LP(1));
    CHECK(top.h_tilde == LP(1));
    const auto at_s1 = decompose_cell(g, w0, s1, one_plus_t2);
    CHECK(at_s1.d_tilde == LP::monomial(2));
    CHECK(at_s1.h_tilde == LP(1));
    const auto at_s1s2 = decompose_cell(g, w0, s1s2, 1);
    CHECK(at_s1s2.d_tilde.is_zero());
    CHECK(at_s1s2.h_tilde == LP(1));
  }

  SUBCASE("full tables") {
    const DecompTables t = full_tables(g, WordPolicy::lex_min(), {1});
    for (ElementId x : g.all())
      for (ElementId u : g.lower_interval(x)) {
        CHECK(t.p.at(x, u) == LP(1));
        if (u != x && !(x == w0 && u == s1)) CHECK(t.s.at(x, u).is_zero());
      }
    CHECK(t.s.at(w0, s1) == LP::monomial(1));
    CHECK(t.d_tilde.at(w0, s1) == LP::monomial(2));
    CHECK(t.words[w0.value] == w({1, 2, 1}));

    // R-tilde at u = s1 and u = e from the finished row.
    DecompRow row(g, w0);
    for (std::size_t k = 0; k < row.interval.size(); ++k)
      row.record(k, t.d_tilde.at(w0, row.interval[k]), t.h_tilde.at(w0, row.interval[k]));
    CHECK(r_tilde(g, row, s1, t.f_tilde.at(w0, s1), t.h_tilde) == one_plus_t2);
    CHECK(r_tilde(g, row, s2s1, t.f_tilde.at(w0, s2s1), t.h_tilde) == LP(1));
    CHECK(r_tilde(g, row, g.identity(), t.f_tilde.at(w0, g.identity()), t.h_tilde) == LP(1));

    const auto report = verify_reconstruction(g, t, w0);
    CHECK(report.ok);
  }

  SUBCASE("the other word for w0 moves the S entry") {
    const auto policy = WordPolicy::lex_min().with_override(g, w({2, 1, 2}));
    const DecompTables t = full_tables(g, policy, {1});
    CHECK(t.s.at(w0, s2) == LP::monomial(1));
    CHECK(t.s.at(w0, s1).is_zero());
    CHECK(t.p == full_tables(g, WordPolicy::lex_min(), {1}).p);
  }
}

TEST_CASE("r_tilde refuses out-of-order input") {
  const WeylGroup g(build_system("A2"));
  const ElementId w0 = g.longest();
  DecompRow empty(g, w0);
  const PolynomialTable h(TableKind::Htilde, g.size());
  CHECK_THROWS_AS(r_tilde(g, empty, g.identity(), 1, h), ContractViolation);

  // D-tilde filled but the H-tilde rows of the middle elements missing.
  DecompRow row(g, w0);
  const ElementId s1 = g.evaluate(w({1}));
  for (std::size_t k = 0; k < row.interval.size(); ++k)
    row.record(k, row.interval[k] == s1 ? LP::monomial(2) : LP(), LP());
  CHECK_THROWS_AS(r_tilde(g, row, g.identity(), 1, h), ContractViolation);

  const ElementId s1s2 = g.evaluate(w({1, 2}));
  DecompRow small(g, s1s2);
  CHECK_THROWS_AS(r_tilde(g, small, g.evaluate(w({2, 1})), 1, h), ContractViolation);
}

TEST_CASE("decompose_cell rejects data that cannot come from a resolution") {
  const WeylGroup g(build_system("A2"));
  const ElementId w0 = g.longest();
  const ElementId s1 = g.evaluate(w({1}));
  CHECK_THROWS_AS(decompose_cell(g, w0, s1, LP{{0, 1}, {1, 1}}), ConsistencyError);
  CHECK_THROWS_AS(decompose_cell(g, w0, s1, LP{{0, -1}}), ConsistencyError);
  CHECK_THROWS_AS(decompose_cell(g, w0, s1, LP{{-2, 1}}), ConsistencyError);
}

TEST_CASE("inconsistent fibers surface with system and word") {
  const WeylGroup g(build_system("A2"));
  try {
    full_tables(g, BogusSupplier(g), {1});
    FAIL("expected ConsistencyError");
  } catch (const ConsistencyError& e) {
    const std::string what = e.what();
    CHECK(what.find("A2") != std::string::npos);
    CHECK(what.find("word") != std::string::npos);
  }
}

TEST_CASE("A3 landmark and oracle agreement") {
  const WeylGroup g(build_system("A3"));
  const DecompTables t = full_tables(g, WordPolicy::lex_min());
  const ElementId x = g.evaluate_reduced(w({2, 1, 3, 2}));
  const ElementId s2 = g.evaluate(w({2}));
  CHECK(t.p.at(x, s2) == LP{{0, 1}, {1, 1}});
  CHECK(t.p == classical_kl_table(g));
  for (ElementId y : g.all()) {
    CHECK(verify_reconstruction(g, t, y).ok);
    CHECK(t.p.at(y, g.identity()).coefficient(0) == 1);
  }
}

TEST_CASE("thread count does not change the result") {
  const WeylGroup g(build_system("B3"));
  const DecompTables one = full_tables(g, WordPolicy::lex_min(), {1});
  const DecompTables four = full_tables(g, WordPolicy::lex_min(), {4});
  for (TableKind k : kAllKinds) CHECK(one.table(k) == four.table(k));
  CHECK(one.words == four.words);
}

TEST_CASE("word policies") {
  const WeylGroup g(build_system("B2"));
  CHECK(WordPolicy::lex_max().word_for(g, g.longest()) == w({2, 1, 2, 1}));
  CHECK(WordPolicy::lex_min().word_for(g, g.longest()) == w({1, 2, 1, 2}));
  for (ElementId x : g.all()) CHECK(g.evaluate_reduced(WordPolicy::lex_max().word_for(g, x)) == x);

  const auto path = std::filesystem::temp_directory_path() / "kldecomp_words_test.txt";
  {
    std::ofstream out(path);
    out << "# longest element along the other word\n\n2,1,2,1\n";
  }
  const WordPolicy from_file = WordPolicy::from_file(g, path);
  CHECK(from_file.word_for(g, g.longest()) == w({2, 1, 2, 1}));
  CHECK(from_file.word_for(g, g.evaluate(w({1, 2}))) == w({1, 2}));
  CHECK(from_file.name().rfind("lexmin+", 0) == 0);
  CHECK(from_file.name().size() == std::string("lexmin+").size() + 16);
  CHECK(from_file.name() == WordPolicy::lex_min().with_override(g, w({2, 1, 2, 1})).name());

  {
    std::ofstream out(path);
    out << "2,1,2,1\n1,2,1,2\n";
  }
  CHECK_THROWS_AS(WordPolicy::from_file(g, path), Error);
  {
    std::ofstream out(path);
    out << "1,1\n";
  }
  CHECK_THROWS_AS(WordPolicy::from_file(g, path), Error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(WordPolicy::from_file(g, path), Error);
}
