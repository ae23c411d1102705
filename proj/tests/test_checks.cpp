#include "doctest.h"
#include "kldecomp/checks.hpp"
#include "kldecomp/kl_oracle.hpp"

using namespace kldecomp;
using LP = LaurentPolynomial;

TEST_CASE("all property suites pass on A3") {
  const WeylGroup g(build_system("A3"));
  const DecompTables t = full_tables(g, WordPolicy::lex_min());
  const DecompTables alt = full_tables(g, WordPolicy::lex_max());
  for (const CheckResult& r :
       {check_mass(g, t), check_engines(g, WordPolicy::lex_min()), check_oracle(g, t, classical_kl_table(g)),
        check_reconstruction(g, t), check_matrix_identity(g, t), check_symmetry(g, t), check_hecke_relations(g, t),
        check_basis_theorem(g, t), check_word_independence(g, t, alt)}) {
    CAPTURE(r.name);
    CHECK_MESSAGE(r.passed, r.detail);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("tampered tables produce a counterexample") {
  const WeylGroup g(build_system("A3"));
  DecompTables t = full_tables(g, WordPolicy::lex_min());
  const ElementId x = g.evaluate_reduced(parse_word("2,1,3,2"));
  const ElementId s2 = g.evaluate(parse_word("2"));

  auto row = t.p.row(x);
  for (auto& [v, poly] : row)
    if (v == s2) poly = 1;
  t.p.set_row(x, row);

  const auto oracle = check_oracle(g, t, classical_kl_table(g));
  CHECK_FALSE(oracle.passed);
  CHECK(oracle.detail.find("expected P = 1 + q, got 1") != std::string::npos);
  CHECK(oracle.detail.find("u=s2") != std::string::npos);
  CHECK_FALSE(check_matrix_identity(g, t).passed);
  CHECK_FALSE(check_basis_theorem(g, t).passed);

  auto q_row = t.q.row(g.longest());
  q_row.front().second += LP(1);
  t.q.set_row(g.longest(), q_row);
  CHECK_FALSE(check_mass(g, t).passed);
}
