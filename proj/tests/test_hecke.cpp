#include "doctest.h"
#include "kldecomp/checks.hpp"
#include "kldecomp/hecke.hpp"

using namespace kldecomp;
using LP = LaurentPolynomial;

namespace {

ReducedWord w(std::initializer_list<int> one_based) {
  ReducedWord r;
  for (int g : one_based) r.letters.push_back(g - 1);
  return r;
}

const LP q = LP::monomial(2);
const LP q_minus_1{{0, -1}, {2, 1}};

}  // namespace

TEST_CASE("T-basis multiplication in A2") {
  const WeylGroup g(build_system("A2"));
  const HeckeAlgebra H(g);
  const ElementId e = g.identity();
  const ElementId s1 = g.evaluate(w({1})), s2 = g.evaluate(w({2}));
  const auto T = [](ElementId x) { return HeckeElement::basis(x); };

  CHECK(H.t_mult_generator(0, T(e)) == T(s1));
  CHECK(H.t_mult_generator(0, T(s1)) == q_minus_1 * T(s1) + q * T(e));
  CHECK(H.mult(T(s1), T(s2)) == T(g.evaluate(w({1, 2}))));
  CHECK(H.mult(T(e), T(g.longest())) == T(g.longest()));

  const HeckeElement sq = H.mult(T(s1), T(s1));
  CHECK(H.mult(T(s1), sq) == H.mult(sq, T(s1)));
  CHECK(H.mult(T(s1) + T(e), T(s1)) == q * T(s1) + q * T(e));

  const HeckeElement mixed = LP{{0, 2}, {1, -1}} * T(s2) + T(s1);
  for (ElementId x : g.all()) {
    CHECK(H.mult(T(e), mixed) == mixed);
    CHECK(H.t_mult_basis(x, T(e)) == T(x));
  }
}

TEST_CASE("associativity on random-ish elements of B2") {
  const WeylGroup g(build_system("B2"));
  const HeckeAlgebra H(g);
  HeckeElement a, b, c;
  for (ElementId x : g.all()) {
    a.add(x, LP{{0, 1}, {static_cast<int>(x.value), 1}});
    if (x.value % 2) b.add(x, LP::monomial(1, static_cast<LP::Coefficient>(x.value)));
    if (x.value % 3 == 0) c.add(x, LP{{-1, 2}, {2, -1}});
  }
  CHECK(H.mult(H.mult(a, b), c) == H.mult(a, H.mult(b, c)));
}

TEST_CASE("C and B bases in A2") {
  const WeylGroup g(build_system("A2"));
  const HeckeAlgebra H(g);
  const DecompTables t = full_tables(g, WordPolicy::lex_min());
  const ElementId e = g.identity(), w0 = g.longest();
  const ElementId s1 = g.evaluate(w({1}));
  const auto T = [](ElementId x) { return HeckeElement::basis(x); };

  CHECK(H.c_basis_element(e, t.p) == T(e));
  CHECK(H.c_basis_element(s1, t.p) == T(s1) + T(e));
  HeckeElement all;
  for (ElementId x : g.all()) all += T(x);
  CHECK(H.c_basis_element(w0, t.p) == all);

  CHECK(H.b_basis_element(e, t.q) == T(e));
  for (Generator i = 0; i < 2; ++i) {
    const ElementId s = g.right_mult(e, i);
    CHECK(H.b_basis_element(s, t.q) == T(s) + T(e));
  }
  const LP one_plus_q{{0, 1}, {2, 1}};
  HeckeElement b_w0 = T(w0) + T(g.evaluate(w({1, 2}))) + T(g.evaluate(w({2, 1}))) + T(g.evaluate(w({2})));
  b_w0 += one_plus_q * T(s1);
  b_w0 += one_plus_q * T(e);
  CHECK(H.b_basis_element(w0, t.q) == b_w0);

  CHECK(H.express_in_c_basis(H.c_basis_element(w0, t.p), t.p) == std::map<ElementId, LP>{{w0, 1}});
  CHECK(H.express_in_c_basis(T(e), t.p) == std::map<ElementId, LP>{{e, 1}});
  CHECK(H.express_in_c_basis(b_w0, t.p) == std::map<ElementId, LP>{{w0, 1}, {s1, q}});
  for (ElementId x : g.all()) CHECK(H.verify_basis_theorem(x, t));
}

TEST_CASE("formatting") {
  const WeylGroup g(build_system("A2"));
  const HeckeAlgebra H(g);
  const DecompTables t = full_tables(g, WordPolicy::lex_min());
  const ElementId s1 = g.evaluate(w({1}));
  CHECK(H.format(H.c_basis_element(s1, t.p), 'T') == "T[1] + T[]");
  CHECK(H.format(H.express_in_c_basis(H.b_basis_element(g.longest(), t.q), t.p), 'C') == "C[1,2,1] + q*C[1]");
  CHECK(H.format(HeckeElement::basis(g.identity()), 'T') == "T[]");
  CHECK(H.format(LP{{0, 1}, {2, 1}} * HeckeElement::basis(s1), 'T') == "(1 + q)*T[1]");
  CHECK(H.format(HeckeElement(), 'T') == "0");
}

TEST_CASE("relations and basis theorem in A3, B2, B3, G2") {
  for (const char* name : {"A3", "B2", "B3", "G2"}) {
    CAPTURE(name);
    const WeylGroup g(build_system(name));
    const DecompTables t = full_tables(g, WordPolicy::lex_min());
    const auto rel = check_hecke_relations(g, t);
    CHECK_MESSAGE(rel.passed, rel.detail);
    const auto thm = check_basis_theorem(g, t);
    CHECK_MESSAGE(thm.passed, thm.detail);
  }
}
