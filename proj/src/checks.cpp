#include "kldecomp/checks.hpp"

#include "kldecomp/deodhar.hpp"
#include "kldecomp/errors.hpp"
#include "kldecomp/hecke.hpp"

namespace kldecomp {

namespace {

std::string pair_text(const WeylGroup& group, const DecompTables& tables, ElementId w, ElementId u) {
  return "(w=" + group.label(w) + ", u=" + group.label(u) + ", word " + format_word(tables.words[w.value]) + ")";
}

void fail(CheckResult& r, std::string detail) {
  if (r.passed) r.detail = std::move(detail);
  r.passed = false;
}

}  // namespace

CheckResult check_mass(const WeylGroup& group, const DecompTables& tables) {
  CheckResult r("mass");
  for (ElementId w : group.all()) {
    ++r.cases;
    const int lw = group.length(w);
    LaurentPolynomial mass;
    LaurentPolynomial::Coefficient masks = 0;
    for (const auto& [v, q] : tables.q.row(w)) {
      mass.add_scaled(q, 1, group.length(v));
      masks += q.value_at_one();
      if (q.has_negative_coefficients()) fail(r, pair_text(group, tables, w, v) + ": negative coefficient in Q = " + q.to_string(Variable::q));
      if (!group.bruhat_leq(v, w)) fail(r, pair_text(group, tables, w, v) + ": Q nonzero but v is not below w");
    }
    const LaurentPolynomial expected = one_plus_x_power(lw);
    if (mass != expected)
      fail(r, "w=" + group.label(w) + ": sum q^l(v) Q = " + mass.to_string(Variable::q) + ", expected " +
                  expected.to_string(Variable::q));
    if (masks != (LaurentPolynomial::Coefficient{1} << lw))
      fail(r, "w=" + group.label(w) + ": Q(1) sums to " + std::to_string(masks) + ", expected 2^" + std::to_string(lw));
    if (tables.q.at(w, w) != LaurentPolynomial(1)) fail(r, "w=" + group.label(w) + ": Q_{w,w} != 1");
    for (ElementId v : group.lower_interval(w))
      if (tables.q.at(w, v).is_zero()) fail(r, pair_text(group, tables, w, v) + ": Q vanishes on a Bruhat pair");
  }
  return r;
}

CheckResult check_engines(const WeylGroup& group, const WordPolicy& policy, int max_length) {
  CheckResult r("engines");
  for (ElementId w : group.all()) {
    if (group.length(w) > max_length) continue;
    ++r.cases;
    const ReducedWord word = policy.word_for(group, w);
    const QRow brute = q_row_bruteforce(group, word);
    const QRow dp = q_row_dp(group, word);
    if (brute.entries != dp.entries) {
      for (const auto& [v, p] : brute.entries) {
        auto it = dp.entries.find(v);
        const LaurentPolynomial got = it == dp.entries.end() ? LaurentPolynomial() : it->second;
        if (got != p) {
          fail(r, "w=" + group.label(w) + ", v=" + group.label(v) + ", word " + format_word(word) + ": brute force " +
                      p.to_string(Variable::q) + ", dynamic program " + got.to_string(Variable::q));
          break;
        }
      }
      fail(r, "w=" + group.label(w) + ": engines disagree on support");
    }
  }
  return r;
}

CheckResult check_oracle(const WeylGroup& group, const DecompTables& tables, const PolynomialTable& oracle) {
  CheckResult r("oracle");
  for (ElementId w : group.all()) {
    for (ElementId u : group.lower_interval(w)) {
      ++r.cases;
      const auto& got = tables.p.at(w, u);
      const auto& want = oracle.at(w, u);
      if (got != want)
        fail(r, pair_text(group, tables, w, u) + ": expected P = " + want.to_string(Variable::q) + ", got " +
                    got.to_string(Variable::q));
    }
    if (tables.p.row(w).size() != oracle.row(w).size())
      fail(r, "w=" + group.label(w) + ": P row has " + std::to_string(tables.p.row(w).size()) +
                  " entries, classical recursion has " + std::to_string(oracle.row(w).size()));
  }
  return r;
}

CheckResult check_reconstruction(const WeylGroup& group, const DecompTables& tables) {
  CheckResult r("recon");
  for (ElementId w : group.all()) {
    ++r.cases;
    const auto report = verify_reconstruction(group, tables, w);
    if (!report.ok) fail(r, report.failures.front() + " [word " + format_word(tables.words[w.value]) + "]");
  }
  return r;
}

CheckResult check_matrix_identity(const WeylGroup& group, const DecompTables& tables) {
  CheckResult r("matrix");
  for (ElementId w : group.all())
    for (ElementId u : group.lower_interval(w)) {
      ++r.cases;
      LaurentPolynomial sum;
      for (const auto& [v, s] : tables.s.row(w))
        if (group.bruhat_leq(u, v)) sum += s * tables.p.at(v, u);
      if (sum != tables.q.at(w, u))
        fail(r, pair_text(group, tables, w, u) + ": expected Q = " + tables.q.at(w, u).to_string(Variable::q) +
                    ", sum S*P = " + sum.to_string(Variable::q));
    }
  return r;
}

CheckResult check_symmetry(const WeylGroup& group, const DecompTables& tables) {
  CheckResult r("symmetry");
  for (ElementId w : group.all()) {
    const int lw = group.length(w);
    if (tables.s.at(w, w) != LaurentPolynomial(1)) fail(r, "w=" + group.label(w) + ": S_{w,w} != 1");
    if (tables.p.at(w, w) != LaurentPolynomial(1)) fail(r, "w=" + group.label(w) + ": P_{w,w} != 1");
    for (const auto& [u, s] : tables.s.row(w))
      if (!group.bruhat_leq(u, w)) fail(r, pair_text(group, tables, w, u) + ": S nonzero off the Bruhat order");
    for (ElementId u : group.lower_interval(w)) {
      ++r.cases;
      const int k = lw - group.length(u);
      const auto& d = tables.d_tilde.at(w, u);
      const auto& h = tables.h_tilde.at(w, u);
      const std::string where = pair_text(group, tables, w, u);
      if (!d.is_palindromic_about(k)) fail(r, where + ": D-tilde = " + d.to_string() + " not palindromic about " + std::to_string(k));
      if (d.has_odd_exponents() || h.has_odd_exponents()) fail(r, where + ": odd exponent in D-tilde or H-tilde");
      if (!d.is_zero() && (d.min_exponent() < 0 || d.max_exponent() > 2 * k))
        fail(r, where + ": D-tilde = " + d.to_string() + " outside [0, " + std::to_string(2 * k) + "]");
      if (d.has_negative_coefficients() || h.has_negative_coefficients())
        fail(r, where + ": negative coefficient in D-tilde or H-tilde");
      if (h.coefficient(0) != 1) fail(r, where + ": H-tilde = " + h.to_string() + " has constant term != 1");
      if (u != w && !h.is_zero() && h.max_exponent() > k - 1)
        fail(r, where + ": H-tilde = " + h.to_string() + " exceeds degree " + std::to_string(k - 1));
      const auto& p = tables.p.at(w, u);
      if (u != w && !p.is_zero() && 2 * p.max_exponent() > k - 1)
        fail(r, where + ": deg P = " + std::to_string(p.max_exponent()) + " exceeds (l(w)-l(u)-1)/2");
    }
  }
  return r;
}

CheckResult check_hecke_relations(const WeylGroup& group, const DecompTables& tables) {
  CheckResult r("hecke-relations");
  const HeckeAlgebra hecke(group);
  const auto& sys = group.system();
  const HeckeElement te = HeckeElement::basis(group.identity());
  for (Generator i = 0; i < group.rank(); ++i) {
    ++r.cases;
    const ElementId s = group.right_mult(group.identity(), i);
    const HeckeElement ts = HeckeElement::basis(s);
    HeckeElement expected = LaurentPolynomial{{0, -1}, {2, 1}} * ts;
    expected += LaurentPolynomial::monomial(2) * te;
    if (hecke.mult(ts, ts) != expected) fail(r, "quadratic relation fails for generator " + std::to_string(i + 1));
    for (Generator j = i + 1; j < group.rank(); ++j) {
      ++r.cases;
      const int m = sys.cartan().coxeter_entry(i, j);
      HeckeElement left = te;
      HeckeElement right = te;
      for (int k = 0; k < m; ++k) {
        left = hecke.t_mult_generator(k % 2 == 0 ? i : j, left);
        right = hecke.t_mult_generator(k % 2 == 0 ? j : i, right);
      }
      if (left != right)
        fail(r, "braid relation of order " + std::to_string(m) + " fails for generators " + std::to_string(i + 1) +
                    "," + std::to_string(j + 1));
    }
  }
  for (ElementId w : group.all()) {
    ++r.cases;
    for (const HeckeElement& h : {hecke.c_basis_element(w, tables.p), hecke.b_basis_element(w, tables.q)}) {
      if (h.coefficient(w) != LaurentPolynomial(1)) fail(r, "w=" + group.label(w) + ": top coefficient != 1");
      for (const auto& [v, c] : h.terms())
        if (!group.bruhat_leq(v, w)) fail(r, "w=" + group.label(w) + ": basis element supported outside [e, w]");
    }
  }
  return r;
}

CheckResult check_basis_theorem(const WeylGroup& group, const DecompTables& tables) {
  CheckResult r("basis-theorem");
  const HeckeAlgebra hecke(group);
  for (ElementId w : group.all()) {
    ++r.cases;
    if (!hecke.verify_basis_theorem(w, tables)) {
      const auto got = hecke.express_in_c_basis(hecke.b_basis_element(w, tables.q), tables.p);
      std::map<ElementId, LaurentPolynomial> want;
      for (const auto& [v, s] : tables.s.row(w)) want.emplace(v, substitute_q(s));
      fail(r, "w=" + group.label(w) + ", word " + format_word(tables.words[w.value]) + ": B_w = " + hecke.format(got, 'C') +
                  ", expected " + hecke.format(want, 'C'));
    }
  }
  return r;
}

CheckResult check_word_independence(const WeylGroup& group, const DecompTables& a, const DecompTables& b) {
  CheckResult r("wordindep");
  std::size_t differing_words = 0;
  for (ElementId w : group.all()) {
    ++r.cases;
    if (a.words[w.value] != b.words[w.value]) ++differing_words;
    if (a.p.row(w) != b.p.row(w)) {
      for (ElementId u : group.lower_interval(w))
        if (a.p.at(w, u) != b.p.at(w, u)) {
          fail(r, "(w=" + group.label(w) + ", u=" + group.label(u) + "): P = " + a.p.at(w, u).to_string(Variable::q) +
                      " under word " + format_word(a.words[w.value]) + " but " + b.p.at(w, u).to_string(Variable::q) +
                      " under word " + format_word(b.words[w.value]));
          break;
        }
    }
  }
  if (r.passed)
    r.detail = std::to_string(differing_words) + " elements resolved along different words; S tables " +
               (a.s == b.s ? "agree" : "differ");
  return r;
}

}  // namespace kldecomp
