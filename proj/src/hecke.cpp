#include "kldecomp/hecke.hpp"

#include "kldecomp/errors.hpp"

namespace kldecomp {

HeckeElement HeckeElement::basis(ElementId w, LaurentPolynomial c) {
  HeckeElement h;
  h.add(w, c);
  return h;
}

const LaurentPolynomial& HeckeElement::coefficient(ElementId w) const {
  static const LaurentPolynomial zero;
  auto it = terms_.find(w);
  return it == terms_.end() ? zero : it->second;
}

void HeckeElement::add(ElementId w, const LaurentPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentPolynomial& c, const HeckeElement& h) {
  HeckeElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : h.terms_) r.add(w, c * x);
  return r;
}

HeckeElement HeckeAlgebra::t_mult_generator(Generator i, const HeckeElement& h) const {
  if (i < 0 || i >= group_.rank()) throw ContractViolation("generator " + std::to_string(i + 1) + " out of range");
  static const LaurentPolynomial q_minus_one{{0, -1}, {2, 1}};
  static const LaurentPolynomial q = LaurentPolynomial::monomial(2);
  HeckeElement r;
  for (const auto& [w, c] : h.terms()) {
    const ElementId sw = group_.left_mult(w, i);
    if (group_.length(sw) > group_.length(w)) {
      r.add(sw, c);
    } else {
      r.add(w, q_minus_one * c);
      r.add(sw, q * c);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::t_mult_basis(ElementId w, const HeckeElement& h) const {
  HeckeElement r = h;
  const auto& word = group_.lex_min_word(w).letters;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = t_mult_generator(*it, r);
  return r;
}

HeckeElement HeckeAlgebra::mult(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement r;
  for (const auto& [w, c] : a.terms()) r += c * t_mult_basis(w, b);
  return r;
}

HeckeElement HeckeAlgebra::c_basis_element(ElementId w, const PolynomialTable& p) const {
  if (!p.row_complete(w)) throw ContractViolation("c_basis_element: P row of " + group_.label(w) + " missing");
  HeckeElement h;
  for (const auto& [v, poly] : p.row(w)) h.add(v, substitute_q(poly));
  if (h.coefficient(w) != LaurentPolynomial(1))
    throw ContractViolation("c_basis_element: P_{w,w} != 1 for w=" + group_.label(w));
  return h;
}

HeckeElement HeckeAlgebra::b_basis_element(ElementId w, const PolynomialTable& q) const {
  if (!q.row_complete(w)) throw ContractViolation("b_basis_element: Q row of " + group_.label(w) + " missing");
  HeckeElement h;
  for (const auto& [v, poly] : q.row(w)) h.add(v, substitute_q(poly));
  if (h.coefficient(w) != LaurentPolynomial(1))
    throw ContractViolation("b_basis_element: Q_{w,w} != 1 for w=" + group_.label(w));
  return h;
}

std::map<ElementId, LaurentPolynomial> HeckeAlgebra::express_in_c_basis(const HeckeElement& h,
                                                                        const PolynomialTable& p) const {
  std::map<ElementId, LaurentPolynomial> out;
  HeckeElement rest = h;
  while (!rest.is_zero()) {
    // Largest id has maximal length; no other C_v in the remainder reaches it.
    const auto& [top, c] = *rest.terms().rbegin();
    const ElementId v = top;
    const LaurentPolynomial coeff = c;
    out.emplace(v, coeff);
    rest -= coeff * c_basis_element(v, p);
  }
  return out;
}

bool HeckeAlgebra::verify_basis_theorem(ElementId w, const DecompTables& tables) const {
  const auto coeffs = express_in_c_basis(b_basis_element(w, tables.q), tables.p);
  std::map<ElementId, LaurentPolynomial> expected;
  for (const auto& [v, s] : tables.s.row(w)) expected.emplace(v, substitute_q(s));
  return coeffs == expected && tables.s.at(w, w) == LaurentPolynomial(1);
}

std::string HeckeAlgebra::format(const std::map<ElementId, LaurentPolynomial>& coeffs, char basis_letter) const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const auto& [w, c] = *it;
    const Variable var = c.has_odd_exponents() ? Variable::t : Variable::q;
    const LaurentPolynomial shown = var == Variable::q ? evaluate_at_sqrt_q(c) : c;
    std::string term;
    bool negative = false;
    if (shown == LaurentPolynomial(1)) {
    } else if (shown == LaurentPolynomial(-1)) {
      negative = true;
    } else if (shown.terms().size() == 1) {
      const auto t = shown.terms()[0];
      negative = t.coefficient < 0;
      term = (negative ? -shown : shown).to_string(var) + "*";
    } else {
      term = "(" + shown.to_string(var) + ")*";
    }
    term += std::string(1, basis_letter) + "[" + format_word(group_.lex_min_word(w)) + "]";
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

std::string HeckeAlgebra::format(const HeckeElement& h, char basis_letter) const {
  return format(h.terms(), basis_letter);
}

}  // namespace kldecomp
