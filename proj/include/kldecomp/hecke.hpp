#pragma once

#include <map>
#include <string>

#include "kldecomp/coxeter.hpp"
#include "kldecomp/decomp.hpp"
#include "kldecomp/laurent.hpp"
#include "kldecomp/table.hpp"

namespace kldecomp {

/// Finite sum sum_w c_w T_w with coefficients in Z[t, t^-1], q = t^2.
/// Zero coefficients are never stored.
class HeckeElement {
 public:
  using Terms = std::map<ElementId, LaurentPolynomial>;

  HeckeElement() = default;
  static HeckeElement basis(ElementId w, LaurentPolynomial c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const LaurentPolynomial& coefficient(ElementId w) const;

  void add(ElementId w, const LaurentPolynomial& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  /// Scalar multiple.
  friend HeckeElement operator*(const LaurentPolynomial& c, const HeckeElement& h);

  bool operator==(const HeckeElement&) const = default;

 private:
  Terms terms_;
};

/// Hecke algebra of a Weyl group in the standard T-basis:
///   T_s T_w = T_{sw}                      if l(sw) > l(w)
///   T_s T_w = (q-1) T_w + q T_{sw}         if l(sw) < l(w)
///
/// The Kazhdan-Lusztig elements here are C_w = T_w + sum_{v<w} P_{w,v} T_v
/// exactly as written, without the q^{-l(w)/2} normalization or sign twist
/// of the usual C'_w; the basis theorem for B_w holds in this convention.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const WeylGroup& group) : group_(group) {}

  const WeylGroup& group() const noexcept { return group_; }

  /// Left multiplication by T_{s_i}.
  HeckeElement t_mult_generator(Generator i, const HeckeElement& h) const;
  /// T_w h, factoring T_w along the lex-min word of w.
  HeckeElement t_mult_basis(ElementId w, const HeckeElement& h) const;
  HeckeElement mult(const HeckeElement& a, const HeckeElement& b) const;

  /// C_w from a P table (in q) complete on the lower interval of w.
  HeckeElement c_basis_element(ElementId w, const PolynomialTable& p) const;
  /// B_w = T_w + sum_{v<w} Q_{w,v} T_v from a Q table (in q).
  HeckeElement b_basis_element(ElementId w, const PolynomialTable& q) const;

  /// Coefficients c_v with h = sum_v c_v C_v, by peeling off the longest
  /// support element. Exact because C is unitriangular over T.
  std::map<ElementId, LaurentPolynomial> express_in_c_basis(const HeckeElement& h, const PolynomialTable& p) const;

  /// express_in_c_basis(B_w) == {v : S_{w,v}} with S_{w,w} = 1.
  bool verify_basis_theorem(ElementId w, const DecompTables& tables) const;

  /// "T[1,2,1] + (1 + q)*T[1] + T[]", longest terms first. Coefficients are
  /// shown in q when every exponent is even.
  std::string format(const HeckeElement& h, char basis_letter = 'T') const;
  std::string format(const std::map<ElementId, LaurentPolynomial>& coeffs, char basis_letter) const;

 private:
  const WeylGroup& group_;
};

}  // namespace kldecomp
