#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kldecomp {

/// Which indeterminate a polynomial's exponents refer to. The library works
/// in t throughout, with q = t^2; q is a display and IO convention.
enum class Variable { t, q };

const char* variable_name(Variable v);

/// Sparse Laurent polynomial with integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so equality
/// is structural. Coefficient arithmetic is checked: leaving the range of
/// std::int64_t raises OverflowError instead of wrapping.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  struct Term {
    int exponent;
    Coefficient coefficient;
    bool operator==(const Term&) const = default;
  };

  LaurentPolynomial() = default;
  /// The constant polynomial c.
  LaurentPolynomial(Coefficient c);  // NOLINT(google-explicit-constructor)
  /// From (exponent, coefficient) pairs; repeated exponents are summed.
  LaurentPolynomial(std::initializer_list<std::pair<int, Coefficient>> terms);

  static LaurentPolynomial monomial(int exponent, Coefficient c = 1);
  static LaurentPolynomial from_terms(std::vector<std::pair<int, Coefficient>> terms);
  /// Dense coefficients c[0], c[1], ... starting at `lowest_exponent`.
  static LaurentPolynomial from_dense(const std::vector<Coefficient>& c, int lowest_exponent = 0);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;
  /// Requires a nonzero polynomial.
  int min_exponent() const;
  int max_exponent() const;
  Coefficient value_at_one() const;
  bool has_negative_exponents() const;
  bool has_odd_exponents() const;
  bool has_negative_coefficients() const;
  /// Coefficient at center+k equals coefficient at center-k for every k.
  bool is_palindromic_about(int center) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& r);
  LaurentPolynomial& operator-=(const LaurentPolynomial& r);
  LaurentPolynomial& operator*=(const LaurentPolynomial& r);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Adds c * t^k * r into *this without materializing the product.
  void add_scaled(const LaurentPolynomial& r, Coefficient c = 1, int k = 0);

  bool operator==(const LaurentPolynomial&) const = default;

  /// Renders as "1 + 3*q + q^2" / "t^-2 + 1 + t^2"; "0" for zero.
  std::string to_string(Variable var = Variable::t) const;

 private:
  std::vector<Term> terms_;
};

/// Multiplication by t^k.
LaurentPolynomial shift(const LaurentPolynomial& p, int k);

/// Keeps exactly the terms of non-negative exponent.
LaurentPolynomial truncate_U(const LaurentPolynomial& p);

/// Keeps exactly the terms of exponent >= beta. Defined on ordinary
/// polynomials only: rejects negative beta and negative exponents.
LaurentPolynomial truncate_U_beta(const LaurentPolynomial& p, int beta);

/// a_0 + sum_{k>0} a_k (t^k + t^-k) from a_0 + sum_{k>0} a_k t^k. Rejects
/// input with negative exponents.
LaurentPolynomial symmetrize_S(const LaurentPolynomial& p);

/// q -> t^2: doubles every exponent.
LaurentPolynomial substitute_q(const LaurentPolynomial& p_in_q);

/// t -> sqrt(q): halves every exponent. Odd exponents mean odd-degree
/// cohomology was present and raise ConsistencyError.
LaurentPolynomial evaluate_at_sqrt_q(const LaurentPolynomial& p_in_t);

/// (1 + x)^n in whatever variable the caller means.
LaurentPolynomial one_plus_x_power(int n);

}  // namespace kldecomp
