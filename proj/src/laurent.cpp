#include "kldecomp/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "kldecomp/errors.hpp"

namespace kldecomp {

namespace {

using Coefficient = LaurentPolynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Laurent coefficient overflow in addition");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("Laurent coefficient overflow in multiplication");
  return r;
}

Coefficient checked_neg(Coefficient a) {
  if (a == std::numeric_limits<Coefficient>::min()) throw OverflowError("Laurent coefficient overflow in negation");
  return -a;
}

int checked_exponent(long long e) {
  if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min())
    throw OverflowError("Laurent exponent out of range");
  return static_cast<int>(e);
}

}  // namespace

const char* variable_name(Variable v) { return v == Variable::t ? "t" : "q"; }

LaurentPolynomial::LaurentPolynomial(Coefficient c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<int, Coefficient>> terms)
    : LaurentPolynomial(from_terms(std::vector<std::pair<int, Coefficient>>(terms))) {}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, Coefficient c) {
  LaurentPolynomial p;
  if (c != 0) p.terms_.push_back({exponent, c});
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<std::pair<int, Coefficient>> terms) {
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first < b.first; });
  LaurentPolynomial p;
  for (auto [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == e) {
      p.terms_.back().coefficient = checked_add(p.terms_.back().coefficient, c);
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({e, c});
    }
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_dense(const std::vector<Coefficient>& c, int lowest_exponent) {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p.terms_.push_back({checked_exponent(lowest_exponent + static_cast<long long>(i)), c[i]});
  return p;
}

Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coefficient : 0;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw ContractViolation("min_exponent of the zero polynomial");
  return terms_.front().exponent;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw ContractViolation("max_exponent of the zero polynomial");
  return terms_.back().exponent;
}

Coefficient LaurentPolynomial::value_at_one() const {
  Coefficient s = 0;
  for (const auto& t : terms_) s = checked_add(s, t.coefficient);
  return s;
}

bool LaurentPolynomial::has_negative_exponents() const {
  return !terms_.empty() && terms_.front().exponent < 0;
}

bool LaurentPolynomial::has_odd_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exponent % 2 != 0; });
}

bool LaurentPolynomial::has_negative_coefficients() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coefficient < 0; });
}

bool LaurentPolynomial::is_palindromic_about(int center) const {
  for (const auto& t : terms_)
    if (coefficient(2 * center - t.exponent) != t.coefficient) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = checked_neg(t.coefficient);
  return r;
}

void LaurentPolynomial::add_scaled(const LaurentPolynomial& r, Coefficient c, int k) {
  if (c == 0 || r.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + r.terms_.size());
  auto a = terms_.begin();
  auto b = r.terms_.begin();
  while (a != terms_.end() || b != r.terms_.end()) {
    if (b == r.terms_.end() || (a != terms_.end() && a->exponent < b->exponent + k)) {
      merged.push_back(*a++);
      continue;
    }
    const int e = checked_exponent(static_cast<long long>(b->exponent) + k);
    Coefficient v = checked_mul(b->coefficient, c);
    if (a != terms_.end() && a->exponent == e) v = checked_add(v, (a++)->coefficient);
    if (v != 0) merged.push_back({e, v});
    ++b;
  }
  terms_ = std::move(merged);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& r) {
  add_scaled(r, 1, 0);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& r) {
  if (&r == this) {
    terms_.clear();
    return *this;
  }
  add_scaled(r, -1, 0);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& r) {
  *this = *this * r;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms().size() == 1) {
    LaurentPolynomial r;
    r.add_scaled(a, b.terms()[0].coefficient, b.terms()[0].exponent);
    return r;
  }
  if (a.terms().size() == 1) {
    LaurentPolynomial r;
    r.add_scaled(b, a.terms()[0].coefficient, a.terms()[0].exponent);
    return r;
  }
  const long long lo = static_cast<long long>(a.min_exponent()) + b.min_exponent();
  const long long hi = static_cast<long long>(a.max_exponent()) + b.max_exponent();
  std::vector<Coefficient> dense(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      auto& slot = dense[static_cast<std::size_t>(static_cast<long long>(x.exponent) + y.exponent - lo)];
      slot = checked_add(slot, checked_mul(x.coefficient, y.coefficient));
    }
  return LaurentPolynomial::from_dense(dense, checked_exponent(lo));
}

std::string LaurentPolynomial::to_string(Variable var) const {
  if (terms_.empty()) return "0";
  const char* x = variable_name(var);
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Coefficient c = t.coefficient;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    // Magnitude printed via unsigned to survive INT64_MIN.
    const auto mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (t.exponent == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << x;
    if (t.exponent != 1) out << '^' << t.exponent;
  }
  return out.str();
}

LaurentPolynomial shift(const LaurentPolynomial& p, int k) {
  LaurentPolynomial r;
  r.add_scaled(p, 1, k);
  return r;
}

LaurentPolynomial truncate_U(const LaurentPolynomial& p) {
  std::vector<std::pair<int, Coefficient>> kept;
  for (const auto& t : p.terms())
    if (t.exponent >= 0) kept.emplace_back(t.exponent, t.coefficient);
  return LaurentPolynomial::from_terms(std::move(kept));
}

LaurentPolynomial truncate_U_beta(const LaurentPolynomial& p, int beta) {
  if (beta < 0) throw ContractViolation("truncate_U_beta: beta must be non-negative, got " + std::to_string(beta));
  if (p.has_negative_exponents())
    throw ContractViolation("truncate_U_beta: input has negative exponents: " + p.to_string());
  std::vector<std::pair<int, Coefficient>> kept;
  for (const auto& t : p.terms())
    if (t.exponent >= beta) kept.emplace_back(t.exponent, t.coefficient);
  return LaurentPolynomial::from_terms(std::move(kept));
}

LaurentPolynomial symmetrize_S(const LaurentPolynomial& p) {
  if (p.has_negative_exponents())
    throw ContractViolation("symmetrize_S: input has negative exponents: " + p.to_string());
  std::vector<std::pair<int, Coefficient>> terms;
  for (const auto& t : p.terms()) {
    terms.emplace_back(t.exponent, t.coefficient);
    if (t.exponent > 0) terms.emplace_back(-t.exponent, t.coefficient);
  }
  return LaurentPolynomial::from_terms(std::move(terms));
}

LaurentPolynomial substitute_q(const LaurentPolynomial& p_in_q) {
  std::vector<std::pair<int, Coefficient>> terms;
  for (const auto& t : p_in_q.terms()) terms.emplace_back(checked_exponent(2LL * t.exponent), t.coefficient);
  return LaurentPolynomial::from_terms(std::move(terms));
}

LaurentPolynomial evaluate_at_sqrt_q(const LaurentPolynomial& p_in_t) {
  std::vector<std::pair<int, Coefficient>> terms;
  for (const auto& t : p_in_t.terms()) {
    if (t.exponent % 2 != 0)
      throw ConsistencyError("odd t-exponent in " + p_in_t.to_string() + "; cannot express in q");
    terms.emplace_back(t.exponent / 2, t.coefficient);
  }
  return LaurentPolynomial::from_terms(std::move(terms));
}

LaurentPolynomial one_plus_x_power(int n) {
  LaurentPolynomial r(1);
  const LaurentPolynomial base{{0, 1}, {1, 1}};
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

}  // namespace kldecomp
