#pragma once

#include <string>

#include "kldecomp/coxeter.hpp"
#include "kldecomp/decomp.hpp"
#include "kldecomp/table.hpp"
#include "kldecomp/word_policy.hpp"

namespace kldecomp {

/// Outcome of one property suite. `detail` carries the first
/// counterexample when the check fails.
struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
};

/// sum_v q^{l(v)} Q_{w,v} = (1+q)^{l(w)}, Q_{w,v} != 0 iff v <= w,
/// sum_v Q_{w,v}(1) = 2^{l(w)}, Q_{w,w} = 1, non-negative coefficients.
CheckResult check_mass(const WeylGroup& group, const DecompTables& tables);

/// Dynamic program equals brute force for every w with l(w) <= max_length.
CheckResult check_engines(const WeylGroup& group, const WordPolicy& policy, int max_length = 10);

/// P table equals the classical recursion entry for entry.
CheckResult check_oracle(const WeylGroup& group, const DecompTables& tables, const PolynomialTable& oracle);

/// F-tilde = sum D-tilde * H-tilde for every pair.
CheckResult check_reconstruction(const WeylGroup& group, const DecompTables& tables);

/// Q_{w,u} = sum_{u<=v<=w} S_{w,v} P_{v,u} in Z[q], straight from the tables.
CheckResult check_matrix_identity(const WeylGroup& group, const DecompTables& tables);

/// D-tilde palindromic about l(w)-l(u) with even support in [0, 2(l(w)-l(u))];
/// H-tilde even with constant term 1 and degree <= l(w)-l(u)-1 for u < w;
/// S_{w,w} = P_{w,w} = 1; S vanishes off the Bruhat order.
CheckResult check_symmetry(const WeylGroup& group, const DecompTables& tables);

/// Quadratic and braid relations of the T-basis, plus unitriangularity of
/// the C and B bases.
CheckResult check_hecke_relations(const WeylGroup& group, const DecompTables& tables);

/// B_w = C_w + sum_{v<w} S_{w,v} C_v for every w.
CheckResult check_basis_theorem(const WeylGroup& group, const DecompTables& tables);

/// Identical P tables; `detail` notes whether the S tables differ.
CheckResult check_word_independence(const WeylGroup& group, const DecompTables& a, const DecompTables& b);

}  // namespace kldecomp
