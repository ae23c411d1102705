#pragma once

#include "kldecomp/coxeter.hpp"
#include "kldecomp/table.hpp"

namespace kldecomp {

/// Kazhdan-Lusztig polynomials P_{w,u}(q) by the classical descent recursion.
///
/// Shares nothing with the decomposition engine beyond the group and
/// polynomial types, so agreement between the two is a real check. Not
/// cached and not tuned for speed.
PolynomialTable classical_kl_table(const WeylGroup& group);

}  // namespace kldecomp
