#include "kldecomp/kl_oracle.hpp"

#include <vector>

#include "kldecomp/errors.hpp"

namespace kldecomp {

// For a left descent s of w, with v = s w and c = [s x < x]:
//
//   P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
//             - sum_{z < v, s z < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
//
// where mu(z,v) is the coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v}.
PolynomialTable classical_kl_table(const WeylGroup& group) {
  const std::size_t n = group.size();
  // Dense rows: p[w][x], zero unless x <= w.
  std::vector<std::vector<LaurentPolynomial>> p(n, std::vector<LaurentPolynomial>(n));
  // mu_list[v] = {(z, mu(z,v))} over z < v with mu != 0.
  std::vector<std::vector<std::pair<ElementId, LaurentPolynomial::Coefficient>>> mu_list(n);

  p[0][0] = 1;
  PolynomialTable table(TableKind::P, n);
  table.set_row(group.identity(), {{group.identity(), LaurentPolynomial(1)}});

  for (ElementId w : group.all()) {
    if (group.length(w) == 0) continue;
    Generator s = 0;
    while (!group.descends_left(w, s)) ++s;
    const ElementId v = group.left_mult(w, s);
    const auto& pv = p[v.value];

    for (ElementId x : group.all()) {
      if (group.length(x) > group.length(w) || !group.bruhat_leq(x, w)) continue;
      const ElementId sx = group.left_mult(x, s);
      const int c = group.length(sx) < group.length(x) ? 1 : 0;
      LaurentPolynomial r;
      r.add_scaled(pv[sx.value], 1, 1 - c);
      r.add_scaled(pv[x.value], 1, c);
      for (const auto& [z, mu] : mu_list[v.value]) {
        if (!group.descends_left(z, s)) continue;
        const int gap = group.length(w) - group.length(z);
        r.add_scaled(p[z.value][x.value], -mu, gap / 2);
      }
      p[w.value][x.value] = std::move(r);
    }

    PolynomialTable::Row row;
    for (ElementId x : group.all()) {
      const auto& poly = p[w.value][x.value];
      if (poly.is_zero()) continue;
      row.emplace_back(x, poly);
      const int gap = group.length(w) - group.length(x);
      if (gap % 2 == 1) {
        const auto mu = poly.coefficient((gap - 1) / 2);
        if (mu != 0) mu_list[w.value].emplace_back(x, mu);
      }
    }
    table.set_row(w, std::move(row));
  }
  return table;
}

}  // namespace kldecomp
