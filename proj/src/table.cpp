#include "kldecomp/table.hpp"

#include <algorithm>

namespace kldecomp {

std::string_view kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::Q: return "Q";
    case TableKind::Ftilde: return "Ftilde";
    case TableKind::Dtilde: return "Dtilde";
    case TableKind::Htilde: return "Htilde";
    case TableKind::S: return "S";
    case TableKind::P: return "P";
  }
  return "?";
}

std::optional<TableKind> parse_kind(std::string_view name) {
  for (TableKind k : kAllKinds)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

Variable kind_variable(TableKind kind) {
  switch (kind) {
    case TableKind::Q:
    case TableKind::S:
    case TableKind::P: return Variable::q;
    default: return Variable::t;
  }
}

const LaurentPolynomial& PolynomialTable::at(ElementId w, ElementId v) const {
  static const LaurentPolynomial zero;
  const Row& r = rows_[w.value];
  auto it = std::lower_bound(r.begin(), r.end(), v, [](const auto& e, ElementId x) { return e.first < x; });
  return (it != r.end() && it->first == v) ? it->second : zero;
}

void PolynomialTable::set_row(ElementId w, Row row) {
  std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  rows_[w.value] = std::move(row);
  complete_[w.value] = 1;
}

}  // namespace kldecomp
