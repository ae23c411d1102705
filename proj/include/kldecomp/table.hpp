#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kldecomp/coxeter.hpp"
#include "kldecomp/laurent.hpp"

namespace kldecomp {

enum class TableKind { Q, Ftilde, Dtilde, Htilde, S, P };

inline constexpr TableKind kAllKinds[] = {TableKind::Q,      TableKind::Ftilde, TableKind::Dtilde,
                                          TableKind::Htilde, TableKind::S,      TableKind::P};

std::string_view kind_name(TableKind kind);
std::optional<TableKind> parse_kind(std::string_view name);
/// Q, S and P are polynomials in q; the tilde tables are in t.
Variable kind_variable(TableKind kind);

/// Polynomials indexed by pairs (w, v) with v <= w.
///
/// One row per w holding its nonzero entries sorted by v. Rows are written
/// whole; writing distinct rows from different threads is safe.
class PolynomialTable {
 public:
  using Row = std::vector<std::pair<ElementId, LaurentPolynomial>>;

  PolynomialTable() = default;
  PolynomialTable(TableKind kind, std::size_t group_size)
      : kind_(kind), rows_(group_size), complete_(group_size, 0) {}

  TableKind kind() const noexcept { return kind_; }
  Variable variable() const noexcept { return kind_variable(kind_); }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Zero when absent.
  const LaurentPolynomial& at(ElementId w, ElementId v) const;
  const Row& row(ElementId w) const { return rows_[w.value]; }
  bool row_complete(ElementId w) const { return complete_[w.value] != 0; }

  /// Stores a row; zero entries are dropped and the rest sorted by v.
  void set_row(ElementId w, Row row);

  bool operator==(const PolynomialTable& o) const { return kind_ == o.kind_ && rows_ == o.rows_; }

 private:
  TableKind kind_ = TableKind::Q;
  std::vector<Row> rows_;
  std::vector<char> complete_;
};

}  // namespace kldecomp
