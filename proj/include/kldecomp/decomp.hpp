#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kldecomp/coxeter.hpp"
#include "kldecomp/deodhar.hpp"
#include "kldecomp/laurent.hpp"
#include "kldecomp/table.hpp"

namespace kldecomp {

/// Decomposition data for a single w, possibly partially filled.
///
/// Entries are aligned with `interval` (all v <= w, ascending id). A missing
/// D-tilde entry means "not computed yet"; a computed zero is stored as zero.
/// Write cells through record() so the bookkeeping below stays valid.
struct DecompRow {
  ElementId w;
  std::vector<ElementId> interval;
  std::vector<std::optional<LaurentPolynomial>> d_tilde;
  std::vector<std::optional<LaurentPolynomial>> h_tilde;
  /// Every index >= filled_from holds a D-tilde entry.
  std::size_t filled_from;
  /// Indices of nonzero D-tilde entries other than w itself.
  std::vector<std::size_t> nonzero;

  DecompRow(const WeylGroup& group, ElementId w);
  std::optional<std::size_t> position(ElementId v) const;
  void record(std::size_t k, LaurentPolynomial d, LaurentPolynomial h);
};

/// R-tilde_{w,u} = F-tilde_{w,u} - sum_{u<v<w} D-tilde_{w,v} H-tilde_{v,u}.
///
/// Needs D-tilde_{w,v} in `partial` for every u < v < w and completed rows
/// of `h_tilde` for those v; anything missing is an ordering bug and raises
/// ContractViolation.
LaurentPolynomial r_tilde(const WeylGroup& group, const DecompRow& partial, ElementId u,
                          const LaurentPolynomial& f_tilde_wu, const PolynomialTable& h_tilde);

struct CellDecomposition {
  LaurentPolynomial d_tilde;
  LaurentPolynomial h_tilde;
};

/// With k = l(w) - l(u):
///   D-tilde = t^k S t^-k U_k (R-tilde),   H-tilde = R-tilde - D-tilde.
/// For u = w both are 1. Raises ConsistencyError on negative coefficients,
/// odd exponents, or H-tilde of degree >= k.
CellDecomposition decompose_cell(const WeylGroup& group, ElementId w, ElementId u, const LaurentPolynomial& r_tilde);

/// Runs the recursion for one w, visiting u <= w by decreasing length.
DecompRow decompose_row(const WeylGroup& group, ElementId w, const std::map<ElementId, LaurentPolynomial>& f_tilde_row,
                        const PolynomialTable& h_tilde);

/// All tables for one group and one family of resolutions.
struct DecompTables {
  std::string cartan;
  std::string policy;
  std::vector<ReducedWord> words;
  PolynomialTable q;
  PolynomialTable f_tilde;
  PolynomialTable d_tilde;
  PolynomialTable h_tilde;
  PolynomialTable s;
  PolynomialTable p;

  const PolynomialTable& table(TableKind kind) const;
  PolynomialTable& table(TableKind kind);
};

struct FillOptions {
  /// Worker threads per length level; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Processes w by increasing length. Rows of equal length are independent
/// once all shorter rows exist, so each length level is filled in parallel
/// with a barrier between levels.
DecompTables full_tables(const WeylGroup& group, const FiberSupplier& supplier, FillOptions options = {});
DecompTables full_tables(const WeylGroup& group, const WordPolicy& policy, FillOptions options = {});

struct ReconstructionReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks F-tilde_{w,u} = sum_{u<=v<=w} D-tilde_{w,v} H-tilde_{v,u} for all u <= w.
ReconstructionReport verify_reconstruction(const WeylGroup& group, const DecompTables& tables, ElementId w);

}  // namespace kldecomp
