#include "kldecomp/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "kldecomp/errors.hpp"

namespace kldecomp {

namespace {

std::string pair_label(const WeylGroup& group, ElementId w, ElementId u) {
  return "(w=" + group.label(w) + ", u=" + group.label(u) + ")";
}

}  // namespace

DecompRow::DecompRow(const WeylGroup& group, ElementId w_)
    : w(w_),
      interval(group.lower_interval(w_)),
      d_tilde(interval.size()),
      h_tilde(interval.size()),
      filled_from(interval.size()) {}

std::optional<std::size_t> DecompRow::position(ElementId v) const {
  auto it = std::lower_bound(interval.begin(), interval.end(), v);
  if (it == interval.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - interval.begin());
}

void DecompRow::record(std::size_t k, LaurentPolynomial d, LaurentPolynomial h) {
  if (k >= interval.size()) throw ContractViolation("DecompRow::record: index out of range");
  if (d_tilde[k]) throw ContractViolation("DecompRow::record: cell recorded twice");
  if (!d.is_zero() && interval[k] != w) nonzero.push_back(k);
  d_tilde[k] = std::move(d);
  h_tilde[k] = std::move(h);
  while (filled_from > 0 && d_tilde[filled_from - 1]) --filled_from;
}

LaurentPolynomial r_tilde(const WeylGroup& group, const DecompRow& partial, ElementId u,
                          const LaurentPolynomial& f_tilde_wu, const PolynomialTable& h_tilde) {
  const ElementId w = partial.w;
  if (!partial.position(u))
    throw ContractViolation("r_tilde: " + pair_label(group, w, u) + " is not a Bruhat pair");
  LaurentPolynomial r = f_tilde_wu;
  const int lu = group.length(u);
  const int lw = group.length(w);
  // Ids ascend with length, so the elements longer than u form a suffix.
  const auto above = std::partition_point(partial.interval.begin(), partial.interval.end(),
                                          [&](ElementId v) { return group.length(v) <= lu; });
  const auto first = static_cast<std::size_t>(above - partial.interval.begin());
  if (first < partial.filled_from) {
    const ElementId v = partial.interval[partial.filled_from - 1];
    throw ContractViolation("r_tilde " + pair_label(group, w, u) + ": D-tilde at v=" + group.label(v) +
                            " not computed yet");
  }
  for (std::size_t k : partial.nonzero) {
    const ElementId v = partial.interval[k];
    const int lv = group.length(v);
    if (lv <= lu || lv >= lw || !group.bruhat_leq(u, v)) continue;
    if (!h_tilde.row_complete(v))
      throw ContractViolation("r_tilde " + pair_label(group, w, u) + ": H-tilde row of v=" + group.label(v) +
                              " not computed yet");
    const LaurentPolynomial& h = h_tilde.at(v, u);
    for (const auto& term : partial.d_tilde[k]->terms()) r.add_scaled(h, -term.coefficient, term.exponent);
  }
  return r;
}

CellDecomposition decompose_cell(const WeylGroup& group, ElementId w, ElementId u, const LaurentPolynomial& r) {
  if (u == w) return {LaurentPolynomial(1), LaurentPolynomial(1)};
  const int k = group.length(w) - group.length(u);
  auto fail = [&](const std::string& why) {
    return ConsistencyError("decomposition " + pair_label(group, w, u) + ": " + why + " (R-tilde = " + r.to_string() + ")");
  };
  if (r.has_negative_exponents()) throw fail("R-tilde has negative exponents");

  CellDecomposition cell;
  cell.d_tilde = shift(symmetrize_S(shift(truncate_U_beta(r, k), -k)), k);
  cell.h_tilde = r - cell.d_tilde;

  if (cell.d_tilde.has_negative_coefficients()) throw fail("negative multiplicity in D-tilde " + cell.d_tilde.to_string());
  if (cell.h_tilde.has_negative_coefficients()) throw fail("negative coefficient in H-tilde " + cell.h_tilde.to_string());
  if (cell.d_tilde.has_odd_exponents() || cell.h_tilde.has_odd_exponents()) throw fail("odd-degree contribution");
  if (!cell.h_tilde.is_zero() && (cell.h_tilde.min_exponent() < 0 || cell.h_tilde.max_exponent() >= k))
    throw fail("H-tilde " + cell.h_tilde.to_string() + " violates the degree bound " + std::to_string(k - 1));
  return cell;
}

DecompRow decompose_row(const WeylGroup& group, ElementId w, const std::map<ElementId, LaurentPolynomial>& f_tilde_row,
                        const PolynomialTable& h_tilde) {
  DecompRow row(group, w);
  for (const auto& [v, f] : f_tilde_row)
    if (!row.position(v) && !f.is_zero())
      throw ContractViolation("fiber row of " + group.label(w) + " has an entry at " + group.label(v) +
                              ", which is not below it");
  // Interval is ascending in length, so walking it backwards visits u by
  // decreasing length, which is what r_tilde needs.
  static const LaurentPolynomial zero;
  for (std::size_t k = row.interval.size(); k-- > 0;) {
    const ElementId u = row.interval[k];
    auto it = f_tilde_row.find(u);
    const LaurentPolynomial& f = it == f_tilde_row.end() ? zero : it->second;
    CellDecomposition cell = u == w ? decompose_cell(group, w, u, f)
                                    : decompose_cell(group, w, u, r_tilde(group, row, u, f, h_tilde));
    row.record(k, std::move(cell.d_tilde), std::move(cell.h_tilde));
  }
  return row;
}

const PolynomialTable& DecompTables::table(TableKind kind) const {
  switch (kind) {
    case TableKind::Q: return q;
    case TableKind::Ftilde: return f_tilde;
    case TableKind::Dtilde: return d_tilde;
    case TableKind::Htilde: return h_tilde;
    case TableKind::S: return s;
    case TableKind::P: return p;
  }
  throw ContractViolation("unknown table kind");
}

PolynomialTable& DecompTables::table(TableKind kind) {
  return const_cast<PolynomialTable&>(std::as_const(*this).table(kind));
}

DecompTables full_tables(const WeylGroup& group, const FiberSupplier& supplier, FillOptions options) {
  const std::size_t n = group.size();
  DecompTables t;
  t.cartan = group.system().cartan().name();
  t.policy = supplier.name();
  t.words.resize(n);
  for (TableKind k : kAllKinds) t.table(k) = PolynomialTable(k, n);

  auto fill_row = [&](ElementId w) {
    const ReducedWord word = supplier.word(w);
    try {
      const auto f_row = supplier.fiber_row(w);
      DecompRow row = decompose_row(group, w, f_row, t.h_tilde);
      PolynomialTable::Row q, f, d, h, s, p;
      for (const auto& [v, poly] : f_row) {
        q.emplace_back(v, evaluate_at_sqrt_q(poly));
        f.emplace_back(v, poly);
      }
      for (std::size_t k = 0; k < row.interval.size(); ++k) {
        const ElementId v = row.interval[k];
        s.emplace_back(v, evaluate_at_sqrt_q(*row.d_tilde[k]));
        p.emplace_back(v, evaluate_at_sqrt_q(*row.h_tilde[k]));
        d.emplace_back(v, std::move(*row.d_tilde[k]));
        h.emplace_back(v, std::move(*row.h_tilde[k]));
      }
      t.words[w.value] = word;
      t.q.set_row(w, std::move(q));
      t.f_tilde.set_row(w, std::move(f));
      t.d_tilde.set_row(w, std::move(d));
      t.s.set_row(w, std::move(s));
      t.p.set_row(w, std::move(p));
      // Published last: other threads only read H-tilde rows of shorter
      // elements, which finished in an earlier level.
      t.h_tilde.set_row(w, std::move(h));
    } catch (const ConsistencyError& e) {
      throw ConsistencyError(std::string(e.what()) + " [" + t.cartan + ", word " + format_word(word) + "]");
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  for (const auto& level : group.elements_by_length()) {
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(level.size()));
    if (workers <= 1) {
      for (ElementId w : level) fill_row(w);
      continue;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < workers; ++i)
        pool.emplace_back([&] {
          for (std::size_t k = next++; k < level.size(); k = next++) {
            try {
              fill_row(level[k]);
            } catch (...) {
              std::lock_guard lock(error_mutex);
              if (!error) error = std::current_exception();
              next = level.size();
            }
          }
        });
    }
    if (error) std::rethrow_exception(error);
  }
  return t;
}

DecompTables full_tables(const WeylGroup& group, const WordPolicy& policy, FillOptions options) {
  return full_tables(group, BottSamelsonSupplier(group, policy), options);
}

ReconstructionReport verify_reconstruction(const WeylGroup& group, const DecompTables& tables, ElementId w) {
  ReconstructionReport report;
  for (ElementId u : group.lower_interval(w)) {
    LaurentPolynomial sum;
    for (const auto& [v, d] : tables.d_tilde.row(w))
      if (group.bruhat_leq(u, v)) sum += d * tables.h_tilde.at(v, u);
    const LaurentPolynomial& f = tables.f_tilde.at(w, u);
    if (sum != f) {
      report.ok = false;
      report.failures.push_back(pair_label(group, w, u) + ": F-tilde = " + f.to_string() + " but sum D-tilde*H-tilde = " +
                                sum.to_string());
    }
  }
  return report;
}

}  // namespace kldecomp
