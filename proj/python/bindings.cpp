// Python bindings. Elements cross the boundary as tuples of 1-based
// generator indices (their lex-min words); polynomials as {exponent: coeff}
// dicts in the variable of their table (q for Q, S, P; t for the tilde kinds).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <vector>

#include "kldecomp/checks.hpp"
#include "kldecomp/decomp.hpp"
#include "kldecomp/deodhar.hpp"
#include "kldecomp/errors.hpp"
#include "kldecomp/hecke.hpp"
#include "kldecomp/kl_oracle.hpp"
#include "kldecomp/table_io.hpp"

namespace py = pybind11;
using namespace kldecomp;

namespace {

using Word = std::vector<int>;

ReducedWord to_word(const Word& w) {
  ReducedWord r;
  for (int g : w) {
    if (g < 1) throw WordError("generator indices are 1-based", r.size() + 1);
    r.letters.push_back(g - 1);
  }
  return r;
}

py::tuple from_word(const ReducedWord& w) {
  py::tuple out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] + 1;
  return out;
}

py::dict to_pydict(const LaurentPolynomial& p) {
  py::dict d;
  for (const auto& t : p.terms()) d[py::int_(t.exponent)] = py::int_(t.coefficient);
  return d;
}

TableKind to_kind(const std::string& name) {
  auto k = parse_kind(name);
  if (!k) throw Error("unknown table kind '" + name + "' (expected Q, Ftilde, Dtilde, Htilde, S or P)");
  return *k;
}

WordPolicy to_policy(const WeylGroup& g, const std::string& policy, const std::vector<Word>& overrides) {
  WordPolicy p = policy == "lexmax" ? WordPolicy::lex_max() : WordPolicy::lex_min();
  if (policy != "lexmin" && policy != "lexmax") throw Error("word policy must be 'lexmin' or 'lexmax'");
  for (const Word& w : overrides) p = p.with_override(g, to_word(w));
  return p;
}

// One Weyl group together with the tables computed for it under a fixed
// word policy.
class System {
 public:
  System(const std::string& cartan, const std::string& policy, const std::vector<Word>& overrides, unsigned threads)
      : group_(std::make_unique<WeylGroup>(build_system(cartan))),
        policy_(to_policy(*group_, policy, overrides)),
        threads_(threads) {}

  std::string cartan() const { return group_->system().cartan().name(); }
  std::string policy() const { return policy_.name(); }
  std::size_t size() const { return group_->size(); }
  int rank() const { return group_->rank(); }
  int max_length() const { return group_->max_length(); }

  py::list elements() const {
    py::list out;
    for (ElementId w : group_->all()) out.append(from_word(group_->lex_min_word(w)));
    return out;
  }

  ElementId id(const Word& w) const { return group_->evaluate(to_word(w)); }
  int length(const Word& w) const { return group_->length(id(w)); }
  py::tuple reduce(const Word& w) const { return from_word(group_->lex_min_word(id(w))); }
  py::tuple word_for(const Word& w) const { return from_word(policy_.word_for(*group_, id(w))); }
  bool bruhat_leq(const Word& v, const Word& w) const { return group_->bruhat_leq(id(v), id(w)); }
  py::list lower_interval(const Word& w) const {
    py::list out;
    for (ElementId v : group_->lower_interval(id(w))) out.append(from_word(group_->lex_min_word(v)));
    return out;
  }

  const DecompTables& tables() const {
    if (!tables_) {
      py::gil_scoped_release release;
      tables_ = full_tables(*group_, policy_, {threads_});
    }
    return *tables_;
  }

  py::dict entry(const std::string& kind, const Word& w, const Word& v) const {
    return to_pydict(tables().table(to_kind(kind)).at(id(w), id(v)));
  }

  py::dict row(const std::string& kind, const Word& w) const {
    py::dict out;
    for (const auto& [v, p] : tables().table(to_kind(kind)).row(id(w)))
      out[from_word(group_->lex_min_word(v))] = to_pydict(p);
    return out;
  }

  py::dict q_row(const Word& word, const std::string& engine) const {
    if (engine != "brute" && engine != "dp") throw Error("engine must be 'brute' or 'dp'");
    const ReducedWord rw = to_word(word);
    group_->evaluate_reduced(rw);
    const QRow r = engine == "brute" ? q_row_bruteforce(*group_, rw) : q_row_dp(*group_, rw);
    py::dict out;
    for (const auto& [v, p] : r.entries) out[from_word(group_->lex_min_word(v))] = to_pydict(p);
    return out;
  }

  std::string basis(const Word& element, const std::string& which, const std::string& express_in) const {
    const ElementId w = group_->evaluate_reduced(to_word(element));
    const HeckeAlgebra hecke(*group_);
    if (which != "B" && which != "C") throw Error("basis must be 'B' or 'C'");
    if (express_in != "T" && express_in != "C") throw Error("express_in must be 'T' or 'C'");
    const auto& t = tables();
    const HeckeElement h = which == "B" ? hecke.b_basis_element(w, t.q) : hecke.c_basis_element(w, t.p);
    return express_in == "T" ? hecke.format(h, 'T') : hecke.format(hecke.express_in_c_basis(h, t.p), 'C');
  }

  std::string to_json(const std::vector<std::string>& kinds) const {
    std::vector<TableKind> ks;
    for (const auto& k : kinds) ks.push_back(to_kind(k));
    if (ks.empty()) ks.assign(std::begin(kAllKinds), std::end(kAllKinds));
    std::ostringstream out;
    write_table_json(out, *group_, tables(), ks);
    return out.str();
  }

  std::vector<py::tuple> verify(const std::vector<std::string>& checks) const {
    auto wants = [&](const char* name) {
      for (const auto& c : checks)
        if (c == "all" || c == name) return true;
      return false;
    };
    const auto& t = tables();
    std::vector<CheckResult> results;
    {
      py::gil_scoped_release release;
      if (wants("mass")) {
        results.push_back(check_mass(*group_, t));
        results.push_back(check_engines(*group_, policy_, 10));
      }
      if (wants("oracle")) results.push_back(check_oracle(*group_, t, classical_kl_table(*group_)));
      if (wants("recon")) {
        results.push_back(check_reconstruction(*group_, t));
        results.push_back(check_matrix_identity(*group_, t));
        results.push_back(check_symmetry(*group_, t));
      }
      if (wants("hecke")) {
        results.push_back(check_hecke_relations(*group_, t));
        results.push_back(check_basis_theorem(*group_, t));
      }
      if (wants("wordindep")) {
        const WordPolicy other = policy_.name() == "lexmax" ? WordPolicy::lex_min() : WordPolicy::lex_max();
        results.push_back(check_word_independence(*group_, t, full_tables(*group_, other, {threads_})));
      }
    }
    std::vector<py::tuple> out;
    for (const auto& r : results) out.push_back(py::make_tuple(r.name, r.passed, r.cases, r.detail));
    return out;
  }

  py::dict classical_kl() const {
    const PolynomialTable p = classical_kl_table(*group_);
    py::dict out;
    for (ElementId w : group_->all())
      for (const auto& [v, poly] : p.row(w))
        out[py::make_tuple(from_word(group_->lex_min_word(w)), from_word(group_->lex_min_word(v)))] = to_pydict(poly);
    return out;
  }

 private:
  std::unique_ptr<WeylGroup> group_;
  WordPolicy policy_;
  unsigned threads_;
  mutable std::optional<DecompTables> tables_;
};

}  // namespace

PYBIND11_MODULE(_kldecomp, m) {
  m.doc() = "Deodhar polynomials, decomposition multiplicities and Kazhdan-Lusztig polynomials of Weyl groups";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<CartanError>(m, "CartanError", base.ptr());
  py::register_exception<WordError>(m, "WordError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<CacheCorruption>(m, "CacheCorruption", base.ptr());

  py::class_<System>(m, "System")
      .def(py::init<const std::string&, const std::string&, const std::vector<Word>&, unsigned>(), py::arg("cartan"),
           py::arg("policy") = "lexmin", py::arg("overrides") = std::vector<Word>{}, py::arg("threads") = 0u)
      .def_property_readonly("cartan", &System::cartan)
      .def_property_readonly("policy", &System::policy)
      .def_property_readonly("rank", &System::rank)
      .def_property_readonly("max_length", &System::max_length)
      .def("__len__", &System::size)
      .def("elements", &System::elements, "All elements as lex-min words, by length.")
      .def("length", &System::length, py::arg("word"))
      .def("reduce", &System::reduce, py::arg("word"), "Lex-min reduced word of the element a word evaluates to.")
      .def("word_for", &System::word_for, py::arg("word"), "Word the policy resolves this element along.")
      .def("bruhat_leq", &System::bruhat_leq, py::arg("v"), py::arg("w"))
      .def("lower_interval", &System::lower_interval, py::arg("w"))
      .def("entry", &System::entry, py::arg("kind"), py::arg("w"), py::arg("v"))
      .def("row", &System::row, py::arg("kind"), py::arg("w"))
      .def("q_row", &System::q_row, py::arg("word"), py::arg("engine") = "dp",
           "Deodhar polynomials for the given reduced word (not the policy's).")
      .def("basis", &System::basis, py::arg("element"), py::arg("basis") = "B", py::arg("express_in") = "T")
      .def("to_json", &System::to_json, py::arg("kinds") = std::vector<std::string>{})
      .def("verify", &System::verify, py::arg("checks") = std::vector<std::string>{"all"},
           "List of (name, passed, cases, detail).")
      .def("classical_kl", &System::classical_kl, "P from the classical recursion, keyed by (w, v).");

  m.attr("__version__") = std::string(kToolVersion);
}
