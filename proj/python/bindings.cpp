// Python bindings for the lsalg core: the Algebra type plus the main
// analyses, with reports converted to plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lsalg/io.hpp"
#include "lsalg/monoid.hpp"
#include "lsalg/morphism.hpp"
#include "lsalg/synthesis.hpp"
#include "lsalg/words.hpp"

namespace py = pybind11;
using namespace lsalg;

namespace {

py::dict op_dict(const MonoidOp& op) {
  py::dict out;
  out["unit"] = op.unit;
  out["table"] = op.table;
  return out;
}

py::dict classification_dict(const MonoidClassification& cls) {
  py::dict out;
  out["commutative"] = cls.commutative;
  out["left_cancellative"] = cls.left_cancellative;
  out["right_cancellative"] = cls.right_cancellative;
  out["group"] = cls.group;
  return out;
}

py::dict family_dict(const Algebra& alg, const FamilyReport& report) {
  py::dict out;
  out["commutative"] = report.commutative;
  out["unambiguous"] = report.unambiguous;
  py::list symbols;
  for (Sym s = 0; s < alg.symbol_count(); ++s) {
    const SymbolFlags& flags = report.symbols[static_cast<std::size_t>(s)];
    py::dict entry;
    entry["symbol"] = alg.symbol_name(s);
    entry["injective"] = flags.injective;
    entry["surjective"] = flags.surjective;
    entry["bijective"] = flags.bijective;
    symbols.append(entry);
  }
  out["symbols"] = symbols;
  return out;
}

py::dict synthesis_dict(const Algebra& alg, const SynthesisResult& result) {
  py::dict out;
  out["regular"] = result.is_regular();
  if (result.is_regular()) {
    const RegularOutcome& outcome = result.outcome();
    out["operation"] = op_dict(outcome.op);
    out["reflection"] = outcome.reflection.tables;
    py::list monoid;
    for (const SelfMap& u : outcome.monoid.elements()) monoid.append(u.image);
    out["monoid"] = monoid;
    out["classification"] =
        classification_dict(classify_monoid(alg, outcome.op, outcome.reflection));
  } else {
    const Obstruction& obstruction = result.obstruction();
    out["reason"] = obstruction.reason == NotRegularReason::NotMinimal
                        ? "not-minimal"
                        : "phi-not-injective";
    if (obstruction.unreached) out["unreached"] = *obstruction.unreached;
    if (obstruction.collision)
      out["collision"] = py::make_tuple(obstruction.collision->first.image,
                                        obstruction.collision->second.image);
  }
  return out;
}

BoundarySet make_boundary_set(const std::vector<Word>& words,
                              const std::vector<std::string>& alphabet) {
  return BoundarySet{words, alphabet};
}

}  // namespace

PYBIND11_MODULE(lsalg, m) {
  m.doc() = "finite pointed semiautomata: compatible monoid synthesis and friends";

  py::register_exception<CapExceeded>(m, "CapExceededError");
  py::register_exception<NotMinimal>(m, "NotMinimalError");
  py::register_exception<BoundExceeded>(m, "BoundExceededError");
  py::register_exception<UnknownSymbol>(m, "UnknownSymbolError");
  py::register_exception<ParseError>(m, "ParseFileError");

  py::class_<Algebra>(m, "Algebra")
      .def(py::init<int, State, std::vector<std::string>,
                    std::vector<std::vector<State>>>(),
           py::arg("n"), py::arg("base"), py::arg("alphabet"), py::arg("transitions"))
      .def_property_readonly("n", &Algebra::size)
      .def_property_readonly("base", &Algebra::base)
      .def_property_readonly("alphabet", &Algebra::alphabet)
      .def_property_readonly("transitions", &Algebra::transitions)
      .def("step", &Algebra::step, py::arg("symbol"), py::arg("state"))
      .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; })
      .def("__repr__", [](const Algebra& a) {
        return "Algebra(n=" + std::to_string(a.size()) +
               ", base=" + std::to_string(a.base()) +
               ", symbols=" + std::to_string(a.symbol_count()) + ")";
      });

  m.def("parse", [](const std::string& text) { return parse_algebra(text); },
        py::arg("text"), "Parse the algebra text format.");
  m.def("format", [](const Algebra& alg) { return format_algebra(alg); },
        py::arg("algebra"), "Canonical text form (round-trips through parse).");
  m.def("export_dot",
        [](const Algebra& alg) { return export_dot(alg); },
        py::arg("algebra"), "Semiautomaton digraph in DOT format.");

  m.def("is_minimal", &is_minimal, py::arg("algebra"));
  m.def(
      "invariant_closure",
      [](const Algebra& alg, const std::vector<State>& seeds) {
        StateSet set(alg.size());
        for (State x : seeds) set.insert(x);
        return invariant_closure(alg, set).states();
      },
      py::arg("algebra"), py::arg("seeds"),
      "Least invariant superset of the seed states, ascending.");
  m.def(
      "minimal_core",
      [](const Algebra& alg) {
        CoreResult core = minimal_core(alg);
        return py::make_tuple(core.algebra, core.index_map);
      },
      py::arg("algebra"), "The reachable restriction plus the old-to-new index map.");
  m.def(
      "family_report",
      [](const Algebra& alg) { return family_dict(alg, family_report(alg)); },
      py::arg("algebra"));

  m.def(
      "generate_monoid",
      [](const Algebra& alg, std::size_t cap) {
        auto gens = generator_maps(alg);
        TransformationMonoid monoid = generate_monoid(gens, cap);
        py::list out;
        for (const SelfMap& u : monoid.elements()) out.append(u.image);
        return out;
      },
      py::arg("algebra"), py::arg("cap") = kDefaultCap,
      "Image arrays of the generated transformation monoid, in BFS order.");

  m.def(
      "synthesize",
      [](const Algebra& alg, std::size_t cap) {
        return synthesis_dict(alg, synthesize(alg, cap));
      },
      py::arg("algebra"), py::arg("cap") = kDefaultCap,
      "Decide and construct the compatible monoid operation.");

  m.def(
      "synthesize_from_reflection",
      [](const Algebra& alg, const std::vector<std::vector<State>>& reflection) {
        return op_dict(synthesize_from_reflection(alg, Reflection{reflection}));
      },
      py::arg("algebra"), py::arg("reflection"),
      "Second construction route, through allowable maps.");

  m.def(
      "verify_compatible",
      [](const Algebra& alg, State unit, const std::vector<std::vector<State>>& table) {
        CompatibilityCheck check = verify_compatible(alg, MonoidOp{unit, table});
        return py::make_tuple(check.ok, check.violations.size());
      },
      py::arg("algebra"), py::arg("unit"), py::arg("table"),
      "Returns (ok, violation_count).");

  m.def(
      "brute_force_operation_search",
      [](const Algebra& alg, int bound) {
        py::list out;
        for (const MonoidOp& op : brute_force_operation_search(alg, bound))
          out.append(op_dict(op));
        return out;
      },
      py::arg("algebra"), py::arg("bound") = kDefaultOracleBound,
      "All unit-law tables passing associativity and the translation law.");

  m.def(
      "equivalence_report",
      [](const Algebra& alg, std::size_t cap) {
        EquivalenceReport report = equivalence_report(alg, cap);
        py::dict out;
        out["operation_exists"] = report.operation_exists;
        out["phi_injective"] = report.phi_injective;
        out["centraliser_phi_surjective"] = report.centraliser_phi_surjective;
        out["mirrored_generators"] = report.mirrored_generators;
        out["phi_matching_bijection"] = report.phi_matching_bijection;
        out["consistent"] = report.consistent;
        return out;
      },
      py::arg("algebra"), py::arg("cap") = kDefaultCap);

  m.def(
      "find_morphism",
      [](const Algebra& src, const Algebra& dst) -> py::object {
        MorphismSearch search = find_morphism(src, dst);
        if (!search.found()) return py::none();
        return py::cast(search.morphism->map);
      },
      py::arg("src"), py::arg("dst"),
      "The unique structure map src -> dst, or None.");

  m.def(
      "quotient",
      [](const Algebra& alg, const std::vector<int>& classes) {
        QuotientResult result = quotient(alg, Partition{classes});
        py::dict out;
        out["compatible"] = result.ok();
        if (result.ok()) {
          out["algebra"] = *result.algebra;
          out["projection"] = result.projection->map;
        } else {
          out["witness"] = py::make_tuple(result.witness->s, result.witness->x1,
                                          result.witness->x2);
        }
        return out;
      },
      py::arg("algebra"), py::arg("classes"));

  m.def(
      "fold",
      [](const std::vector<std::string>& word, const Algebra& alg) {
        return fold(word, alg);
      },
      py::arg("word"), py::arg("algebra"),
      "Evaluate a word (last symbol acts first, matching prepend semantics).");

  m.def(
      "validate_boundary_set",
      [](const std::vector<Word>& words, const std::vector<std::string>& alphabet) {
        return validate_boundary_set(make_boundary_set(words, alphabet)).ok;
      },
      py::arg("words"), py::arg("alphabet"));

  m.def(
      "boundary_algebra",
      [](const std::vector<Word>& words, const std::vector<std::string>& alphabet) {
        BoundaryAlgebra ba = boundary_algebra(make_boundary_set(words, alphabet));
        py::dict out;
        out["algebra"] = ba.algebra;
        out["labels"] = ba.labels;
        out["frontier"] = ba.frontier;
        return out;
      },
      py::arg("words"), py::arg("alphabet"));

  m.def(
      "boundary_regular_by_theorem",
      [](const std::vector<Word>& words, const std::vector<std::string>& alphabet) {
        return boundary_regular_by_theorem(make_boundary_set(words, alphabet));
      },
      py::arg("words"), py::arg("alphabet"));

  m.def(
      "project",
      [](const Word& word, const std::vector<Word>& words,
         const std::vector<std::string>& alphabet) {
        ProjectedState p = project(word, make_boundary_set(words, alphabet));
        py::dict out;
        out["state"] = p.state;
        out["label"] = p.label;
        out["frontier"] = p.frontier;
        return out;
      },
      py::arg("word"), py::arg("words"), py::arg("alphabet"));
}
