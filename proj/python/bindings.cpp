#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wmodal/interpolation.hpp"
#include "wmodal/prover.hpp"
#include "wmodal/semantics.hpp"
#include "wmodal/suites.hpp"

namespace py = pybind11;
using namespace wmodal;

namespace {

LogicId logic_of(const std::string& name) {
  auto l = LogicId::from_name(name);
  if (!l) throw py::value_error("unknown logic '" + name + "'");
  return *l;
}

ProverOptions budget(std::uint64_t max_nodes, double timeout_secs) {
  ProverOptions o;
  o.max_nodes = max_nodes;
  o.timeout = std::chrono::milliseconds(
      static_cast<std::int64_t>(timeout_secs * 1000));
  return o;
}

// A derivation together with the logic it was found in.
struct Proof {
  LogicId logic;
  Derivation derivation;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Decision procedures for constructive and classical non-normal "
            "modal logics";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);
  py::register_exception<NotATheorem>(m, "NotATheorem", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("logics", [] {
    std::vector<std::string> out;
    for (LogicId l : LogicId::all()) out.push_back(l.name());
    return out;
  });

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](Formula f) { return render(f); })
      .def("__repr__",
           [](Formula f) { return "Formula('" + render(f) + "')"; })
      .def("pretty", [](Formula f) { return render(f, {.pretty = true}); })
      .def("__eq__", [](Formula a, Formula b) { return a == b; })
      .def("__hash__", [](Formula f) { return f.hash(); })
      .def_property_readonly("size", &Formula::size)
      .def_property_readonly("modal_depth", &Formula::modal_depth)
      .def_property_readonly("atoms", [](Formula f) {
        std::vector<std::uint32_t> out;
        for (Formula v : vars(f))
          if (v.is(Connective::Atom)) out.push_back(v.atom_index());
        return out;
      });

  m.def("parse", [](const std::string& text) { return parse(text); },
        py::arg("text"));

  py::class_<Proof>(m, "Proof")
      .def_property_readonly("logic",
                             [](const Proof& p) { return p.logic.name(); })
      .def_property_readonly("sequent", [](const Proof& p) {
        return render(p.derivation.conclusion);
      })
      .def_property_readonly("height",
                             [](const Proof& p) { return p.derivation.height; })
      .def_property_readonly(
          "nodes", [](const Proof& p) { return p.derivation.node_count(); })
      .def("check", [](const Proof& p) { return check(p.logic, p.derivation); })
      .def("text", [](const Proof& p) { return proof_to_text(p.derivation); })
      .def("json_lines", [](const Proof& p) {
        return proof_to_json_lines(p.logic, p.derivation);
      });

  m.def("proof_from_json_lines", [](const std::string& text) {
    auto parsed = proof_from_json_lines(text);
    return Proof{parsed.logic, std::move(parsed.derivation)};
  });

  m.def(
      "prove",
      [](const std::string& logic, const std::string& sequent,
         std::uint64_t max_nodes, double timeout_secs) -> std::optional<Proof> {
        LogicId l = logic_of(logic);
        auto r = prove(l, parse_sequent(sequent, l.mode()),
                       budget(max_nodes, timeout_secs));
        if (!r.proved()) return std::nullopt;
        return Proof{l, std::move(*r.derivation)};
      },
      py::arg("logic"), py::arg("sequent"), py::arg("max_nodes") = 1'000'000,
      py::arg("timeout_secs") = 30.0,
      "Derivation of 'A, B |- C' (or of a bare formula), or None.");

  m.def(
      "decide",
      [](const std::string& logic, const std::string& formula,
         std::uint64_t max_nodes, double timeout_secs) {
        return decide(logic_of(logic), parse(formula),
                      budget(max_nodes, timeout_secs)) == Verdict::Theorem;
      },
      py::arg("logic"), py::arg("formula"), py::arg("max_nodes") = 1'000'000,
      py::arg("timeout_secs") = 30.0, "True iff the formula is a theorem.");

  m.def(
      "interpolate",
      [](const std::string& logic, const std::string& a, const std::string& b,
         bool simplify) {
        LogicId l = logic_of(logic);
        SymbolTable symbols;
        symbols.reserve_explicit(a + " " + b);
        Formula fa = parse(a, symbols), fb = parse(b, symbols);
        InterpolationOptions o;
        o.simplify = simplify;
        auto r = craig(l, fa, fb, o);
        return py::make_tuple(r.interpolant,
                              Proof{l, std::move(r.left_certificate)},
                              Proof{l, std::move(r.right_certificate)});
      },
      py::arg("logic"), py::arg("a"), py::arg("b"), py::arg("simplify") = false,
      "(interpolant, left certificate, right certificate) for a theorem A -> B "
      "of a W-logic.");

  py::class_<Model>(m, "Model")
      .def_property_readonly("worlds", [](const Model& mo) { return mo.worlds; })
      .def_property_readonly("constructive", [](const Model& mo) {
        return mo.kind == Mode::Constructive;
      })
      .def("forces",
           [](const Model& mo, std::size_t w, const std::string& f) {
             return forces(mo, w, parse(f));
           })
      .def("valid",
           [](const Model& mo, const std::string& f) {
             return valid_in_model(mo, parse(f));
           })
      .def("is_model_for",
           [](const Model& mo, const std::string& logic) {
             return check_conditions(mo, logic_of(logic)).is_model();
           })
      .def("conditions",
           [](const Model& mo, const std::string& logic) {
             py::dict out;
             for (const auto& s : check_conditions(mo, logic_of(logic)).conditions)
               out[py::str(std::string(name(s.condition)))] = s.holds;
             return out;
           })
      .def("json_lines", [](const Model& mo) { return model_to_json_lines(mo); })
      .def("text", [](const Model& mo) { return model_to_text(mo); })
      .def("__eq__", [](const Model& a, const Model& b) { return a == b; });

  m.def("model_from_json_lines", &model_from_json_lines);

  m.def(
      "random_model",
      [](const std::string& logic, std::size_t max_worlds, std::uint64_t seed) {
        return random_model(logic_of(logic), max_worlds, seed);
      },
      py::arg("logic"), py::arg("max_worlds"), py::arg("seed"));

  m.def(
      "countermodel",
      [](const std::string& logic, const std::string& formula,
         std::size_t max_worlds) -> std::optional<py::tuple> {
        auto cm = enumerate_countermodel(logic_of(logic), parse(formula),
                                         max_worlds);
        if (!cm) return std::nullopt;
        return py::make_tuple(cm->model, cm->world);
      },
      py::arg("logic"), py::arg("formula"), py::arg("max_worlds") = 4,
      "(model, refuting world) or None.");

  m.def("selftest", [] {
    for (const auto& c : axiom_matrix())
      if (!c.ok()) return false;
    for (const auto& c : negative_suite())
      if (!c.ok()) return false;
    for (const auto& t : axiom_derivations())
      if (!check(t.logic, t.derivation)) return false;
    return true;
  });
}
