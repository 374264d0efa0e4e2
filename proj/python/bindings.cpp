#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modlp/algebra.hpp"
#include "modlp/completion.hpp"
#include "modlp/core.hpp"
#include "modlp/decompose.hpp"
#include "modlp/equivalence.hpp"
#include "modlp/parser.hpp"
#include "modlp/qbf.hpp"
#include "modlp/semantics.hpp"
#include "modlp/shift.hpp"

namespace py = pybind11;
using namespace modlp;

namespace {

// python-side modules each carry their own workspace; binary operations
// re-intern the right operand into the left workspace by name
dlp_function aligned(const dlp_function& left, const dlp_function& right) {
  return left.ws() == right.ws() ? right : transfer(right, left.ws());
}

std::vector<std::vector<std::string>> model_names(const model_set& ms) {
  std::vector<std::vector<std::string>> out;
  out.reserve(ms.size());
  for (const auto& m : ms.models()) out.push_back(sorted_names(*ms.ws(), m));
  return out;
}

atom_set atoms_by_name(const dlp_function& fn, const std::vector<std::string>& names) {
  atom_set s;
  for (const auto& n : names) {
    auto id = fn.ws()->find(n);
    if (!id || !fn.atoms().contains(*id))
      fail(errc::out_of_signature, "atom '" + n + "' is not in this module");
    s.insert(*id);
  }
  return s;
}

eq_method method_of(const std::string& name) {
  if (name == "direct") return eq_method::direct;
  if (name == "translate") return eq_method::translate;
  fail(errc::usage, "method must be 'direct' or 'translate'");
}

}  // namespace

PYBIND11_MODULE(_modlp, m) {
  m.doc() = "modular disjunctive logic programs under stable-model semantics";

  py::register_exception<error>(m, "ModlpError");

  py::class_<dlp_function>(m, "Module")
      .def_static(
          "parse", [](const std::string& text) { return parse_module(text, make_workspace()); },
          py::arg("text"))
      .def("render", [](const dlp_function& fn) { return render_module(fn); })
      .def("render",
           [](const dlp_function& fn, const std::string& name) {
             return render_module(fn, name);
           })
      .def_property_readonly(
          "input", [](const dlp_function& fn) { return sorted_names(fn.table(), fn.input()); })
      .def_property_readonly(
          "output",
          [](const dlp_function& fn) { return sorted_names(fn.table(), fn.output()); })
      .def_property_readonly(
          "hidden",
          [](const dlp_function& fn) { return sorted_names(fn.table(), fn.hidden()); })
      .def("stable_models",
           [](const dlp_function& fn, const std::string& engine, unsigned cap) {
             if (engine == "reduct") return model_names(stable_models(fn, cap));
             if (engine == "complf") return model_names(stable_models_via_completion(fn, cap));
             fail(errc::usage, "engine must be 'reduct' or 'complf'");
           },
           py::arg("engine") = "reduct", py::arg("cap") = k_enum_cap)
      .def("classical_models",
           [](const dlp_function& fn, unsigned cap) {
             return model_names(classical_models(fn, cap));
           },
           py::arg("cap") = k_enum_cap)
      .def("minimal_models",
           [](const dlp_function& fn, unsigned cap) {
             return model_names(minimal_models(fn, cap));
           },
           py::arg("cap") = k_minimal_cap)
      .def("is_tight", [](const dlp_function& fn) { return is_tight(fn); })
      .def("compose",
           [](const dlp_function& a, const dlp_function& b) { return compose(a, aligned(a, b)); })
      .def("join",
           [](const dlp_function& a, const dlp_function& b) { return join(a, aligned(a, b)); })
      .def("shift",
           [](const dlp_function& fn, py::object name_bodies) {
             if (name_bodies.is_none()) return general_shift(fn);
             return general_shift_named(fn, name_bodies.cast<unsigned>());
           },
           py::arg("name_bodies") = py::none())
      .def("reveal",
           [](const dlp_function& fn, const std::vector<std::string>& atoms) {
             return reveal(fn, atoms_by_name(fn, atoms));
           })
      .def("hide",
           [](const dlp_function& fn, const std::vector<std::string>& atoms) {
             return hide(fn, atoms_by_name(fn, atoms));
           })
      .def("splitting_sets",
           [](const dlp_function& fn) {
             std::vector<std::vector<std::string>> out;
             for (const auto& u : splitting_sets(fn)) out.push_back(sorted_names(fn.table(), u));
             return out;
           })
      .def("split",
           [](const dlp_function& fn, const std::vector<std::string>& atoms) {
             return split(fn, atoms_by_name(fn, atoms));
           })
      .def("decompose",
           [](const dlp_function& fn) {
             decomposition d = decompose(fn);
             std::vector<dlp_function> parts;
             for (auto& [block, part] : d.parts) parts.push_back(part);
             return py::make_tuple(d.constraint_module, parts);
           })
      .def("has_eva",
           [](const dlp_function& fn, unsigned cap) {
             eva_result r = has_eva(fn, cap);
             return py::make_tuple(
                 r.has_eva, r.counterexample
                                ? py::object(py::cast(sorted_names(fn.table(), *r.counterexample)))
                                : py::none());
           },
           py::arg("cap") = k_eva_cap)
      .def("__eq__",
           [](const dlp_function& a, const dlp_function& b) {
             return render_module(a) == render_module(b);
           })
      .def("__repr__", [](const dlp_function& fn) {
        return "<Module |I|=" + std::to_string(fn.input().size()) +
               " |O|=" + std::to_string(fn.output().size()) +
               " |H|=" + std::to_string(fn.hidden().size()) +
               " rules=" + std::to_string(fn.rules().size()) + ">";
      });

  m.def(
      "equivalent",
      [](const dlp_function& a, const dlp_function& b, const std::string& method,
         unsigned cap) {
        eq_result r = modularly_equivalent(a, aligned(a, b), method_of(method), cap);
        py::object witness = py::none();
        if (r.witness)
          witness = py::make_tuple(r.witness->first,
                                   sorted_names(a.table(), r.witness->second));
        return py::make_tuple(r.equivalent, witness);
      },
      py::arg("a"), py::arg("b"), py::arg("method") = "direct", py::arg("cap") = k_enum_cap);

  m.def(
      "equivalent_in_context",
      [](const dlp_function& a, const dlp_function& b, const dlp_function& ctx, unsigned cap) {
        return equivalent_in_context(a, aligned(a, b), aligned(a, ctx), cap).equivalent;
      },
      py::arg("a"), py::arg("b"), py::arg("context"), py::arg("cap") = k_enum_cap);

  m.def(
      "qbf_encode",
      [](const std::string& text, const std::string& part) {
        qbf_instance q = parse_qbf(text, make_workspace());
        if (part == "sat") return encode_sat(q);
        if (part == "unsat") return encode_unsat(q);
        fail(errc::usage, "part must be 'sat' or 'unsat'");
      },
      py::arg("text"), py::arg("part") = "sat");

  m.def(
      "qbf_eval",
      [](const std::string& text, unsigned cap) {
        workspace ws = make_workspace();
        qbf_instance q = parse_qbf(text, ws);
        qbf_verdict v = evaluate_qbf(q, cap);
        return py::make_tuple(v.valid, v.certificate ? py::object(py::cast(sorted_names(
                                           *ws, *v.certificate)))
                                                     : py::none());
      },
      py::arg("text"), py::arg("cap") = k_enum_cap);
}
