#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kup/engine.hpp"

namespace py = pybind11;
using namespace kup;

namespace {

HopfAlgebraData make_algebra(const std::string& spec) {
  HopfAlgebraData h = parse_algebra_spec(spec);
  AxiomReport ax = check_axioms(h);
  if (!ax.all_pass)
    throw std::runtime_error("algebra fails the Hopf axioms: " + spec);
  return h;
}

HeegaardDiagram make_diagram(const std::string& src) {
  if (src.rfind("builtin:", 0) == 0) return builtin_diagram(src.substr(8));
  return parse_diagram(src);
}

GoodPair load_pair(const HopfAlgebraData& h, const std::string& pair_text) {
  if (pair_text.empty()) return auto_good_pair(h);
  return parse_good_pair(h, pair_text);
}

}  // namespace

PYBIND11_MODULE(_kupinv, m) {
  m.doc() =
      "Exact 3-manifold invariants from involutory Hopf algebras in graded "
      "vector spaces";

  m.def(
      "check_hopf",
      [](const std::string& spec) {
        HopfAlgebraData h = parse_algebra_spec(spec);
        AxiomReport ax = check_axioms(h);
        py::dict out;
        for (const auto& it : ax.items) out[py::str(it.name)] = it.pass;
        return out;
      },
      py::arg("algebra"), "Axiom name -> pass for the given algebra spec.");

  m.def(
      "good_pair",
      [](const std::string& spec) {
        HopfAlgebraData h = make_algebra(spec);
        return serialize_good_pair(h, auto_good_pair(h));
      },
      py::arg("algebra"),
      "Serialized auto-built good pair; raises on (A5) violation.");

  m.def(
      "invariant",
      [](const std::string& spec, const std::string& diagram,
         const std::string& pair_text, bool oracle) {
        HopfAlgebraData h = make_algebra(spec);
        GoodPair gp = load_pair(h, pair_text);
        HeegaardDiagram d = make_diagram(diagram);
        Scalar v = oracle ? dense_oracle(h, gp, d)
                          : evaluate_invariant(h, gp, d);
        return v.str();
      },
      py::arg("algebra"), py::arg("diagram"), py::arg("pair") = std::string(),
      py::arg("oracle") = false,
      "Exact invariant as a string; diagram is 'builtin:...' or file text.");

  m.def(
      "builtin_diagram",
      [](const std::string& name) {
        return serialize_diagram(builtin_diagram(name));
      },
      py::arg("name"));

  m.def(
      "random_diagram",
      [](uint64_t seed, unsigned genus, unsigned max_points) {
        return serialize_diagram(random_diagram(seed, genus, max_points));
      },
      py::arg("seed"), py::arg("genus"), py::arg("max_points"));

  m.def(
      "check_good_pair",
      [](const std::string& spec, const std::string& pair_text) {
        HopfAlgebraData h = make_algebra(spec);
        GoodPair gp = load_pair(h, pair_text);
        GPReport rep = check_good_pair(h, gp.phi, gp.Omega);
        py::dict out;
        for (const auto& it : rep.items) out[py::str(it.name)] = it.pass;
        out["nu"] = rep.nu.str();
        out["gamma"] = rep.gamma;
        out["all_pass"] = rep.all_pass;
        return out;
      },
      py::arg("algebra"), py::arg("pair") = std::string());
}
