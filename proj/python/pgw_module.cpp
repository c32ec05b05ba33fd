#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>

#include "pgw/corpus.hpp"
#include "pgw/errors.hpp"
#include "pgw/oracle.hpp"
#include "pgw/parallel.hpp"
#include "pgw/report.hpp"
#include "pgw/structure.hpp"
#include "pgw/witness.hpp"

namespace py = pybind11;

namespace {

// Keeps the loaded group alive for Python; reports go out as JSON text and
// are decoded on the Python side.
struct PyGroup {
  std::shared_ptr<pgw::LoadedGroup> g;

  const pgw::AbstractGroup& G() const { return g->group(); }
};

PyGroup load(const std::string& text) {
  return PyGroup{std::make_shared<pgw::LoadedGroup>(pgw::load_group_text(text))};
}

std::string validate_json(const std::string& text) {
  pgw::PcPresentation pres = pgw::parse_presentation(text);
  pgw::Json j{{"canonical", pgw::serialize_presentation(pres)}};
  j["overlap_tests"] = pgw::to_json(pres, pgw::check_consistency(pres, pgw::ConsistencyMode::OverlapTests));
  j["full_associativity"] =
      pgw::to_json(pres, pgw::check_consistency(pres, pgw::ConsistencyMode::FullAssociativity,
                                                pgw::default_max_order()));
  return j.dump();
}

std::string witness_json(const PyGroup& grp) {
  const auto& G = grp.G();
  pgw::WitnessScan scan = pgw::scan_witnesses(G);
  if (!scan.first) return "null";
  const pgw::WitnessData& w = scan.non_inner ? *scan.non_inner : *scan.first;
  pgw::Automorphism beta = pgw::construct_beta(G, w);
  pgw::Json j{{"witness", pgw::to_json(G, w)},
              {"beta", pgw::automorphism_json(beta)},
              {"verification", pgw::to_json(G, pgw::verify_noninner_orderp(G, beta, w))}};
  return j.dump();
}

std::string search_json(const PyGroup& grp, bool require_fix) {
  auto hit = pgw::exhaustive_noninner_search(grp.G(), require_fix);
  if (!hit) return "null";
  pgw::Json j{{"automorphism", pgw::automorphism_json(*hit)}, {"order", pgw::automorphism_order(*hit)}};
  return j.dump();
}

std::string crosscheck_json(const PyGroup& a, const PyGroup& b) {
  return pgw::to_json(pgw::compare_invariants(pgw::compute_invariants(a.G()),
                                              pgw::oracle_recompute(b.G()).invariants))
      .dump();
}

}  // namespace

PYBIND11_MODULE(_pgw, m) {
  m.doc() = "Finite p-group toolkit: pc presentations, structure, witnesses and oracles";

  py::register_exception<pgw::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<pgw::InconsistentPresentation>(m, "InconsistentPresentation", PyExc_ValueError);
  py::register_exception<pgw::ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<pgw::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<pgw::VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);
  py::register_exception<pgw::IoError>(m, "IoError", PyExc_OSError);

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("name", [](const PyGroup& g) { return g.g->name; })
      .def_property_readonly("format", [](const PyGroup& g) { return std::string(pgw::to_string(g.g->format)); })
      .def_property_readonly("order", [](const PyGroup& g) { return g.G().order(); })
      .def_property_readonly("prime", [](const PyGroup& g) { return g.G().prime(); })
      .def_property_readonly("generators", [](const PyGroup& g) { return g.G().generators(); })
      .def("multiply", [](const PyGroup& g, pgw::Elem u, pgw::Elem v) { return g.G().multiply(u, v); })
      .def("inverse", [](const PyGroup& g, pgw::Elem u) { return g.G().inverse(u); })
      .def("power", [](const PyGroup& g, pgw::Elem u, long long k) { return pgw::power(g.G(), u, k); })
      .def("commutator", [](const PyGroup& g, pgw::Elem u, pgw::Elem v) { return pgw::commutator(g.G(), u, v); })
      .def("element_order", [](const PyGroup& g, pgw::Elem u) { return pgw::element_order(g.G(), u); })
      .def("render", [](const PyGroup& g, pgw::Elem u) { return g.G().render(u); })
      .def("_invariants_json", [](const PyGroup& g) { return pgw::to_json(pgw::compute_invariants(g.G())).dump(); })
      .def("_oracle_invariants_json",
           [](const PyGroup& g) { return pgw::to_json(pgw::oracle_recompute(g.G()).invariants).dump(); })
      .def("_hypotheses_json", [](const PyGroup& g) { return pgw::to_json(pgw::classify_hypotheses(g.G())).dump(); })
      .def("_witness_json", &witness_json)
      .def("_search_json", &search_json, py::arg("require_fix_frattini") = true)
      .def("_pipeline_json",
           [](const PyGroup& g, bool fallback) { return pgw::to_json(pgw::conjecture_pipeline(g.G(), fallback)).dump(); },
           py::arg("fallback") = false)
      .def("__repr__", [](const PyGroup& g) {
        return "<pgw.Group " + g.g->name + " of order " + std::to_string(g.G().order()) + ">";
      });

  m.def("load_group", &load, py::arg("text"), "Parse a .pcg or .perm source into a Group");
  m.def("canonical_form", [](const std::string& text) {
    return pgw::serialize_presentation(pgw::parse_presentation(text));
  });
  m.def("_validate_json", &validate_json);
  m.def("_crosscheck_json", &crosscheck_json);
  m.def("set_worker_count", &pgw::set_worker_count);
  m.def("corpus_dir", [] { return pgw::default_corpus_dir().string(); });
}
