#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opetope/generator.hpp"
#include "opetope/io.hpp"
#include "opetope/nu.hpp"
#include "opetope/predicates.hpp"
#include "opetope/reduction.hpp"
#include "opetope/transduce.hpp"

namespace py = pybind11;
using namespace opetope;

namespace {

// Maps are handed to Python as plain dicts; the natural order is lost there
// but callers only ever look things up.
template <typename Map>
py::dict to_dict(const Map& m) {
  py::dict out;
  for (const auto& [k, v] : m) out[py::str(k)] = py::str(v);
  return out;
}

py::dict classification(const Complex& k) {
  const Classification c = classify(k);
  py::dict out;
  out["fadc"] = c.fadc;
  out["atomic"] = c.atomic;
  out["dim"] = c.dim ? py::object(py::int_(*c.dim)) : py::object(py::none());
  out["unital"] = c.unital;
  out["loop_free"] = c.loop_free;
  out["opetopic"] = c.opetopic;
  out["reduced"] = c.reduced;
  out["notes"] = c.notes;
  return out;
}

py::dict network_flags(const Network& n) {
  const NetworkFlags f = classify_network(n);
  py::dict out;
  out["acyclic"] = f.acyclic;
  out["linear"] = f.linear;
  out["confluent"] = f.confluent;
  out["opetopic"] = f.opetopic;
  out["reduced"] = f.reduced;
  return out;
}

}  // namespace

PYBIND11_MODULE(_opetope, m) {
  m.doc() = "Opetopes as reduced opetopic directed complexes and as network sequences";

  static py::exception<Error> error(m, "OpetopeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::reinterpret_borrow<py::object>(error.ptr());
      py::object exc = cls(std::string(to_string(e.code())) + ": " + e.what());
      exc.attr("code") = to_string(e.code());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Complex>(m, "Complex")
      .def_static("from_json", [](const std::string& text) { return parse_complex(text).complex; })
      .def("to_json", [](const Complex& k, const std::string& name) { return serialize_complex(k, name); },
           py::arg("name") = "")
      .def_property_readonly("dim", &Complex::max_dim)
      .def("ids", [](const Complex& k) {
        std::vector<std::string> ids;
        for (const Cell* c : k.cells()) ids.push_back(c->id);
        return ids;
      })
      .def("is_thin", [](const Complex& k, const std::string& id) { return k.cell(id).thin; })
      .def("d_minus", [](const Complex& k, const std::string& id) { return k.cell(id).d_minus.to_string(); })
      .def("d_plus", [](const Complex& k, const std::string& id) { return k.cell(id).d_plus.to_string(); })
      .def("__contains__", &Complex::contains)
      .def("__len__", &Complex::size);

  py::class_<OpetopicSequence>(m, "Sequence")
      .def_static("from_json", [](const std::string& text) { return parse_sequence(text).sequence; })
      .def("to_json", [](const OpetopicSequence& s, const std::string& name) { return serialize_sequence(s, name); },
           py::arg("name") = "")
      .def_property_readonly("dim", &OpetopicSequence::dim)
      .def("level_counts", [](const OpetopicSequence& s) {
        // (edges, vertices, inputs, thin edges, thin vertices) per level
        std::vector<std::tuple<int, int, int, int, int>> out;
        for (const auto& n : s.networks) {
          out.emplace_back(n.edges().size(), n.vertices().size(), n.inputs().size(),
                           n.thin_edges().size(), n.thin_vertices().size());
        }
        return out;
      })
      .def("network_flags", [](const OpetopicSequence& s, int q) { return network_flags(s.networks.at(q)); });

  m.def("classify", &classification, "Every structural flag of a complex");
  m.def("validate_fadc", [](const Complex& k) { return validate_fadc(k).violations; });
  m.def("is_loop_free", [](const Complex& k, bool fast) {
    return is_loop_free(k, fast ? Mode::fast : Mode::general);
  }, py::arg("k"), py::arg("fast") = false);
  m.def("canonical_atom", [](const Complex& k) {
    std::vector<std::pair<std::string, std::string>> levels;
    for (const auto& l : canonical_atom(k).levels) levels.emplace_back(l.minus.to_string(), l.plus.to_string());
    return levels;
  }, "Level pairs (minus, plus), lowest level first");
  m.def("networks_of", &networks_of);
  m.def("complex_of", &complex_of);
  m.def("validate_sequence", [](const OpetopicSequence& s, bool require_reduced) {
    const SequenceReport r = validate_sequence(s, require_reduced);
    std::vector<std::string> all = r.violations;
    all.insert(all.end(), r.internal.begin(), r.internal.end());
    return all;
  }, py::arg("seq"), py::arg("require_reduced") = true);
  m.def("iso_complexes", [](const Complex& a, const Complex& b) -> py::object {
    auto iso = iso_complexes(a, b);
    if (!iso) return py::none();
    return to_dict(*iso);
  });
  m.def("iso_sequences", [](const OpetopicSequence& a, const OpetopicSequence& b) -> py::object {
    auto iso = iso_sequences(a, b);
    if (!iso) return py::none();
    py::list levels;
    for (std::size_t q = 0; q < iso->edges.size(); ++q) {
      levels.append(py::make_tuple(to_dict(iso->edges[q]), to_dict(iso->vertices[q])));
    }
    return levels;
  });
  m.def("atomic_subcomplex", &atomic_subcomplex);
  m.def("reduce", &reduce);
  m.def("sources", &sources);
  m.def("target", &target);
  m.def("random_opetope", &random_opetope, py::arg("seed"), py::arg("max_dim"), py::arg("budget"));
  m.def("to_dot", [](const OpetopicSequence& s, const std::string& name) { return to_dot(s, name); },
        py::arg("seq"), py::arg("name") = "opetope");
}
