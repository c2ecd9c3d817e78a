#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dlknot/catalog.hpp"
#include "dlknot/diagram.hpp"
#include "dlknot/links.hpp"
#include "dlknot/moves.hpp"
#include "dlknot/projection.hpp"
#include "dlknot/search.hpp"
#include "dlknot/trace.hpp"

namespace py = pybind11;
using namespace dlknot;

namespace {

Sign to_sign(int s) {
  if (s == 1) return Sign::Plus;
  if (s == -1) return Sign::Minus;
  throw std::invalid_argument("sign must be +1 or -1");
}

py::tuple parity_tuple(const WindingParity& p) { return py::make_tuple(p.value, p.modulus); }

py::list parity_list(const std::vector<WindingParity>& ps) {
  py::list out;
  for (const auto& p : ps) out.append(parity_tuple(p));
  return out;
}

py::dict report_dict(const EssentialReport& r) {
  py::dict d;
  d["subset"] = r.subset;
  d["cardinality"] = r.cardinality;
  d["residual_parities"] = r.residual_parities;
  d["essential"] = r.essential;
  return d;
}

py::dict record_dict(const InvariantRecord& r) {
  py::dict d;
  d["degree"] = r.degree;
  d["parity_profile"] = parity_list(r.parities);
  d["essential"] = r.essential;
  return d;
}

py::tuple knot_tuple(const OneCrossing& k) { return py::make_tuple(k.m, k.n, value(k.eps)); }

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Knot diagrams with double lines";

  py::class_<DlDiagram>(mod, "Diagram")
      .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text") = "")
      .def("__str__", [](const DlDiagram& d) { return serialize(d); })
      .def("__repr__", [](const DlDiagram& d) { return "Diagram('" + serialize(d) + "')"; })
      .def("__len__", &DlDiagram::size)
      .def("__eq__", [](const DlDiagram& a, const DlDiagram& b) { return a == b; })
      .def_property_readonly("crossing_count", &DlDiagram::crossing_count)
      .def_property_readonly("double_line_count", &DlDiagram::double_line_count)
      .def("canonical", [](const DlDiagram& d) { return canonicalize(d); });

  mod.def("parse", [](const std::string& text) { return parse(text); });
  mod.def("serialize", [](const DlDiagram& d) { return serialize(d); });
  mod.def("canonically_equal", &canonically_equal);
  mod.def("degree", &degree);
  mod.def("winding_parity", [](const DlDiagram& d, int c) { return parity_tuple(winding_parity(d, c)); });
  mod.def("parities", [](const DlDiagram& d) { return parity_list(parities(d)); });
  mod.def("parity_profile", [](const DlDiagram& d) { return parity_list(parity_profile(d)); });

  py::class_<MoveInstance>(mod, "Move")
      .def(py::init([](const std::string& line) { return parse_move(line); }))
      .def("__str__", &format_move)
      .def("__repr__", [](const MoveInstance& m) { return "Move('" + format_move(m) + "')"; })
      .def("__eq__", [](const MoveInstance& a, const MoveInstance& b) { return a == b; })
      .def_property_readonly("kind", [](const MoveInstance& m) { return std::string(to_string(m.kind)); });

  mod.def(
      "enumerate_moves",
      [](const DlDiagram& d, const std::string& kinds) { return enumerate_moves(d, parse_move_kinds(kinds)); },
      py::arg("diagram"), py::arg("kinds") = "all");
  mod.def("apply", &apply);
  mod.def("invert", &invert, py::arg("move"), py::arg("context"));
  mod.def("replay", [](const std::string& trace_text) { return replay(parse_trace(trace_text)); });

  mod.def("project_winding_parity", &project_winding_parity);
  mod.def("strip_double_lines", &strip_double_lines);
  mod.def("remove_double_lines", [](const DlDiagram& d) {
    const auto cert = remove_double_lines(d);
    py::dict out;
    out["result"] = cert.result;
    out["trace"] = format_trace(cert.trace);
    return out;
  });
  mod.def("essential_count", &essential_count);
  mod.def(
      "important_subsets",
      [](const DlDiagram& d, std::optional<std::size_t> limit) {
        py::list out;
        for (const auto& r : important_subsets(d, limit)) out.append(report_dict(r));
        return out;
      },
      py::arg("diagram"), py::arg("limit") = py::none());
  mod.def("essential_diagram", [](const DlDiagram& d) {
    const auto e = essential_diagram(d);
    py::dict out;
    out["diagram"] = e.diagram;
    out["trace"] = format_trace(e.trace);
    out["report"] = report_dict(e.kept);
    out["changed_crossings"] = e.changed_crossings;
    return out;
  });

  mod.def("one_crossing", [](long m, long n, int eps) { return one_crossing(m, n, to_sign(eps)); });
  mod.def("partner", [](long m, long n, int eps) { return knot_tuple(partner({m, n, to_sign(eps)})); });
  mod.def("essential_count_closed_form", &essential_count_closed_form);
  mod.def("degree_k_family", [](long k) {
    py::list out;
    for (const auto& c : degree_k_family(k)) {
      py::dict d;
      d["representative"] = knot_tuple(c.representative);
      d["record"] = record_dict(c.record);
      d["partner_record"] = record_dict(c.partner_record);
      py::list members;
      for (const auto& m : c.members) members.append(knot_tuple(m));
      d["members"] = members;
      out.append(d);
    }
    return out;
  });
  mod.def("stretch_family", [](long m, long k, long s_max) {
    py::list out;
    for (const auto& r : stretch_family(m, k, s_max)) out.append(py::make_tuple(r.s, knot_tuple(r.knot), r.essential));
    return out;
  });

  mod.def("make_L", [](long m, long n, int eps) { return serialize(make_L(m, n, to_sign(eps))); });
  mod.def("link_to_diagram", [](const std::string& text) { return to_dl_diagram(parse_sewed(text)); });
  mod.def("linking_number", [](const std::string& text) { return linking_number(parse_sewed(text)); });
  mod.def("separability_check", [](const std::string& text) {
    const auto v = separability_check(parse_sewed(text));
    py::dict out;
    out["separable"] = v.separable;
    if (v.obstruction) {
      py::dict o;
      o["reason"] = v.obstruction->reason;
      o["crossing"] = v.obstruction->crossing;
      o["parity"] = v.obstruction->parity;
      out["obstruction"] = o;
    } else {
      out["obstruction"] = py::none();
    }
    out["certificate"] = v.certificate ? py::cast(format_trace(v.certificate->trace)) : py::none();
    return out;
  });
  mod.def("distinguish_L_family", [](long m_max) {
    py::list out;
    for (const auto& r : distinguish_L_family(m_max)) out.append(py::make_tuple(r.m, record_dict(r.record)));
    return out;
  });

  mod.def(
      "search",
      [](const DlDiagram& from, const DlDiagram& to, std::size_t max_moves, std::size_t max_len,
         const std::string& kinds) {
        SearchOptions opt;
        opt.max_moves = max_moves;
        opt.max_len = max_len;
        opt.kinds = parse_move_kinds(kinds);
        const auto r = search(from, to, opt);
        py::dict out;
        out["found"] = r.found;
        out["explored"] = r.explored;
        out["trace"] = r.trace ? py::cast(format_trace(*r.trace)) : py::none();
        out["reason"] = r.reason;
        return out;
      },
      py::arg("start"), py::arg("target"), py::arg("max_moves") = 12, py::arg("max_len") = 16,
      py::arg("kinds") = "all");
}
