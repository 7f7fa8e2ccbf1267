#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finring/properties.hpp"
#include "finring/report.hpp"
#include "finring/specparse.hpp"
#include "finring/structure.hpp"
#include "finring/suite.hpp"
#include "finring/version.hpp"

namespace py = pybind11;
using namespace finring;

namespace {

std::vector<std::string> labels_of(const FiniteRing& r, const ElemSet& s) {
    std::vector<std::string> out;
    for (Elem x : s.to_sorted()) out.push_back(r.label(x));
    return out;
}

py::dict verdict_dict(const FiniteRing& r, const Verdict& v) {
    py::dict d;
    d["property"] = v.property;
    d["verdict"] = status_id(v.status);
    py::list w;
    for (const auto& part : v.witness) {
        py::dict p;
        p["role"] = part.role;
        p["elem"] = part.elem;
        p["label"] = r.label(part.elem);
        w.append(p);
    }
    d["witness"] = w;
    d["reason"] = v.reason;
    d["trace"] = v.trace;
    return d;
}

py::dict check_py(const std::string& spec, const std::string& property_id) {
    FiniteRing r = parse_ring_spec(spec);
    RingAnalysis a(r);
    return verdict_dict(r, check_property(a, property_id));
}

py::dict ring_info(const std::string& spec) {
    FiniteRing r = parse_ring_spec(spec);
    py::dict d;
    d["size"] = r.size();
    d["unital"] = r.unital();
    d["commutative"] = r.commutative();
    d["labels"] = r.labels();
    return d;
}

py::dict structure_sets(const std::string& spec) {
    FiniteRing r = parse_ring_spec(spec);
    RingAnalysis a(r);
    py::dict d;
    d["center"] = labels_of(r, a.center());
    d["hypercenter"] = labels_of(r, a.hypercenter());
    d["nil"] = labels_of(r, a.nil());
    d["jacobson"] = labels_of(r, a.jacobson());
    d["prime"] = labels_of(r, a.prime());
    d["units"] = labels_of(r, a.units());
    d["idempotents"] = labels_of(r, a.idempotents());
    return d;
}

py::list suite_checks_py() {
    py::list out;
    for (const auto& c : implication_suite_checks()) {
        py::dict d;
        d["id"] = c.id;
        d["statement"] = c.statement;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite ring property deciders";
    m.attr("__version__") = kEngineVersion;
    m.def("property_ids", &property_ids, "all decidable property ids");
    m.def("check", &check_py, py::arg("ring"), py::arg("property"),
          "decide a property on a ring given by a spec string");
    m.def("ring_info", &ring_info, py::arg("ring"), "size, unity, labels of a ring spec");
    m.def("structure_sets", &structure_sets, py::arg("ring"),
          "center, hypercenter and radicals as label lists");
    m.def("suite_checks", &suite_checks_py, "ids and statements of the implication suite");
    m.def("paper_example_ids", &paper_example_ids, "ids accepted by the paper subcommand");
    py::register_exception<RingError>(m, "RingException");
}
