#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "legch/error.hpp"
#include "legch/io.hpp"
#include "legch/knots.hpp"
#include "legch/obstruction.hpp"
#include "legch/repro.hpp"

namespace py = pybind11;
using namespace legch;

namespace {

py::object to_python(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

io::Json from_python(const py::object& o) {
    auto text = py::module_::import("json").attr("dumps")(o).cast<std::string>();
    return io::parse_json(text, "<python>");
}

py::int_ to_int(const Count& c) { return py::int_(py::module_::import("builtins").attr("int")(c.str())); }

py::dict map_dict(const AlgebraMap& m, const std::vector<Symbol>& names) {
    py::dict out;
    for (auto g : names) out[py::str(g.str())] = m.image(g);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chekanov-Eliashberg DGA calculator";

    py::register_exception<Error>(m, "LegchError", PyExc_ValueError);

    py::class_<Poly>(m, "Poly")
        .def(py::init<>())
        .def_static("parse", [](const std::string& text) { return Poly::parse(text); })
        .def_static("one", &Poly::one)
        .def_static("generator", [](const std::string& name) { return Poly::generator(name); })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__str__", &io::poly_text)
        .def("__repr__", [](const Poly& p) { return "Poly('" + io::poly_text(p) + "')"; })
        .def("is_zero", &Poly::is_zero)
        .def("length", [](const Poly& p) { return to_int(p.length()); })
        .def("tau", [](const Poly& p, const std::string& g) { return to_int(p.tau(Symbol(g))); })
        .def("max_count", [](const Poly& p, const std::string& g) { return p.max_count(Symbol(g)); })
        .def("letters", [](const Poly& p) {
            std::vector<std::string> out;
            for (auto s : p.letters()) out.push_back(s.str());
            return out;
        });

    py::class_<Dga>(m, "Dga")
        .def_static("from_json", [](const py::object& o) { return io::dga_from_json(from_python(o)); })
        .def("to_json", [](const Dga& d) { return to_python(io::dga_to_json(d)); })
        .def("names", [](const Dga& d) {
            std::vector<std::string> out;
            for (auto s : d.names()) out.push_back(s.str());
            return out;
        })
        .def("differential", [](const Dga& d, const std::string& g) { return d.differential(d.at(Symbol(g)).name); })
        .def("degree", [](const Dga& d, const std::string& g) { return d.at(Symbol(g)).degree; })
        .def("check", [](const Dga& d) { return to_python(io::validation_to_json(check_dga(d))); })
        .def("even_delta_class", [](const Dga& d) { return to_python(io::class_report_to_json(is_even_delta_class(d))); });

    py::class_<Tangle>(m, "Tangle")
        .def_static("from_json", [](const py::object& o) { return io::tangle_from_json(from_python(o)); })
        .def("to_json", [](const Tangle& t) { return to_python(io::tangle_to_json(t)); })
        .def_readonly("word", &Tangle::word)
        .def_readonly("prefix", &Tangle::prefix)
        .def_readonly("internal", &Tangle::internal);

    m.def("path_matrix", [](int n) {
        auto b = path_matrix(n);
        return std::vector<std::vector<Poly>>{{b(1, 1), b(1, 2)}, {b(2, 1), b(2, 2)}};
    }, py::arg("n"));
    m.def("fibonacci_lengths", &fibonacci_lengths, py::arg("n"));
    m.def("torus_knot_dga", &torus_knot_dga, py::arg("n"));
    m.def("tangle_from_knot", [](const Dga& d, const std::string& closure, const std::string& prefix) {
        return tangle_from_knot(d, Symbol(closure), prefix);
    }, py::arg("dga"), py::arg("closure") = "a2", py::arg("prefix") = "");
    m.def("connect_sum", &connect_sum, py::arg("tangles"), py::arg("closure") = "a");
    m.def("fly_tangle", &fly_tangle, py::arg("summands"));
    m.def("kalman_monodromy", [](const Poly& word, int j) {
        KalmanLabels l;
        return map_dict(kalman_monodromy(word, j, l), {l.b1, l.b2, l.b3});
    }, py::arg("fly_word"), py::arg("j"));
    m.def("run_script", [](const py::object& o) {
        auto script = io::script_from_json(from_python(o));
        return to_python(io::monodromy_to_json(run_script(script), script.mode));
    }, py::arg("script"));
    m.def("family_verdicts", [](const std::vector<int>& summands, const std::vector<int>& powers, unsigned workers) {
        FamilyOptions opts;
        opts.workers = workers;
        FamilyResult r;
        {
            py::gil_scoped_release release;
            r = family_verdicts(summands, std::set<int>(powers.begin(), powers.end()), opts);
        }
        return to_python(io::family_to_json(r));
    }, py::arg("summands"), py::arg("powers") = std::vector<int>{1, 2, 3}, py::arg("workers") = 0);
    m.def("acceptance", [] {
        py::list out;
        for (const auto& r : repro::run_all()) {
            py::dict row;
            row["id"] = r.id;
            row["name"] = r.name;
            row["passed"] = r.passed;
            row["detail"] = r.detail;
            row["seconds"] = r.seconds;
            out.append(row);
        }
        return out;
    });
}
