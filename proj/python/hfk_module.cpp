#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hfk/pipeline.hpp"
#include "hfk/simplify.hpp"

namespace py = pybind11;
using namespace hfk;

namespace {

Ring ring_of(const std::string& s) {
    if (s == "z") return Ring::Z;
    if (s == "z2") return Ring::Z2;
    throw Error(ErrorKind::ParseError, "coefficients must be z or z2");
}

template <class E>
E pick(const std::string& s, std::initializer_list<std::pair<const char*, E>> opts, const char* what) {
    for (auto& [name, v] : opts)
        if (s == name) return v;
    throw Error(ErrorKind::ParseError, std::string("unknown ") + what + " '" + s + "'");
}

py::dict table_dict(const HFKTable& t) {
    py::dict groups;
    for (auto& [g, e] : t.groups) {
        if (g.a2 % 2) throw Error(ErrorKind::InconsistentTensor, "half-integral Alexander grading in a knot table");
        groups[py::make_tuple(g.a2 / 2, g.m)] = py::make_tuple(e.rank, e.torsion);
    }
    py::dict d;
    d["groups"] = groups;
    d["genus"] = t.genus;
    d["fibered"] = t.fibered;
    d["torsion_free"] = t.torsion_free;
    d["ring"] = ring_name(t.ring);
    return d;
}

py::dict report_dict(const RunReport& r) {
    py::dict d = table_dict(r.table);
    d["input"] = r.input;
    d["n_input"] = r.n_input;
    d["n"] = r.n;
    d["pipeline"] = pipeline_name(r.pipeline);
    d["strategy"] = strategy_name(r.strategy);
    d["mode"] = mode_name(r.mode);
    d["partial"] = r.partial;
    d["skipped"] = r.skipped;
    d["generators"] = r.generators;
    d["crosschecked"] = r.crosschecked;
    d["euler_ok"] = r.euler_ok ? py::cast(*r.euler_ok) : py::none();
    d["warnings"] = r.warnings;
    d["seconds"] = r.seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Knot Floer homology from grid diagrams";

    static py::exception<Error> exc(m, "HfkError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, (std::string(error_name(e.kind)) + ": " + e.what()).c_str());
        }
    });

    py::class_<GridDiagram>(m, "Grid")
        .def(py::init([](std::vector<int> xs, std::vector<int> os) {
                 GridDiagram g = make_grid(std::move(xs), std::move(os));
                 validate(g);
                 return g;
             }),
             py::arg("xs"), py::arg("os"))
        .def_readonly("n", &GridDiagram::n)
        .def_readonly("xs", &GridDiagram::xs)
        .def_readonly("os", &GridDiagram::os)
        .def("__eq__", [](const GridDiagram& a, const GridDiagram& b) { return a == b; })
        .def("__repr__", [](const GridDiagram& g) { return "Grid(" + grid_str(g) + ")"; });

    m.def("parse_braid", &parse_braid, py::arg("word"));
    m.def("alexander", [](const GridDiagram& g) { return alexander_oracle(g).coefficients; }, py::arg("grid"),
          "Symmetrized Alexander polynomial as {exponent: coefficient}.");
    m.def("minimize", [](const GridDiagram& g, std::int64_t budget) { return minimize(g, {budget}); }, py::arg("grid"),
          py::arg("budget") = 100000);
    m.def("cyclic_move", [](const GridDiagram& g, bool rows, int amount) {
        return cyclic_move(g, rows ? Axis::Rows : Axis::Cols, amount);
    }, py::arg("grid"), py::arg("rows"), py::arg("amount"));
    m.def("stabilize", [](const GridDiagram& g, bool rows, int line, int at, int variant) {
        return stabilize(g, rows ? Axis::Rows : Axis::Cols, line, at, variant);
    }, py::arg("grid"), py::arg("rows"), py::arg("line"), py::arg("at"), py::arg("variant"));

    m.def(
        "run",
        [](std::optional<std::vector<int>> braid, std::optional<GridDiagram> grid, std::optional<std::string> grid_file,
           const std::string& coeff, const std::string& mode, const std::string& strategy, const std::string& pipeline,
           int simplify_budget, const std::string& skip, std::optional<bool> crosscheck, bool euler_check,
           const std::string& format) {
            RunConfig cfg;
            cfg.braid = std::move(braid);
            cfg.grid = std::move(grid);
            cfg.grid_path = std::move(grid_file);
            if (!!cfg.braid + !!cfg.grid + !!cfg.grid_path != 1)
                throw Error(ErrorKind::ParseError, "give exactly one of braid, grid, grid_file");
            cfg.ring = ring_of(coeff);
            cfg.mode = pick<Mode>(mode, {{"hfk", Mode::Hfk}, {"genus", Mode::Genus}, {"fibered", Mode::Fibered},
                                         {"torsion", Mode::Torsion}}, "mode");
            cfg.strategy = pick<Strategy>(
                strategy, {{"faithful", Strategy::Faithful}, {"fast", Strategy::Fast}, {"paths", Strategy::Paths}}, "strategy");
            cfg.pipeline = pick<Pipeline>(pipeline, {{"oval", Pipeline::Oval}, {"mos", Pipeline::Mos}}, "pipeline");
            cfg.simplify_budget = simplify_budget;
            cfg.auto_skip = pick<bool>(skip, {{"auto", true}, {"none", false}}, "skip policy");
            cfg.crosscheck = crosscheck;
            cfg.euler_check = euler_check;
            RunReport r;
            {
                py::gil_scoped_release release;
                r = run(cfg);
            }
            py::dict d = report_dict(r);
            d["report"] = emit_report(r, pick<Format>(format, {{"text", Format::Text}, {"machine", Format::Machine}}, "format"));
            return d;
        },
        py::kw_only(), py::arg("braid") = py::none(), py::arg("grid") = py::none(), py::arg("grid_file") = py::none(),
        py::arg("coeff") = "z", py::arg("mode") = "hfk", py::arg("strategy") = "faithful", py::arg("pipeline") = "oval",
        py::arg("simplify_budget") = 100000, py::arg("skip") = "auto", py::arg("crosscheck") = py::none(),
        py::arg("euler_check") = true, py::arg("format") = "text");

    m.def("parse_machine_report", [](const std::string& text) {
        auto p = parse_machine_report(text);
        py::dict d = table_dict(p.table);
        d["header"] = p.header;
        return d;
    }, py::arg("text"));
}
