#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quandlekit/chain.hpp"
#include "quandlekit/cocycle.hpp"
#include "quandlekit/coloring.hpp"
#include "quandlekit/diagram.hpp"
#include "quandlekit/rack.hpp"
#include "quandlekit/spaces.hpp"
#include "quandlekit/verify.hpp"

namespace py = pybind11;
using namespace quandlekit;

namespace {

py::dict group_to_dict(const HomologyGroup& h) {
    py::dict d;
    d["group"] = h.to_string();
    d["free_rank"] = h.free_rank;
    d["torsion"] = h.torsion;
    return d;
}

py::dict sum_to_dict(const StateSumResult& r) {
    py::dict d;
    d["mod"] = r.mod;
    py::dict mult;
    for (const auto& [w, c] : r.multiplicity) mult[py::int_(w)] = c;
    d["multiplicity"] = mult;
    d["total"] = r.total();
    return d;
}

py::dict validation_to_dict(const ValidationReport& r) {
    py::dict d;
    d["structural_ok"] = r.structural_ok;
    if (!r.structural_ok) d["structural_error"] = r.structural_error;
    d["rack"] = r.is_rack();
    d["quandle"] = r.is_quandle();
    if (r.self_distributive_fail) {
        auto [a, b, c] = *r.self_distributive_fail;
        d["self_distributive_fail"] = py::make_tuple(a, b, c);
    }
    if (r.invertible_fail) {
        auto [a1, a2, b] = *r.invertible_fail;
        d["invertible_fail"] = py::make_tuple(a1, a2, b);
    }
    if (r.idempotent_fail) d["idempotent_fail"] = *r.idempotent_fail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite rack and quandle computations: colorings, homology, state sums";

    py::register_exception<PdParseError>(m, "PdParseError");

    py::class_<Rack>(m, "Rack")
        .def(py::init<std::vector<std::vector<int>>>(), py::arg("table"))
        .def_static("from_spec", &rack_from_spec, py::arg("spec"),
                    "family spec like dihedral:3, or a table file path")
        .def_property_readonly("size", &Rack::size)
        .def_property_readonly("quandle", &Rack::quandle)
        .def_property_readonly("table", &Rack::table)
        .def("op", &Rack::op, py::arg("a"), py::arg("b"))
        .def("inv_op", &Rack::inv_op, py::arg("a"), py::arg("b"))
        .def("__repr__", [](const Rack& x) {
            return "<Rack size=" + std::to_string(x.size()) +
                   (x.quandle() ? " quandle" : "") + ">";
        });

    m.def("validate", [](const std::vector<std::vector<int>>& t) {
        return validation_to_dict(validate_table(t));
    });
    m.def("dihedral", &dihedral_quandle, py::arg("n"));
    m.def("trivial", &trivial_quandle, py::arg("n"));
    m.def("alexander", &alexander_quandle, py::arg("n"), py::arg("t"));
    m.def("cyclic", &cyclic_rack, py::arg("n"));

    m.def("connected", &is_connected);
    m.def("faithful", &is_faithful);
    m.def("orbits", [](const Rack& x) {
        OrbitPartition o = inner_orbits(x);
        return py::make_tuple(o.blocks, o.group_order);
    });
    m.def(
        "homogeneous",
        [](const Rack& x, int bound) -> py::object {
            HomogeneityResult h = is_homogeneous(x, bound);
            if (!h.known) return py::none();
            return py::bool_(h.homogeneous);
        },
        py::arg("x"), py::arg("bound") = 8, "True, False, or None when above the search bound");

    py::class_<Diagram>(m, "Diagram")
        .def_static("parse", &Diagram::parse, py::arg("text"))
        .def_property_readonly("crossings", &Diagram::crossing_count)
        .def_property_readonly("arcs", &Diagram::arc_count)
        .def_property_readonly("regions", &Diagram::region_count)
        .def_property_readonly("components", &Diagram::component_count)
        .def_property_readonly("writhe", &Diagram::writhe)
        .def_property_readonly("free_loops", &Diagram::free_loop_count)
        .def("pd", &Diagram::to_pd_text)
        .def("json", &Diagram::to_json)
        .def("with_infinity", &Diagram::with_infinity, py::arg("region"))
        .def("r1_insert", &Diagram::r1_insert, py::arg("arc"), py::arg("chirality"))
        .def("r2_insert", &Diagram::r2_insert, py::arg("arc_over"), py::arg("arc_under"))
        .def_static("connected_sum", &Diagram::connected_sum, py::arg("d1"), py::arg("d2"),
                    py::arg("arc1"), py::arg("arc2"))
        .def("__repr__", [](const Diagram& d) {
            return "<Diagram crossings=" + std::to_string(d.crossing_count()) +
                   " components=" + std::to_string(d.component_count()) + ">";
        });

    m.def("count_colorings", &count_colorings, py::arg("diagram"), py::arg("rack"));
    m.def("colorings", [](const Diagram& d, const Rack& x) {
        std::vector<std::vector<int>> out;
        for (const Coloring& c : enumerate_colorings(d, x)) out.push_back(c.arc_color);
        return out;
    });
    m.def("count_shadow_colorings", &count_shadow_colorings, py::arg("diagram"),
          py::arg("rack"));
    m.def("shadow_colorings", [](const Diagram& d, const Rack& x) {
        py::list out;
        for (const ShadowColoring& sc : enumerate_shadow_colorings(d, x))
            out.append(py::make_tuple(sc.coloring.arc_color, sc.region_color));
        return out;
    });

    m.def(
        "homology",
        [](const Rack& x, const std::string& theory, int degree, int mod, int bound) {
            return group_to_dict(homology(x, theory_from_string(theory), degree, mod, bound));
        },
        py::arg("rack"), py::arg("theory"), py::arg("degree"), py::arg("mod") = 0,
        py::arg("bound") = -1, "theory is R, D or Q; mod 0 means integer coefficients");
    m.def(
        "cohomology",
        [](const Rack& x, const std::string& theory, int degree, int mod, int bound) {
            return group_to_dict(cohomology(x, theory_from_string(theory), degree, mod, bound));
        },
        py::arg("rack"), py::arg("theory"), py::arg("degree"), py::arg("mod") = 0,
        py::arg("bound") = -1);

    py::class_<Cocycle>(m, "Cocycle")
        .def_property_readonly("degree", [](const Cocycle& c) { return c.degree; })
        .def_property_readonly("mod", [](const Cocycle& c) { return c.mod; })
        .def_property_readonly("entries",
                               [](const Cocycle& c) {
                                   py::dict d;
                                   for (const auto& [t, v] : c.entries)
                                       d[py::tuple(py::cast(t))] = v;
                                   return d;
                               })
        .def("eval", &Cocycle::eval, py::arg("tuple"))
        .def("__repr__", [](const Cocycle& c) {
            return "<Cocycle degree=" + std::to_string(c.degree) +
                   " mod=" + std::to_string(c.mod) + ">";
        });
    m.def("load_cocycle", &load_cocycle_file, py::arg("path"));
    m.def("pullback", &pullback_to_shadow, py::arg("phi"), py::arg("carrier_size"));
    m.def("is_cocycle", &is_cocycle, py::arg("rack"), py::arg("cocycle"), py::arg("bound") = -1);
    m.def(
        "find_cocycles",
        [](const Rack& x, int degree, int mod) {
            FoundCocycles f = find_cocycles(x, degree, mod);
            return py::make_tuple(f.basis, f.coboundary);
        },
        py::arg("rack"), py::arg("degree"), py::arg("mod"),
        "returns (cocycles, coboundary_flags)");

    m.def(
        "statesum2",
        [](const Diagram& d, const Rack& x, const Cocycle& phi) {
            return sum_to_dict(statesum_2cocycle(d, x, phi));
        },
        py::arg("diagram"), py::arg("rack"), py::arg("phi"));
    m.def(
        "shadow_statesum3",
        [](const Diagram& d, const Rack& x, const Cocycle& theta) {
            return sum_to_dict(shadow_statesum_3cocycle(d, x, theta));
        },
        py::arg("diagram"), py::arg("rack"), py::arg("theta"));

    m.def(
        "verify_connected_sum",
        [](const Rack& x, const Diagram& d1, const Diagram& d2,
           const std::vector<Cocycle>& cocycles) {
            ConnectedSumReport r = verify_connected_sum(x, d1, d2, cocycles);
            py::dict d;
            d["applicable"] = r.applicable;
            d["refusal"] = r.refusal;
            d["counts"] = py::make_tuple(r.col1, r.col2, r.col_sum);
            d["shadow_counts"] = py::make_tuple(r.scol1, r.scol2, r.scol_sum);
            d["counts_ok"] = r.counts_ok;
            d["shadow_counts_ok"] = r.shadow_counts_ok;
            d["statesum_ok"] = r.statesum_ok;
            d["passed"] = r.passed();
            return d;
        },
        py::arg("rack"), py::arg("d1"), py::arg("d2"),
        py::arg("cocycles") = std::vector<Cocycle>{});

    m.def(
        "graph_components",
        [](const Rack& x, bool quandle) {
            return component_count(quandle ? quandle_graph(x) : rack_graph(x));
        },
        py::arg("rack"), py::arg("quandle") = false);
    m.def(
        "graph_dot",
        [](const Rack& x, bool quandle) {
            return dot_export(quandle ? quandle_graph(x) : rack_graph(x));
        },
        py::arg("rack"), py::arg("quandle") = false);
    m.def(
        "census_json",
        [](const Rack& x, bool action) {
            return census_to_json(action ? action_quandle_census(x)
                                         : extended_quandle_census(x));
        },
        py::arg("rack"), py::arg("action") = false);
    m.def(
        "space_homology",
        [](const Rack& x, const std::string& kind, int i, int mod, int bound) {
            return group_to_dict(space_homology(x, space_from_string(kind), i, mod, bound));
        },
        py::arg("rack"), py::arg("kind"), py::arg("degree"), py::arg("mod") = 0,
        py::arg("bound") = -1, "kind is rack, extended_rack or extended_quandle");

    m.def(
        "verify",
        [](const std::string& suite, const std::string& fixture_dir) {
            VerifyReport r = run_suite(suite, fixture_dir);
            return py::make_tuple(r.passed(), r.to_text());
        },
        py::arg("suite"), py::arg("fixture_dir"), "returns (passed, report_text)");
    m.def("suite_names", &suite_names);
}
