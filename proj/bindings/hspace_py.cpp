// Python surface for the core operations: spaces, compact sets,
// Hausdorff distances, hyperspace verification batteries, quotients, and
// the worked examples. Structured results cross the boundary through the
// JSON serializers so Python sees plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hspace/demos.hpp"
#include "hspace/errors.hpp"
#include "hspace/generate.hpp"
#include "hspace/hausdorff.hpp"
#include "hspace/hyperspace.hpp"
#include "hspace/io.hpp"
#include "hspace/mds.hpp"
#include "hspace/quotient.hpp"
#include "hspace/suites.hpp"

namespace py = pybind11;
using namespace hspace;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

py::object report_to_py(const Report& r) { return json_to_py(report_to_json(r)); }

// pybind11 holds Space non-const; the C++ API only hands out const
// pointers, so factories cast on the way through.
std::shared_ptr<Space> unconst(SpacePtr p) { return std::const_pointer_cast<Space>(p); }

CompactSet make_set(const std::shared_ptr<Space>& space, const py::list& pts) {
    std::vector<Point> members;
    for (const auto& e : pts) {
        if (py::isinstance<py::int_>(e)) {
            members.push_back(space->point(e.cast<int>()));
        } else {
            members.push_back(Point::with_coords(e.cast<std::vector<double>>()));
        }
    }
    return CompactSet(space, std::move(members));
}

SuiteOptions suite_options(std::uint64_t seed, double tol, double eps, int spaces,
                           int max_points) {
    SuiteOptions o;
    o.seed = seed;
    o.tol = tol;
    o.eps = eps;
    o.spaces = spaces;
    o.max_points = max_points;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite Hausdorff-metric toolkit";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<ActionError>(m, "ActionError", PyExc_RuntimeError);
    py::register_exception<DegenerateQuotientError>(m, "DegenerateQuotientError",
                                                    PyExc_RuntimeError);

    py::class_<Space, std::shared_ptr<Space>>(m, "Space")
        .def_property_readonly("dim", &Space::dim)
        .def_property_readonly("name", &Space::name)
        .def_property_readonly("is_matrix", &Space::is_matrix)
        .def("__repr__",
             [](const Space& s) { return "<Space " + s.name() + ">"; });

    m.def("euclid_cutoff_space",
          [](int dim) { return unconst(Space::euclid_cutoff(dim)); }, py::arg("dim"),
          "Euclidean distance capped at 1");
    m.def("disk_pullback_space",
          [](int dim) { return unconst(Space::disk_pullback(dim)); },
          py::arg("dim") = 2,
          "distance pulled back through the open-disk embedding p/(1+|p|)");
    m.def(
        "matrix_space",
        [](int n, const std::vector<double>& tri, const std::vector<std::string>& labels) {
            return unconst(Space::matrix(FiniteSpace(n, tri, labels)));
        },
        py::arg("n"), py::arg("dist"), py::arg("labels") = std::vector<std::string>{},
        "finite space from a strict lower-triangle distance list");
    m.def(
        "matrix_space_from_points",
        [](const std::vector<std::vector<double>>& pts) {
            return unconst(
                Space::matrix(FiniteSpace::from_points(pts, BoundedMetric::euclid_cutoff())));
        },
        py::arg("points"), "finite space sampled from a cloud under cutoff Euclid");

    py::class_<CompactSet>(m, "CompactSet")
        .def(py::init(&make_set), py::arg("space"), py::arg("points"),
             "points: coordinate lists, or integer ids for matrix spaces")
        .def_property_readonly("size", &CompactSet::size)
        .def_property_readonly(
            "points", [](const CompactSet& s) { return json_to_py(point_cloud_to_json(s)); })
        .def("__len__", &CompactSet::size)
        .def("__repr__", [](const CompactSet& s) {
            return "<CompactSet of " + std::to_string(s.size()) + " points>";
        });

    m.def("directed_hausdorff", &directed_hausdorff, py::arg("a"), py::arg("b"));
    m.def("hausdorff_distance", &hausdorff_distance, py::arg("a"), py::arg("b"));
    m.def(
        "hausdorff_distance_fast",
        [](const CompactSet& a, const CompactSet& b) {
            SpatialIndex ia(a), ib(b);
            return hausdorff_distance_fast(a, b, ia, ib);
        },
        py::arg("a"), py::arg("b"), "indexed route; bitwise-equal to hausdorff_distance");
    m.def("epsilon_net", &epsilon_net, py::arg("s"), py::arg("eps"));

    m.def(
        "verify_metric_axioms",
        [](const std::shared_ptr<Space>& space, double tol) {
            py::list out;
            for (const auto& v : verify_metric_axioms(space->finite(), tol))
                out.append(py::make_tuple(v.axiom, v.describe(), v.residual));
            return out;
        },
        py::arg("space"), py::arg("tol") = 1e-12,
        "violations of the bounded-metric axioms; empty means a valid metric");

    m.def(
        "run_metric_suite",
        [](std::uint64_t seed, double tol, int spaces, int max_points) {
            return report_to_py(run_metric_suite(suite_options(seed, tol, 0.1, spaces, max_points)));
        },
        py::arg("seed") = 424242, py::arg("tol") = 1e-12, py::arg("spaces") = 20,
        py::arg("max_points") = 8);
    m.def(
        "run_universal_suite",
        [](std::uint64_t seed, int spaces, int max_points) {
            return report_to_py(
                run_universal_suite(suite_options(seed, 1e-12, 0.1, spaces, max_points)));
        },
        py::arg("seed") = 424242, py::arg("spaces") = 20, py::arg("max_points") = 6);
    m.def(
        "run_continuity_suite",
        [](std::uint64_t seed, double eps, int families) {
            return report_to_py(
                run_continuity_suite(suite_options(seed, 1e-12, eps, families, 8)));
        },
        py::arg("seed") = 424242, py::arg("eps") = 0.1, py::arg("families") = 20);
    m.def(
        "run_compactness_suite",
        [](std::uint64_t seed, double eps, int spaces, int max_points) {
            return report_to_py(
                run_compactness_suite(suite_options(seed, 1e-12, eps, spaces, max_points)));
        },
        py::arg("seed") = 424242, py::arg("eps") = 0.1, py::arg("spaces") = 20,
        py::arg("max_points") = 8);

    m.def(
        "permutation_quotient",
        [](const std::shared_ptr<Space>& space, const std::vector<std::vector<int>>& tables,
           double eps, int budget, double cluster_tol) {
            GroupAction act = GroupAction::permutation(space, tables);
            std::vector<Point> samples;
            for (int i = 0; i < space->size(); ++i) samples.push_back(space->point(i));
            return json_to_py(
                quotient_to_json(hausdorff_quotient(samples, act, eps, budget, cluster_tol)));
        },
        py::arg("space"), py::arg("tables"), py::arg("eps"), py::arg("budget") = 4096,
        py::arg("cluster_tol") = 0.2,
        "Hausdorff quotient of a permutation action on all points of a matrix space");

    m.def("morse_flow_demo",
          []() { return json_to_py(quotient_to_json(morse_flow_demo())); },
          "gradient flow of the height function on a 64-point circle");
    m.def(
        "mds_embed_2d",
        [](const std::vector<double>& dmat, int k) {
            py::list out;
            for (const auto& xy : mds_embed_2d(dmat, k))
                out.append(py::make_tuple(xy[0], xy[1]));
            return out;
        },
        py::arg("dmat"), py::arg("k"), "plane embedding of a k x k distance matrix");

    m.def("demo_example1_lines", [] {
        const auto r = demo_example1_lines();
        py::dict out;
        out["d_cutoff"] = r.d_cutoff;
        out["slopes"] = r.slopes;
        out["d_disk"] = r.d_disk;
        out["pass"] = r.pass;
        return out;
    });
    m.def("demo_collision_family", [](double eps, int length) {
        const auto r = demo_collision_family(eps, length);
        py::dict out;
        out["threshold_two"] = r.threshold_two;
        out["threshold_three"] = r.threshold_three;
        out["limit_gap"] = r.limit_gap;
        out["pass"] = r.pass;
        return out;
    }, py::arg("eps") = 0.1, py::arg("length") = 60);
}
