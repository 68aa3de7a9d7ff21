#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hypsurf/cover.hpp"
#include "hypsurf/euclid.hpp"
#include "hypsurf/mobius.hpp"
#include "hypsurf/polygon.hpp"
#include "hypsurf/rep_io.hpp"
#include "hypsurf/rep_solver.hpp"
#include "hypsurf/surface_rep.hpp"

namespace py = pybind11;
using namespace hypsurf;

namespace {

void bind_errors(py::module_& m) {
    // Translators run newest first, so the subclasses must follow the base.
    auto base = py::register_exception<Error>(m, "HypsurfError", PyExc_RuntimeError);
    py::register_exception<InvalidMatrix>(m, "InvalidMatrix", base);
    py::register_exception<InvalidPoint>(m, "InvalidPoint", base);
    py::register_exception<DegenerateDenominator>(m, "DegenerateDenominator", base);
    py::register_exception<NonPositiveScale>(m, "NonPositiveScale", base);
    py::register_exception<InvalidCoverElement>(m, "InvalidCoverElement", base);
    py::register_exception<NotInKernel>(m, "NotInKernel", base);
    py::register_exception<RelationViolated>(m, "RelationViolated", base);
    py::register_exception<NonIntegral>(m, "NonIntegral", base);
    py::register_exception<GenusTooSmall>(m, "GenusTooSmall", base);
    py::register_exception<PairingFailed>(m, "PairingFailed", base);
    py::register_exception<DidNotConverge>(m, "DidNotConverge", base);
    py::register_exception<InvalidLattice>(m, "InvalidLattice", base);
    py::register_exception<ParseError>(m, "ParseError", base);
}

void bind_mobius(py::module_& m) {
    py::class_<Mat2>(m, "Mat2")
        .def(py::init<>())
        .def(py::init<double, double, double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"),
             py::arg("d"), py::arg("det_tol") = kDetTolerance)
        .def_property_readonly("a", &Mat2::a)
        .def_property_readonly("b", &Mat2::b)
        .def_property_readonly("c", &Mat2::c)
        .def_property_readonly("d", &Mat2::d)
        .def("entries", &Mat2::entries)
        .def("det", &Mat2::det)
        .def("trace", &Mat2::trace)
        .def("inverse", &Mat2::inverse)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const Mat2& x) {
            std::ostringstream os;
            os << "Mat2(" << x << ")";
            return os.str();
        });

    py::class_<HPoint>(m, "HPoint")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def(py::init<Complex>(), py::arg("z"))
        .def_property_readonly("x", &HPoint::x)
        .def_property_readonly("y", &HPoint::y)
        .def_property_readonly("z", &HPoint::z)
        .def("__repr__", [](const HPoint& p) {
            std::ostringstream os;
            os << "HPoint(" << p << ")";
            return os.str();
        });

    py::enum_<IsometryClass>(m, "IsometryClass")
        .value("Identity", IsometryClass::Identity)
        .value("Elliptic", IsometryClass::Elliptic)
        .value("Parabolic", IsometryClass::Parabolic)
        .value("Hyperbolic", IsometryClass::Hyperbolic);

    py::class_<Classification>(m, "Classification")
        .def_readonly("kind", &Classification::kind)
        .def_readonly("trace", &Classification::trace)
        .def_readonly("confident", &Classification::confident);

    m.def("mobius_act", &mobius_act, py::arg("m"), py::arg("z"));
    m.def("j_cocycle", &j_cocycle, py::arg("m"), py::arg("z"));
    m.def("classify", &classify, py::arg("m"), py::arg("trace_tol") = kTraceTolerance);
    m.def("hyp_distance", &hyp_distance, py::arg("z"), py::arg("w"));
    m.def("path_length", [](const std::vector<HPoint>& pts) { return path_length(pts); }, py::arg("points"));
    m.def("rotation", &rotation, py::arg("theta"));
    m.def("scaling", &scaling, py::arg("rho"));
    m.def("commutator", &commutator);
}

void bind_cover(py::module_& m) {
    py::class_<CoverElement>(m, "CoverElement")
        .def(py::init<>())
        .def(py::init<const Mat2&, Complex, double>(), py::arg("matrix"), py::arg("phi_i"),
             py::arg("exp_tol") = kExpTolerance)
        .def_property_readonly("matrix", &CoverElement::matrix)
        .def_property_readonly("phi_i", &CoverElement::phi_i)
        .def(py::self * py::self);

    py::class_<KernelValue>(m, "KernelValue")
        .def_readonly("k", &KernelValue::k)
        .def_readonly("residual", &KernelValue::residual)
        .def_readonly("matrix_residual", &KernelValue::matrix_residual);

    m.def("lift", &lift, py::arg("m"), py::arg("k") = 0);
    m.def("phi_at", &phi_at, py::arg("e"), py::arg("z"));
    m.def("cover_mul", &cover_mul);
    m.def("cover_inv", &cover_inv);
    m.def("kernel_value", &kernel_value, py::arg("e"), py::arg("kernel_tol") = kKernelTolerance);
}

void bind_surface(py::module_& m) {
    py::class_<Representation>(m, "Representation")
        .def(py::init<std::vector<Mat2>, std::vector<Mat2>>(), py::arg("a"), py::arg("b"))
        .def_static("trivial", &Representation::trivial, py::arg("genus"))
        .def_property_readonly("genus", &Representation::genus)
        .def_property_readonly("a", [](const Representation& r) { return std::vector<Mat2>(r.a().begin(), r.a().end()); })
        .def_property_readonly("b", [](const Representation& r) { return std::vector<Mat2>(r.b().begin(), r.b().end()); })
        .def_property_readonly("validated", &Representation::validated)
        .def("relation_product", &Representation::relation_product)
        .def("validate", &Representation::validate, py::arg("tol") = kRelationTolerance)
        .def("dumps", [](const Representation& r, const std::string& meta) {
            std::ostringstream os;
            write_representation(os, r, meta);
            return os.str();
        }, py::arg("meta") = "")
        .def_static("loads", [](const std::string& text) {
            std::istringstream is(text);
            return read_representation(is).rep;
        });

    py::class_<ToledoResult>(m, "ToledoResult")
        .def_readonly("value", &ToledoResult::value)
        .def_readonly("raw", &ToledoResult::raw)
        .def_readonly("residual", &ToledoResult::residual)
        .def_readonly("kernel_matrix_residual", &ToledoResult::kernel_matrix_residual)
        .def_readonly("psl_only", &ToledoResult::psl_only)
        .def_readonly("marginal", &ToledoResult::marginal);

    m.def("relation_residual", &relation_residual);
    m.def("toledo", [](const Representation& r, const std::vector<long>& branches) { return toledo(r, branches); },
          py::arg("rep"), py::arg("branches") = std::vector<long>{});
    m.def("milnor_check", &milnor_check);
    m.def("goldman_fuchsian_test", &goldman_fuchsian_test);
    m.def("reflect_conjugate", &reflect_conjugate);
    m.def("conjugate", &conjugate, py::arg("rep"), py::arg("g"));
    m.def("branch_independence_check", &branch_independence_check, py::arg("rep"), py::arg("seed"),
          py::arg("trials") = 1);
}

void bind_polygon(py::module_& m) {
    py::class_<HyperbolicPolygon>(m, "HyperbolicPolygon")
        .def_property_readonly("genus", &HyperbolicPolygon::genus)
        .def_property_readonly("vertices", [](const HyperbolicPolygon& p) {
            return std::vector<HPoint>(p.vertices().begin(), p.vertices().end());
        });
    m.def("regular_polygon", &regular_polygon, py::arg("genus"));
    m.def("interior_angles", [](const HyperbolicPolygon& p) { return interior_angles(p.vertices()); });
    m.def("polygon_area", py::overload_cast<const HyperbolicPolygon&>(&polygon_area));
    m.def("side_pairings", &side_pairings);
}

void bind_solver(py::module_& m) {
    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("rep", &SolveResult::rep)
        .def_readonly("iterations", &SolveResult::iterations)
        .def_readonly("residual", &SolveResult::residual)
        .def_property_readonly("coords", [](const SolveResult& s) {
            return std::vector<double>(s.coords.values().begin(), s.coords.values().end());
        });

    py::class_<RankReport>(m, "RankReport")
        .def_readonly("rank", &RankReport::rank)
        .def_readonly("singular_values", &RankReport::singular_values)
        .def_readonly("variety_dim", &RankReport::variety_dim)
        .def_readonly("moduli_dim", &RankReport::moduli_dim);

    m.def("solve", [](int genus, std::uint64_t seed, int max_iter, double tol) {
        SolverOptions o;
        o.max_iter = max_iter;
        o.tol = tol;
        return solve(genus, seed, o);
    }, py::arg("genus"), py::arg("seed"), py::arg("max_iter") = 500, py::arg("tol") = 1e-14);
    m.def("jacobian_rank", [](const Representation& r) { return jacobian_rank(r); });
}

void bind_euclid(py::module_& m) {
    m.def("euclid_reduce", [](std::pair<double, double> a, std::pair<double, double> b, std::pair<double, double> p) {
        const euclid::LatticeGroup lattice({a.first, a.second}, {b.first, b.second});
        const euclid::Reduced r = euclid::reduce(lattice, {p.first, p.second});
        return py::make_tuple(py::make_tuple(r.point.x, r.point.y), r.n, r.m);
    }, py::arg("a"), py::arg("b"), py::arg("p"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hyperbolic plane isometries, the universal cover of SL(2,R) and the Toledo invariant";
    bind_errors(m);
    bind_mobius(m);
    bind_cover(m);
    bind_surface(m);
    bind_polygon(m);
    bind_solver(m);
    bind_euclid(m);
}
