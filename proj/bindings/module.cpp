#include "lamina/json_io.hpp"
#include "lamina/render.hpp"
#include "lamina/torus.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lamina;

namespace {

py::int_ int_to_py(const Int& v) { return py::int_(py::str(v.str())); }

py::object rat_to_fraction(const Rat& v) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(int_to_py(numerator(v)), int_to_py(denominator(v)));
}

Angle as_angle(const py::object& obj) {
    if (py::isinstance<Angle>(obj)) return obj.cast<Angle>();
    if (py::isinstance<py::str>(obj)) return angle_from_string(obj.cast<std::string>());
    if (py::isinstance<py::tuple>(obj)) {
        auto t = obj.cast<py::tuple>();
        return Angle(Int(py::str(t[0]).cast<std::string>()), Int(py::str(t[1]).cast<std::string>()));
    }
    fail(errc::domain, "expected an Angle, a 'p/q' string, or a (p, q) tuple");
}

PrimitiveMajor major_from_py(const py::object& obj) {
    if (py::isinstance<PrimitiveMajor>(obj)) return obj.cast<PrimitiveMajor>();
    if (py::isinstance<py::str>(obj)) return major_from_json(obj.cast<std::string>());
    fail(errc::domain, "expected a PrimitiveMajor or a JSON string");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact rational dynamics on the circle: primitive majors, "
              "invariant laminations and core entropy";

    py::register_exception<error>(m, "LaminaError");

    py::class_<Angle>(m, "Angle")
        .def(py::init([](const std::string& s) { return angle_from_string(s); }))
        .def(py::init([](long p, long q) { return Angle(Int(p), Int(q)); }))
        .def_property_readonly("numerator", [](const Angle& a) { return int_to_py(a.numerator()); })
        .def_property_readonly("denominator",
                               [](const Angle& a) { return int_to_py(a.denominator()); })
        .def_property_readonly("fraction", [](const Angle& a) { return rat_to_fraction(a.value()); })
        .def("__float__", [](const Angle& a) { return to_double(a.value()); })
        .def("__str__", &Angle::str)
        .def("__repr__", [](const Angle& a) { return "Angle('" + a.str() + "')"; })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const Angle& a) { return py::hash(py::str(a.str())); });
    py::implicitly_convertible<py::str, Angle>();

    py::class_<OrbitInfo>(m, "OrbitInfo")
        .def_readonly("preperiod", &OrbitInfo::preperiod)
        .def_readonly("period", &OrbitInfo::period)
        .def_readonly("points", &OrbitInfo::points);

    py::class_<Leaf>(m, "Leaf")
        .def(py::init([](const py::object& a, const py::object& b) {
            return Leaf(as_angle(a), as_angle(b));
        }))
        .def_readonly("a", &Leaf::a)
        .def_readonly("b", &Leaf::b)
        .def("__str__", &Leaf::str)
        .def("__repr__", &Leaf::str)
        .def(py::self == py::self)
        .def(py::self < py::self);

    py::class_<EquivalenceClass>(m, "EquivalenceClass")
        .def(py::init([](const std::vector<py::object>& angles) {
            EquivalenceClass c;
            for (const auto& a : angles) c.angles.push_back(as_angle(a));
            return c;
        }))
        .def_readonly("angles", &EquivalenceClass::angles);

    py::class_<PrimitiveMajor>(m, "PrimitiveMajor")
        .def(py::init([](int degree, const std::vector<std::vector<py::object>>& classes) {
            std::vector<EquivalenceClass> cs;
            for (const auto& cls : classes) {
                EquivalenceClass c;
                for (const auto& a : cls) c.angles.push_back(as_angle(a));
                cs.push_back(std::move(c));
            }
            return canonical_major(degree, std::move(cs));
        }))
        .def_readonly("degree", &PrimitiveMajor::degree)
        .def_readonly("classes", &PrimitiveMajor::classes)
        .def_property_readonly("is_generic", &PrimitiveMajor::generic)
        .def("to_json", [](const PrimitiveMajor& m) { return major_to_json(m); })
        .def("__repr__", [](const PrimitiveMajor& m) { return major_to_json(m); })
        .def(py::self == py::self);

    py::class_<FiniteLamination>(m, "FiniteLamination")
        .def_readonly("degree", &FiniteLamination::degree)
        .def_property_readonly("leaves",
                               [](const FiniteLamination& l) {
                                   return std::vector<Leaf>(l.leaves.begin(), l.leaves.end());
                               })
        .def("__len__", [](const FiniteLamination& l) { return l.leaves.size(); })
        .def("contains", &FiniteLamination::contains)
        .def("to_json", [](const FiniteLamination& l) { return lamination_to_json(l); });

    py::class_<TorusRect>(m, "TorusRect")
        .def_property_readonly("x", [](const TorusRect& r) {
            return py::make_tuple(rat_to_fraction(r.x.lo), rat_to_fraction(r.x.hi));
        })
        .def_property_readonly("y", [](const TorusRect& r) {
            return py::make_tuple(rat_to_fraction(r.y.lo), rat_to_fraction(r.y.hi));
        });

    py::class_<RectangleSet>(m, "RectangleSet")
        .def_property_readonly("rectangles", [](const RectangleSet& r) { return r.rects(); })
        .def_property_readonly("area", [](const RectangleSet& r) { return rat_to_fraction(r.area()); })
        .def("__len__", [](const RectangleSet& r) { return r.size(); })
        .def("symmetric_under_swap", &RectangleSet::symmetric_under_swap)
        .def("covers_diagonal", &RectangleSet::covers_diagonal)
        .def("to_json", [](const RectangleSet& r) { return rectangles_to_json(r); });

    py::class_<StartSequence>(m, "StartSequence")
        .def(py::init([](const std::vector<py::object>& starts) {
            StartSequence s;
            for (const auto& a : starts) s.starts.push_back(as_angle(a));
            return s;
        }))
        .def_readonly("starts", &StartSequence::starts)
        .def(py::self == py::self);

    py::class_<QuotientGraph>(m, "QuotientGraph")
        .def_readonly("vertex_count", &QuotientGraph::vertex_count)
        .def_property_readonly("edges",
                               [](const QuotientGraph& g) {
                                   py::list out;
                                   for (const auto& e : g.edges)
                                       out.append(py::make_tuple(e.u, e.v, rat_to_fraction(e.length)));
                                   return out;
                               })
        .def("betti", &QuotientGraph::betti);

    py::class_<PairBasis>(m, "PairBasis")
        .def_readonly("theta", &PairBasis::theta)
        .def_readonly("points", &PairBasis::points)
        .def_readonly("pairs", &PairBasis::pairs)
        .def_readonly("division_lo", &PairBasis::division_lo)
        .def_readonly("division_hi", &PairBasis::division_hi);

    py::class_<TransitionMatrix>(m, "TransitionMatrix")
        .def_readonly("dimension", &TransitionMatrix::dimension)
        .def_property_readonly("columns",
                               [](const TransitionMatrix& t) {
                                   py::list out;
                                   for (const auto& col : t.columns) out.append(col);
                                   return out;
                               })
        .def("dense", [](const TransitionMatrix& t) {
            py::list rows;
            for (const auto& row : t.dense()) {
                py::list r;
                for (const auto& v : row) r.append(int_to_py(v));
                rows.append(r);
            }
            return rows;
        });

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("theta", &SweepRow::theta)
        .def_readonly("rho", &SweepRow::rho)
        .def_readonly("entropy", &SweepRow::entropy)
        .def_readonly("dimension", &SweepRow::dimension);

    py::class_<OmegaLevel>(m, "OmegaLevel")
        .def_readonly("theta", &OmegaLevel::theta)
        .def_readonly("level", &OmegaLevel::level)
        .def_readonly("cells", &OmegaLevel::cells);

    py::class_<SeparatingSet>(m, "SeparatingSet")
        .def_readonly("theta", &SeparatingSet::theta)
        .def_readonly("depth", &SeparatingSet::depth)
        .def_readonly("post", &SeparatingSet::post)
        .def_readonly("leaves", &SeparatingSet::leaves);

    // angle layer
    m.def("make_angle", [](long p, long q) { return Angle(Int(p), Int(q)); });
    m.def("tuple_map", [](const py::object& x, int d) { return tuple_map(as_angle(x), d); });
    m.def("orbit", [](const py::object& x, int d) { return orbit(as_angle(x), d); });
    m.def("preferred_half_preimage",
          [](const py::object& x) { return preferred_half_preimage(as_angle(x)); });
    m.def("cyclic_between", [](const py::object& a, const py::object& x, const py::object& b) {
        return cyclic_between(as_angle(a), as_angle(x), as_angle(b));
    });
    m.def("arc_distance", [](const py::object& x, const py::object& y) {
        return rat_to_fraction(arc_distance(as_angle(x), as_angle(y)));
    });

    // majors
    m.def("validate", [](const py::object& m_) {
        std::vector<std::string> out;
        for (const auto& v : validate(major_from_py(m_))) out.push_back(v.detail);
        return out;
    });
    m.def("from_starting_points", [](const std::vector<py::object>& starts, int degree) {
        StartSequence s;
        for (const auto& a : starts) s.starts.push_back(as_angle(a));
        return from_starting_points(s, degree);
    });
    m.def("normalize_starts", [](const std::vector<py::object>& pts, int degree) {
        std::vector<Angle> v;
        for (const auto& a : pts) v.push_back(as_angle(a));
        return normalize_starts(v, degree);
    });
    m.def("starting_points", [](const py::object& m_) { return starting_points(major_from_py(m_)); });
    m.def("derive", [](const py::object& m_) { return derive(major_from_py(m_)); });
    m.def("quotient_graph", [](const py::object& m_) { return quotient_graph(major_from_py(m_)); });
    m.def("met_eval", [](const py::object& m_, const py::object& x, const py::object& y) {
        return rat_to_fraction(met_eval(major_from_py(m_), as_angle(x), as_angle(y)));
    });
    m.def(
        "distance",
        [](const py::object& a, const py::object& b, int resolution) {
            MetricEstimate e = distance(major_from_py(a), major_from_py(b), resolution);
            return py::make_tuple(rat_to_fraction(e.value), rat_to_fraction(e.error_bound));
        },
        py::arg("a"), py::arg("b"), py::arg("resolution") = 256);
    m.def("cubic_from_bisector", [](const std::string& a, const py::object& theta) {
        return cubic_from_bisector(rat_from_string(a), as_angle(theta));
    });
    m.def("random_generic_major", &random_generic_major, py::arg("degree"), py::arg("seed") = 0);
    m.def("major_from_json", &major_from_json);
    m.def("quadratic_major", [](const py::object& theta) { return quadratic_major(as_angle(theta)); });

    // laminations
    m.def("leaves_cross", &leaves_cross);
    m.def("major_to_lamination", [](const py::object& m_) {
        return major_to_lamination(major_from_py(m_));
    });
    m.def("good_region", &good_region);
    m.def(
        "backward_lift",
        [](const py::object& m_, int depth, const std::string& variant) {
            LiftVariant v = variant == "eps-limit" ? LiftVariant::eps_limit : LiftVariant::literal;
            return backward_lift(major_from_py(m_), depth, v);
        },
        py::arg("major"), py::arg("depth"), py::arg("variant") = "literal");
    m.def("check_forward_invariant", [](const FiniteLamination& lam) {
        py::list out;
        for (const auto& v : check_forward_invariant(lam).missing)
            out.append(py::make_tuple(v.leaf, v.image));
        return out;
    });
    m.def("clean", &clean);
    m.def("lamination_from_json", &lamination_from_json);

    // entropy
    m.def("pair_basis", [](const py::object& theta) { return pair_basis(as_angle(theta)); });
    m.def("build_matrix", [](const py::object& theta) { return build_matrix(as_angle(theta)); });
    m.def("spectral_radius", &spectral_radius);
    m.def("exact_spectral_radius", &exact_spectral_radius, py::arg("matrix"),
          py::arg("tol") = 1e-10);
    m.def("core_entropy", [](const py::object& theta) { return core_entropy(as_angle(theta)); });
    m.def("hausdorff_dimension",
          [](const py::object& theta) { return hausdorff_dimension(as_angle(theta)); });
    m.def("sweep", &sweep, py::arg("max_denominator"), py::arg("jobs") = 1);
    m.def("sweep_to_csv", &sweep_to_csv);

    // torus dynamics
    m.def("post_major", [](const py::object& theta) { return post_major(as_angle(theta)); });
    m.def(
        "omega_level",
        [](const py::object& theta, int level) { return omega_level(as_angle(theta), level); },
        py::arg("theta"), py::arg("level"));
    m.def(
        "growth_rate_estimate",
        [](const py::object& theta, int n_max) { return growth_rate_estimate(as_angle(theta), n_max); },
        py::arg("theta"), py::arg("n_max"));
    m.def(
        "separating_leaves",
        [](const py::object& theta, int depth) { return separating_leaves(as_angle(theta), depth); },
        py::arg("theta"), py::arg("depth"));
    m.def(
        "check_forward_invariance_S",
        [](const py::object& theta, int depth) {
            py::list out;
            for (const auto& v : check_forward_invariance_S(as_angle(theta), depth))
                out.append(py::make_tuple(v.leaf, v.image));
            return out;
        },
        py::arg("theta"), py::arg("depth"));

    // render
    m.def(
        "render_disk",
        [](const py::object& obj, const std::string& style) {
            RenderConfig cfg;
            cfg.style = style == "chord" ? GeodesicStyle::straight_chord
                                         : GeodesicStyle::hyperbolic_arc;
            if (py::isinstance<FiniteLamination>(obj))
                return render_disk(obj.cast<FiniteLamination>(), cfg);
            return render_disk(major_from_py(obj), cfg);
        },
        py::arg("lamination_or_major"), py::arg("style") = "hyperbolic");
    m.def(
        "render_torus",
        [](const RectangleSet& r, const std::vector<std::pair<py::object, py::object>>& markers) {
            std::vector<std::pair<Angle, Angle>> ms;
            for (const auto& [a, b] : markers) ms.emplace_back(as_angle(a), as_angle(b));
            return render_torus(r, ms);
        },
        py::arg("rectangles"), py::arg("markers") = std::vector<std::pair<py::object, py::object>>{});
    m.def(
        "render_entropy_plot",
        [](const std::vector<SweepRow>& rows, bool half) {
            return render_entropy_plot(rows, RenderConfig{}, half);
        },
        py::arg("rows"), py::arg("half_range") = false);
}
