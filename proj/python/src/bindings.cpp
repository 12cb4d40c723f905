#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eigenprime/arith.hpp"
#include "eigenprime/cli.hpp"
#include "eigenprime/counting.hpp"
#include "eigenprime/density.hpp"
#include "eigenprime/errors.hpp"
#include "eigenprime/regions.hpp"
#include "eigenprime/surface.hpp"

namespace py = pybind11;
using namespace eigenprime;

namespace {

py::object big_int(u128 v) {
    const std::string s = to_string(v);
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object fraction(const ExactRational& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    auto as_int = [](const mpz_class& z) {
        return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
    };
    return Fraction(as_int(q.get_num()), as_int(q.get_den()));
}

Ratio to_ratio(const py::object& v) {
    if (py::isinstance<py::str>(v)) return Ratio::parse(v.cast<std::string>());
    if (py::isinstance<py::int_>(v)) return Ratio(v.cast<std::int64_t>());
    if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator"))
        return Ratio(v.attr("numerator").cast<std::int64_t>(), v.attr("denominator").cast<std::int64_t>());
    throw py::type_error("slope must be an int, a Fraction or a 'p/q' string");
}

CountMethod to_method(const std::string& s) {
    if (s == "fast") return CountMethod::fast;
    if (s == "brute") return CountMethod::brute;
    throw py::value_error("method must be 'fast' or 'brute'");
}

SumMethod to_sum_method(const std::string& s) {
    if (s == "direct") return SumMethod::direct;
    if (s == "iterative") return SumMethod::iterative;
    throw py::value_error("method must be 'direct' or 'iterative'");
}

py::tuple triple(const Triple& z) { return py::make_tuple(z.z0, z.z1, z.z2); }

Triple from_tuple(const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>& t) {
    return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

py::object pair_or_none(const std::optional<ParamPair>& p) {
    if (!p) return py::none();
    return py::make_tuple(p->m, p->n);
}

py::dict region_dict(const RegionCount& c) {
    py::dict d;
    d["total"] = c.total_coprime;
    d["mod3_distinct"] = c.coprime_mod3_distinct;
    d["mod3_equal"] = c.coprime_mod3_equal;
    return d;
}

TriangleRegion make_region(std::int64_t M, const py::object& k1, const py::object& k2, const py::object& k3) {
    TriangleRegion r{M, to_ratio(k1), to_ratio(k2), std::nullopt};
    if (!k3.is_none()) r.k3 = to_ratio(k3);
    return r;
}

py::dict report_dict(const CountReport& r) {
    py::dict d;
    d["N"] = r.N;
    d["x_plus"] = big_int(r.x_plus);
    d["y_plus"] = big_int(r.y_plus);
    d["xs"] = r.xs;
    d["ys"] = r.ys;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact prime and coprime triple counts on z0^2 - z1^2 + z2^2 - z0 z2 = 0";

    py::register_exception<capacity_error>(m, "CapacityError", PyExc_OverflowError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);

    py::class_<ArithTables>(m, "Tables")
        .def(py::init([](std::uint64_t limit) { return ArithTables::build(limit); }), py::arg("limit"),
             py::call_guard<py::gil_scoped_release>())
        .def_property_readonly("limit", &ArithTables::limit)
        .def("mobius", &ArithTables::mobius)
        .def("totient", &ArithTables::totient)
        .def("divisor_count", &ArithTables::divisor_count)
        .def("omega", &ArithTables::omega)
        .def("is_prime", &ArithTables::is_prime)
        .def("prime_count", &ArithTables::prime_count)
        .def("prime_count_ap", &ArithTables::prime_count_ap, py::arg("n"), py::arg("q"), py::arg("a"))
        .def("coprime_count", &ArithTables::coprime_count_up_to, py::arg("bound"), py::arg("n"))
        .def("totient_sum", &ArithTables::totient_sum)
        .def("totient_ratio_sum", [](const ArithTables& t, std::uint64_t n) { return fraction(t.totient_ratio_sum(n)); })
        .def(
            "totient_sum_div3",
            [](const ArithTables& t, std::uint64_t n, const std::string& method) {
                return t.totient_sum_div3(n, to_sum_method(method));
            },
            py::arg("n"), py::arg("method") = "direct")
        .def(
            "totient_ratio_sum_div3",
            [](const ArithTables& t, std::uint64_t n, const std::string& method) {
                return fraction(t.totient_ratio_sum_div3(n, to_sum_method(method)));
            },
            py::arg("n"), py::arg("method") = "direct");

    m.def("is_prime", py::overload_cast<std::uint64_t>(&eigenprime::is_prime));
    m.def("required_table_limit", &required_table_limit);

    // surface
    m.def("q_value", [](std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> z) { return q_value(from_tuple(z)); });
    m.def("on_surface", [](std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> z) { return on_surface(from_tuple(z)); });
    m.def("phi_map", [](int k, std::uint64_t mm, std::uint64_t n) { return triple(phi_map(k, mm, n)); });
    m.def("in_omega", &in_omega);
    m.def("classify", [](std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> z) {
        const Classification c = classify(from_tuple(z));
        return py::make_tuple(static_cast<int>(c.tag), pair_or_none(c.pair));
    });
    m.def(
        "enumerate_solutions",
        [](std::uint64_t N, unsigned threads) {
            std::vector<SurfacePoint> pts;
            {
                py::gil_scoped_release release;
                pts = enumerate_coprime_solutions(N, threads);
            }
            py::list out;
            for (const auto& p : pts) out.append(py::make_tuple(static_cast<int>(p.tag), pair_or_none(p.pair), triple(p.z)));
            return out;
        },
        py::arg("N"), py::arg("threads") = 1);
    m.def("dihedral_char_poly", [](double angle) {
        const SurfacePolynomial p = dihedral_char_poly(angle);
        py::dict d;
        d["c00"] = p.c00;
        d["c11"] = p.c11;
        d["c22"] = p.c22;
        d["c02"] = p.c02;
        d["residual"] = p.residual;
        return d;
    });

    // regions
    m.def(
        "count_region",
        [](const ArithTables& t, std::int64_t M, py::object k1, py::object k2, py::object k3, const std::string& method) {
            const TriangleRegion r = make_region(M, k1, k2, k3);
            const RegionCount c = r.k3 ? count_region_cut(t, r, to_method(method)) : count_region(t, r, to_method(method));
            return region_dict(c);
        },
        py::arg("tables"), py::arg("M"), py::arg("k1"), py::arg("k2"), py::arg("k3") = py::none(),
        py::arg("method") = "fast");
    m.def(
        "triangle_area",
        [](std::int64_t M, py::object k1, py::object k2, py::object k3) {
            return triangle_area(make_region(M, k1, k2, k3));
        },
        py::arg("M"), py::arg("k1"), py::arg("k2"), py::arg("k3") = py::none());
    m.def(
        "count_coprime_box_modp",
        [](const ArithTables& t, std::uint64_t M, std::uint64_t p, const std::string& method) {
            return count_coprime_box_modp(t, M, p, to_method(method));
        },
        py::arg("tables"), py::arg("M"), py::arg("p"), py::arg("method") = "fast");

    // counting
    m.def(
        "count_all",
        [](const ArithTables& t, std::uint64_t N, const std::string& method, unsigned threads) {
            CountReport r;
            {
                py::gil_scoped_release release;
                r = count_all(t, N, to_method(method), threads);
            }
            return report_dict(r);
        },
        py::arg("tables"), py::arg("N"), py::arg("method") = "fast", py::arg("threads") = 1);
    m.def(
        "plane_counts",
        [](const ArithTables& t, std::uint64_t N, const std::string& method) {
            const PlaneCounts p = plane_baseline_counts(t, N, to_method(method));
            return py::make_tuple(big_int(p.xa), big_int(p.ya));
        },
        py::arg("tables"), py::arg("N"), py::arg("method") = "fast");
    m.def("surface_sandwich", [](const ArithTables& t, std::uint64_t N) {
        const SandwichReport s = surface_sandwich(t, N);
        return py::make_tuple(s.inner, s.family, s.outer);
    });

    // density
    m.def("zeta", &zeta, py::arg("s"), py::arg("tol") = 1e-12);
    m.def("constants", [] {
        const ConstantsTable c = constants();
        py::dict d;
        d["zeta2"] = c.zeta2;
        d["zeta3"] = c.zeta3;
        d["three_zeta3"] = c.three_zeta3;
        d["lower_norm"] = c.lower_norm;
        d["upper_norm"] = c.upper_norm;
        d["liminf_bound"] = c.liminf_bound;
        d["limsup_bound"] = c.limsup_bound;
        d["ys_lower"] = c.ys_lower;
        d["ys_upper"] = c.ys_upper;
        d["plane_ratio"] = c.plane_ratio;
        d["ys_limit"] = c.ys_limit;
        return d;
    });
    m.def(
        "density_sample",
        [](const ArithTables& t, std::uint64_t N, const std::string& method, bool with_plane) {
            const DensitySample s = density_sample(t, N, to_method(method), 1, with_plane);
            py::dict d;
            d["N"] = s.N;
            d["x_plus"] = big_int(s.x_plus);
            d["y_plus"] = big_int(s.y_plus);
            d["xs"] = s.xs;
            d["ys"] = s.ys;
            d["p_plus"] = s.p_plus;
            d["p_s"] = s.p_s;
            d["ratio"] = s.ratio ? py::cast(*s.ratio) : py::none();
            d["p_plus_logN"] = s.p_plus_logN;
            d["p_s_logN"] = s.p_s_logN;
            if (s.plane) {
                d["xa"] = big_int(s.plane->xa);
                d["ya"] = big_int(s.plane->ya);
                d["plane_ratio"] = s.plane_ratio ? py::cast(*s.plane_ratio) : py::none();
            }
            return d;
        },
        py::arg("tables"), py::arg("N"), py::arg("method") = "fast", py::arg("with_plane") = false);

    // command line
    m.def("run_cli", [](std::vector<std::string> args) -> py::tuple {
        args.insert(args.begin(), "eigenprime");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        const cli::ParseOutcome parsed = cli::parse_args(static_cast<int>(argv.size()), argv.data(), cli::threads_from_env());
        if (!parsed.config) return py::make_tuple(parsed.exit_code, std::string(), parsed.message);
        std::ostringstream out, err;
        const int status = cli::run(*parsed.config, out, err);
        return py::make_tuple(status, out.str(), err.str());
    });
}
