#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "crystal/enumerate.hpp"
#include "crystal/job.hpp"
#include "crystal/lgv.hpp"
#include "crystal/matrix_model.hpp"
#include "crystal/products.hpp"
#include "crystal/spectral.hpp"
#include "crystal/verify.hpp"

namespace py = pybind11;
using namespace crystal;

namespace {

py::object to_int(const bigint& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

// {exponent tuple: int}
py::dict to_dict(const TruncatedSeries& s) {
    py::dict d;
    for (const auto& t : s.terms()) d[py::tuple(py::cast(t.exp))] = to_int(t.coef);
    return d;
}

py::object fraction(const rational& r) {
    return py::module_::import("fractions").attr("Fraction")(to_int(r.get_num()), to_int(r.get_den()));
}

rational from_py(const py::handle& x) {
    rational r(py::str(x).cast<std::string>());
    r.canonicalize();
    return r;
}

CurveParams params(const py::handle& Q, const py::handle& mu, const py::handle& eps2) {
    return {from_py(Q), from_py(mu), from_py(eps2)};
}

py::object from_json(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(crystal_dt, m) {
    m.doc() = "Crystal melting partition functions over truncated power series";

    // Exception classes live on the module; the translator looks them up by kind.
    const py::exception<error> base(m, "CrystalError");
    py::exception<error>(m, "InvalidInput", base.ptr());
    py::exception<error>(m, "Unsupported", base.ptr());
    py::exception<error>(m, "InternalLimit", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const error& e) {
            const char* name = "CrystalError";
            switch (e.kind()) {
            case error_kind::invalid_input: name = "InvalidInput"; break;
            case error_kind::unsupported: name = "Unsupported"; break;
            case error_kind::internal_limit: name = "InternalLimit"; break;
            default: break;
            }
            py::set_error(py::module_::import("crystal_dt").attr(name), e.what());
        }
    });

    py::class_<ChamberSpec>(m, "ChamberSpec")
        .def_static("make", &ChamberSpec::make, py::arg("L"), py::arg("rho"), py::arg("theta_doubled"))
        .def_property_readonly("L", &ChamberSpec::L)
        .def_property_readonly("rho", &ChamberSpec::rho)
        .def_property_readonly("theta_images", &ChamberSpec::theta_images)
        .def("weights", [](const ChamberSpec& s) {
            std::vector<std::vector<int>> out;
            for (const auto& w : chamber_weights(s)) out.push_back(w.exponents);
            return out;
        })
        .def("__repr__", &ChamberSpec::to_string)
        .def(py::self == py::self);

    m.def("c3_spec", &c3_spec);
    m.def("conifold_theta", &conifold_theta, py::arg("n"));

    m.def(
        "enumerate_z",
        [](const ChamberSpec& spec, int D, bool transposed, int max_rows) {
            EnumerateOptions o;
            o.transposed = transposed;
            o.max_rows = max_rows;
            return to_dict(enumerate_z(spec, D, o));
        },
        py::arg("spec"), py::arg("degree"), py::arg("transposed") = false, py::arg("max_rows") = -1);

    m.def("macmahon", [](int D) { return to_dict(macmahon(D)); }, py::arg("degree"));
    m.def("conifold_product", [](int n, int D) { return to_dict(conifold_product(n, D)); }, py::arg("n"),
          py::arg("degree"));
    m.def("prefactor_cn", [](int n, int D) { return to_dict(prefactor_cn(n, D)); }, py::arg("n"), py::arg("degree"));

    m.def(
        "toeplitz_c3",
        [](int D) {
            const auto r = stabilized_toeplitz(c3_symbol(D), D);
            return py::make_tuple(to_dict(r.value), r.stabilized_at);
        },
        py::arg("degree"));
    m.def(
        "toeplitz_conifold",
        [](int n, int D) {
            const auto r = stabilized_toeplitz(conifold_symbol(n, D), D);
            return py::make_tuple(to_dict(prefactor_cn(n, D) * r.value), r.stabilized_at);
        },
        py::arg("n"), py::arg("degree"));

    m.def("lgv_six_weight", [] {
        const auto g = six_weight_graph();
        return py::make_tuple(to_dict(lgv_det(g)), to_dict(nonintersecting_bruteforce(g)));
    });
    m.def(
        "lgv_random",
        [](std::uint64_t seed) {
            const auto g = random_layered_dag(seed);
            return py::make_tuple(to_dict(lgv_det(g)), to_dict(nonintersecting_bruteforce(g)));
        },
        py::arg("seed"));
    m.def("lgv_walkers", [](const ChamberSpec& spec, int N, int D) { return to_dict(lgv_det(walker_graph(spec, N, D))); },
          py::arg("spec"), py::arg("walkers"), py::arg("degree"));

    m.def(
        "mirror_map",
        [](py::handle Q, py::handle mu, py::handle eps2) {
            const auto c = mirror_map(params(Q, mu, eps2));
            return py::make_tuple(fraction(c.Q1), fraction(c.Q2), fraction(c.Q3));
        },
        py::arg("Q"), py::arg("mu"), py::arg("eps2"));
    m.def(
        "s3_equivariance_check",
        [](py::handle Q, py::handle mu, py::handle eps2) { return s3_equivariance_check(params(Q, mu, eps2)).ok; },
        py::arg("Q"), py::arg("mu"), py::arg("eps2"));
    m.def(
        "spp_limit_check",
        [](py::handle Q, py::handle mu) {
            const auto r = spp_limit_check(params(Q, mu, py::int_(0)));
            py::dict d;
            d["ok"] = r.ok;
            d["A"] = fraction(r.A);
            d["B"] = fraction(r.B);
            d["scale"] = fraction(r.scale);
            d["message"] = r.message;
            return d;
        },
        py::arg("Q"), py::arg("mu"));
    m.def("spp_identity_squared", &spp_identity_squared, py::arg("n"), py::arg("degree"));

    m.def(
        "run_job",
        [](const std::string& geometry, int D, int chamber, const std::vector<std::string>& engines) {
            JobConfig cfg;
            cfg.geometry = parse_geometry(geometry);
            cfg.degree = D;
            cfg.chamber = chamber;
            cfg.engines.clear();
            for (const auto& e : engines) cfg.engines.push_back(parse_engine(e));
            return from_json(run_job(cfg).to_json());
        },
        py::arg("geometry"), py::arg("degree"), py::arg("chamber") = 0,
        py::arg("engines") = std::vector<std::string>{"enumerate", "product"});

    m.def(
        "verify_all",
        [](int max_degree, int max_chamber, std::uint64_t seed, bool inject_fault) {
            VerifyOptions o{max_degree, max_chamber, seed, inject_fault};
            return from_json(checks_to_json(verify_all(o)));
        },
        py::arg("max_degree") = 6, py::arg("max_chamber") = 2, py::arg("seed") = 1, py::arg("inject_fault") = false);
}
