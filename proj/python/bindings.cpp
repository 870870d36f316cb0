#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "thetafay/errors.hpp"
#include "thetafay/fay.hpp"
#include "thetafay/group.hpp"
#include "thetafay/indrep.hpp"
#include "thetafay/relcheck.hpp"
#include "thetafay/theta.hpp"

namespace py = pybind11;
using namespace thetafay;

namespace {

Parity to_parity(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw py::value_error("sector must be 'even' or 'odd'");
}

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.get_str())); }

py::list to_py(const BigVector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const std::vector<BigVector>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(to_py(v));
    return out;
}

py::dict rank_dict(const RankReport& r) {
    py::dict d;
    d["rank"] = r.rank;
    d["rows"] = r.rows;
    d["cols"] = r.cols;
    d["tol"] = r.tol;
    d["pivots"] = r.pivots;
    d["gap_ratio"] = r.gap_ratio;
    d["conclusive"] = r.conclusive;
    return d;
}

py::dict dims_dict(const FayDimensions& d) {
    py::dict out;
    out["V+"] = d.v_plus;
    out["W+"] = d.w_plus;
    out["V-"] = d.v_minus;
    out["W-"] = d.w_minus;
    return out;
}

SiegelPoint to_siegel(const ComplexMatrix& tau) { return SiegelPoint::from_complex(tau); }

}  // namespace

PYBIND11_MODULE(_thetafay, mod) {
    mod.doc() = "Fay operators, Sp(g, F2) and theta nullwert relations";

    auto base = py::register_exception<Error>(mod, "ThetafayError");
    py::register_exception<DimensionError>(mod, "DimensionError", base.ptr());
    py::register_exception<GenusError>(mod, "GenusError", base.ptr());
    py::register_exception<ParityError>(mod, "ParityError", base.ptr());
    py::register_exception<AlgebraError>(mod, "AlgebraError", base.ptr());
    py::register_exception<SpectrumViolation>(mod, "SpectrumViolation", base.ptr());
    py::register_exception<NumericalError>(mod, "NumericalError", base.ptr());

    py::class_<Characteristic>(mod, "Characteristic")
        .def(py::init(&Characteristic::parse), py::arg("text"))
        .def_static("from_index", &Characteristic::from_index, py::arg("g"), py::arg("index"))
        .def_property_readonly("genus", &Characteristic::genus)
        .def_property_readonly("index", &Characteristic::index)
        .def_property_readonly("even", [](const Characteristic& m) { return parity(m) == Parity::Even; })
        .def("__str__", &Characteristic::to_string)
        .def("__repr__", [](const Characteristic& m) { return "Characteristic('" + m.to_string() + "')"; })
        .def("__eq__", [](const Characteristic& a, const Characteristic& b) { return a == b; })
        .def("__hash__", [](const Characteristic& m) { return std::hash<std::uint32_t>{}(m.index()) ^ m.genus(); });

    mod.def("pairing", &pairing_e, py::arg("m"), py::arg("n"));
    mod.def(
        "sector",
        [](int g, const std::string& s) {
            const Sector sec(g, to_parity(s));
            return std::vector<Characteristic>(sec.elements().begin(), sec.elements().end());
        },
        py::arg("g"), py::arg("sector"));

    mod.def("group_order", [](int g) { return enumerate_group(g).size(); }, py::arg("g"));
    mod.def("sp_order_formula", &sp_order_formula, py::arg("g"));
    mod.def(
        "double_coset_count",
        [](int g, const std::string& s) {
            return double_coset_count(sector_base(g, to_parity(s)), enumerate_group(g));
        },
        py::arg("g"), py::arg("sector"));
    mod.def(
        "character_norm",
        [](int g, const std::string& s, bool signed_character) {
            return character_norm(enumerate_group(g), to_parity(s), signed_character).norm.to_string();
        },
        py::arg("g"), py::arg("sector"), py::arg("signed") = true);

    mod.def(
        "fay_matrix",
        [](int g, const std::string& s) {
            const auto m = build_fay(g, to_parity(s));
            py::array_t<std::int64_t> out({m.size(), m.size()});
            auto view = out.mutable_unchecked<2>();
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < m.size(); ++j) view(i, j) = m.matrix()(i, j);
            return out;
        },
        py::arg("g"), py::arg("sector"));
    mod.def("fay_dimensions", [](int g) { return dims_dict(fay_dimensions(g)); }, py::arg("g"));
    mod.def("fay_dimension_formulas", [](int g) { return dims_dict(fay_dimension_formulas(g)); }, py::arg("g"));
    mod.def(
        "fay_eigenspaces",
        [](int g, const std::string& s) {
            const auto spaces = exact_eigenspaces(build_fay(g, to_parity(s)));
            py::dict out;
            out["V"] = py::make_tuple(spaces.v.eigenvalue, to_py(spaces.v.vectors));
            out["W"] = py::make_tuple(spaces.w.eigenvalue, to_py(spaces.w.vectors));
            return out;
        },
        py::arg("g"), py::arg("sector"));
    mod.def("distinguished_v", [](int g) { return to_py(distinguished_v(g)); },
            py::arg("g"));
    mod.def("distinguished_w", [](int g) { return to_py(distinguished_w(g)); },
            py::arg("g"));

    mod.def(
        "sample_siegel",
        [](int g, std::size_t count, std::uint64_t seed) {
            std::vector<ComplexMatrix> out;
            for (const auto& p : sample_siegel_points(g, count, seed)) out.push_back(p.tau());
            return out;
        },
        py::arg("g"), py::arg("count"), py::arg("seed"));
    mod.def(
        "theta_nullwert",
        [](const Characteristic& m, const ComplexMatrix& tau, double tol) {
            const auto e = theta_nullwert(m, to_siegel(tau), tol);
            return py::make_tuple(e.value, e.trunc_bound, e.radius);
        },
        py::arg("m"), py::arg("tau"), py::arg("tol") = kDefaultThetaTol);
    mod.def(
        "theta_gradient",
        [](const Characteristic& m, const ComplexMatrix& tau, double tol) {
            const auto e = theta_gradient(m, to_siegel(tau), tol);
            return py::make_tuple(e.value, e.trunc_bound, e.radius);
        },
        py::arg("m"), py::arg("tau"), py::arg("tol") = kDefaultThetaTol);

    mod.def(
        "rank_theta_powers",
        [](int g, int k, std::size_t n, std::uint64_t seed, double tol) {
            return rank_dict(rank_theta_powers(g, k, n, seed, tol));
        },
        py::arg("g"), py::arg("k"), py::arg("nsamples"), py::arg("seed"), py::arg("tol") = kDefaultRankTol);
    mod.def(
        "rank_gradient_span",
        [](int g, std::size_t n, std::uint64_t seed, double tol) {
            return rank_dict(rank_gradient_span(g, n, seed, tol));
        },
        py::arg("g"), py::arg("nsamples"), py::arg("seed"), py::arg("tol") = kDefaultRankTol);
    mod.def(
        "verify_vplus_relations",
        [](int g, std::size_t n, std::uint64_t seed) {
            const auto r = verify_vplus_relations(g, n, seed);
            return py::make_tuple(r.max_residual, r.relations);
        },
        py::arg("g"), py::arg("nsamples"), py::arg("seed"));
    mod.def(
        "verify_wminus_relations",
        [](int g, std::size_t n, std::uint64_t seed) {
            const auto r = verify_wminus_relations(g, n, seed);
            return py::make_tuple(r.max_residual, r.relations);
        },
        py::arg("g"), py::arg("nsamples"), py::arg("seed"));
    mod.def(
        "phi_witness",
        [](int g, int k, const std::string& which) {
            const auto c = which == "V" ? SplitComponent::V : SplitComponent::W;
            if (which != "V" && which != "W") throw py::value_error("which must be 'V' or 'W'");
            const auto w = component_witness(g, k, c);
            return py::make_tuple(w.to_string(), phi_operator(w, g - 1).to_string());
        },
        py::arg("g"), py::arg("k"), py::arg("which") = "V");

    mod.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
    mod.attr("__version__") = cli::kToolVersion;
}
