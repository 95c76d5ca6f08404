#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ifccr/serialize.hpp"

namespace py = pybind11;
using namespace ifccr;

namespace {

std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_ifccr, mod) {
    mod.doc() = "exact-arithmetic core for the linear deterministic interference channel "
                "with a cognitive relay";

    py::register_exception<regime_error>(mod, "RegimeError", PyExc_ValueError);
    py::register_exception<region_error>(mod, "RegionError", PyExc_ValueError);

    py::class_<ChannelParams>(mod, "ChannelParams")
        .def_readonly("n11", &ChannelParams::n11)
        .def_readonly("n12", &ChannelParams::n12)
        .def_readonly("n21", &ChannelParams::n21)
        .def_readonly("n22", &ChannelParams::n22)
        .def_readonly("n1c", &ChannelParams::n1c)
        .def_readonly("n2c", &ChannelParams::n2c)
        .def_readonly("m", &ChannelParams::m)
        .def("__eq__", [](const ChannelParams& a, const ChannelParams& b) { return a == b; })
        .def("__repr__", [](const ChannelParams& p) {
            return "ChannelParams(" + std::to_string(p.n11) + "," + std::to_string(p.n12) + "," +
                   std::to_string(p.n21) + "," + std::to_string(p.n22) + "," +
                   std::to_string(p.n1c) + "," + std::to_string(p.n2c) + ")";
        });

    mod.def("new_params", &new_params, py::arg("n11"), py::arg("n12"), py::arg("n21"),
            py::arg("n22"), py::arg("n1c"), py::arg("n2c"));
    mod.def("swap_users", &swap_users);
    mod.def("transmit",
            [](const ChannelParams& p, const std::string& x1, const std::string& xc,
               const std::string& x2) {
                auto out = transmit(p, gf2::BitVector::from_string(x1),
                                    gf2::BitVector::from_string(xc),
                                    gf2::BitVector::from_string(x2));
                return py::make_tuple(out.y1.to_string(), out.y2.to_string());
            },
            "channel law on '0'/'1' strings of length m; returns (y1, y2)");

    mod.def("rank", [](const std::vector<std::string>& rows) {
        return gf2::rank(gf2::BitMatrix::from_rows(rows));
    });
    mod.def("eval_term", &eval_term, py::arg("params"), py::arg("term"),
            "named rank-calculus term, e.g. H(Y1|X2) or I(V12;V1c)");

    py::class_<RateRegion>(mod, "RateRegion")
        .def("vertices",
             [](const RateRegion& r) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& [x, y] : r.vertices())
                     out.emplace_back(x.to_string(), y.to_string());
                 return out;
             })
        .def("inequalities",
             [](const RateRegion& r) {
                 std::vector<std::tuple<int, int, long long, std::string>> out;
                 for (const auto& q : r.inequalities()) out.emplace_back(q.a, q.b, q.c, q.label);
                 return out;
             })
        .def("contains",
             [](const RateRegion& r, const std::string& r1, const std::string& r2) {
                 return r.contains({Rational::parse(r1), Rational::parse(r2)});
             })
        .def("equals", &RateRegion::equals)
        .def("is_subset_of", &RateRegion::is_subset_of)
        .def("mirrored", &RateRegion::mirrored)
        .def("to_json", [](const RateRegion& r) { return dump(region_to_json(r)); })
        .def("to_svg", [](const RateRegion& r) { return region_to_svg(r); })
        .def_static("from_json",
                    [](const std::string& s) { return region_from_json(json::parse(s)); });

    mod.def("closed_bound_values",
            [](const ChannelParams& p) { return closed_bound_values(p).value; });
    mod.def("rank_bound_values",
            [](const ChannelParams& p) { return rank_bound_values(p).value; });
    mod.def("bound_labels", [] {
        return std::vector<std::string>(SevenBounds::kLabel.begin(), SevenBounds::kLabel.end());
    });
    mod.def("outer_bound_closed", &outer_bound_closed);
    mod.def("outer_bound_rank", &outer_bound_rank);
    mod.def("deterministic_thm1", &deterministic_thm1);
    mod.def("capacity_mixed_regime", &capacity_mixed_regime);
    mod.def("capacity_no_interference", &capacity_no_interference);

    py::class_<LinearScheme>(mod, "LinearScheme")
        .def_readonly("k1", &LinearScheme::k1)
        .def_readonly("k2", &LinearScheme::k2)
        .def("to_json", [](const LinearScheme& s) { return dump(scheme_to_json(s)); })
        .def_static("from_json",
                    [](const std::string& s) { return scheme_from_json(json::parse(s)); });

    mod.def("example1_scheme", &example1_scheme);
    mod.def("example2_scheme", [](const ChannelParams& p, int corner) {
        return example2_scheme(p, corner == 2 ? Corner::two : Corner::one);
    }, py::arg("params"), py::arg("corner") = 1);
    mod.def("decode_check", [](const ChannelParams& p, const LinearScheme& s) {
        return dump(report_to_json(decode_check(p, s)));
    });
    mod.def("brute_force_decode_check",
            [](const ChannelParams& p, const LinearScheme& s, int cap) {
                return dump(report_to_json(brute_force_decode_check(p, s, cap)));
            },
            py::arg("params"), py::arg("scheme"), py::arg("max_total_bits") = 12);
    mod.def("simulate_scheme",
            [](const ChannelParams& p, const LinearScheme& s, long long trials, uint64_t seed) {
                return dump(simulation_to_json(simulate_scheme(p, s, trials, seed)));
            },
            py::arg("params"), py::arg("scheme"), py::arg("trials") = 1000, py::arg("seed") = 1);

    mod.def("search_linear_schemes",
            [](const ChannelParams& p, int kmax, int m_cap, long long budget_ms) {
                OracleOptions opt;
                opt.kmax = kmax;
                opt.m_cap = m_cap;
                opt.budget_ms = budget_ms;
                auto res = search_linear_schemes(p, opt);
                auto gap = compare_to_bound(res, outer_bound_closed(p));
                json j = oracle_to_json(res);
                j["gap"] = gap_to_json(gap);
                return dump(j);
            },
            py::arg("params"), py::arg("kmax") = 2, py::arg("m_cap") = 3,
            py::arg("budget_ms") = 60000);
}
