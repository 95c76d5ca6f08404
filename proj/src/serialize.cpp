#include "ifccr/serialize.hpp"

#include <cmath>
#include <sstream>

namespace ifccr {

json params_to_json(const ChannelParams& p) {
    return json{{"n11", p.n11}, {"n12", p.n12}, {"n21", p.n21},
                {"n22", p.n22}, {"n1c", p.n1c}, {"n2c", p.n2c}};
}

ChannelParams params_from_json(const json& j) {
    return new_params(j.at("n11"), j.at("n12"), j.at("n21"), j.at("n22"), j.at("n1c"), j.at("n2c"));
}

json region_to_json(const RateRegion& r, const ChannelParams* p) {
    json j;
    if (p) j["params"] = params_to_json(*p);
    j["inequalities"] = json::array();
    for (const auto& q : r.inequalities()) {
        json iq{{"a", q.a}, {"b", q.b}, {"c", q.c}};
        if (!q.label.empty()) iq["label"] = q.label;
        j["inequalities"].push_back(iq);
    }
    j["vertices"] = json::array();
    for (const auto& [x, y] : r.vertices())
        j["vertices"].push_back(json::array({x.to_string(), y.to_string()}));
    return j;
}

RateRegion region_from_json(const json& j) {
    std::vector<Inequality> qs;
    for (const auto& iq : j.at("inequalities"))
        qs.push_back({iq.at("a"), iq.at("b"), iq.at("c"), iq.value("label", "")});
    return RateRegion::from_inequalities(std::move(qs));
}

json scheme_to_json(const LinearScheme& s) {
    auto rows = [](const gf2::BitMatrix& m) { return json(m.to_rows()); };
    return json{{"k1", s.k1},         {"k2", s.k2},         {"A1", rows(s.A1)},
                {"A2", rows(s.A2)},   {"Ac1", rows(s.Ac1)}, {"Ac2", rows(s.Ac2)}};
}

LinearScheme scheme_from_json(const json& j) {
    auto mat = [&](const char* key) {
        return gf2::BitMatrix::from_rows(j.at(key).get<std::vector<std::string>>());
    };
    LinearScheme s;
    s.k1 = j.at("k1");
    s.k2 = j.at("k2");
    s.A1 = mat("A1");
    s.A2 = mat("A2");
    s.Ac1 = mat("Ac1");
    s.Ac2 = mat("Ac2");
    return s;
}

json report_to_json(const DecodabilityReport& r) {
    auto ranks = [](const ReceiverRanks& rr) {
        return json{{"signal", rr.signal}, {"interference", rr.interference}, {"joint", rr.joint}};
    };
    return json{{"rx1_ok", r.rx1_ok}, {"rx2_ok", r.rx2_ok},
                {"achieved", json::array({r.k1, r.k2})},
                {"rx1_ranks", ranks(r.rx1)}, {"rx2_ranks", ranks(r.rx2)}};
}

json oracle_to_json(const OracleResult& r) {
    json j;
    j["params"] = params_to_json(r.params);
    j["achievable"] = json::array();
    for (const auto& [a, b] : r.achievable) j["achievable"].push_back(json::array({a, b}));
    j["incomplete"] = r.incomplete;
    j["witnesses"] = json::object();
    for (const auto& [key, scheme] : r.witnesses)
        j["witnesses"][std::to_string(key.first) + "," + std::to_string(key.second)] =
            scheme_to_json(scheme);
    j["stats"] = json{{"schemes_checked", r.stats.schemes_checked},
                      {"canonical_classes", r.stats.canonical_classes},
                      {"elapsed_ms", r.stats.elapsed_ms}};
    return j;
}

json gap_to_json(const GapReport& g) {
    auto pts = [](const std::vector<std::pair<int, int>>& v) {
        json a = json::array();
        for (const auto& [x, y] : v) a.push_back(json::array({x, y}));
        return a;
    };
    return json{{"achieved_inside", pts(g.achieved_inside)},
                {"not_achieved", pts(g.not_achieved)},
                {"soundness_violations", pts(g.soundness_violations)},
                {"integer_corners", pts(g.integer_corners)},
                {"all_corners_achieved", g.all_corners_achieved}};
}

json simulation_to_json(const SimulationReport& r) {
    json j{{"trials", r.trials}, {"errors", r.errors}, {"seed", r.seed}};
    if (r.collision)
        j["collision"] = json::array({r.collision->first, r.collision->second});
    return j;
}

namespace {
std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}
}  // namespace

std::string region_to_svg(const RateRegion& r, const std::string& title) {
    const double size = 600.0, margin = 60.0;
    double r1 = r.max_r1().to_double(), r2 = r.max_r2().to_double();
    double span = std::max({r1, r2, 1.0});
    auto X = [&](double v) { return margin + v / span * (size - 2 * margin); };
    auto Y = [&](double v) { return size - margin - v / span * (size - 2 * margin); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\">\n";
    if (!title.empty()) s << "<title>" << title << "</title>\n";
    s << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    // axes
    s << "<line x1=\"" << fmt3(X(0)) << "\" y1=\"" << fmt3(Y(0)) << "\" x2=\"" << fmt3(X(span))
      << "\" y2=\"" << fmt3(Y(0)) << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << fmt3(X(0)) << "\" y1=\"" << fmt3(Y(0)) << "\" x2=\"" << fmt3(X(0))
      << "\" y2=\"" << fmt3(Y(span)) << "\" stroke=\"black\"/>\n";
    for (long long t = 0; t <= static_cast<long long>(span); ++t) {
        s << "<line x1=\"" << fmt3(X(static_cast<double>(t))) << "\" y1=\"" << fmt3(Y(0) - 4)
          << "\" x2=\"" << fmt3(X(static_cast<double>(t))) << "\" y2=\"" << fmt3(Y(0) + 4)
          << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << fmt3(X(static_cast<double>(t))) << "\" y=\"" << fmt3(Y(0) + 20)
          << "\" font-size=\"12\" text-anchor=\"middle\">" << t << "</text>\n";
        s << "<line x1=\"" << fmt3(X(0) - 4) << "\" y1=\"" << fmt3(Y(static_cast<double>(t)))
          << "\" x2=\"" << fmt3(X(0) + 4) << "\" y2=\"" << fmt3(Y(static_cast<double>(t)))
          << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << fmt3(X(0) - 10) << "\" y=\"" << fmt3(Y(static_cast<double>(t)) + 4)
          << "\" font-size=\"12\" text-anchor=\"end\">" << t << "</text>\n";
    }
    s << "<text x=\"" << fmt3(X(span / 2)) << "\" y=\"" << fmt3(size - 15)
      << "\" font-size=\"14\" text-anchor=\"middle\">R1</text>\n";
    s << "<text x=\"18\" y=\"" << fmt3(Y(span / 2)) << "\" font-size=\"14\">R2</text>\n";
    // region polygon
    s << "<polygon points=\"";
    for (const auto& [x, y] : r.vertices())
        s << fmt3(X(x.to_double())) << "," << fmt3(Y(y.to_double())) << " ";
    s << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" stroke-width=\"2\"/>\n";
    for (const auto& [x, y] : r.vertices()) {
        s << "<circle cx=\"" << fmt3(X(x.to_double())) << "\" cy=\"" << fmt3(Y(y.to_double()))
          << "\" r=\"3\" fill=\"#08519c\"/>\n";
        s << "<text x=\"" << fmt3(X(x.to_double()) + 6) << "\" y=\"" << fmt3(Y(y.to_double()) - 6)
          << "\" font-size=\"12\">(" << x.to_string() << "," << y.to_string() << ")</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace ifccr
