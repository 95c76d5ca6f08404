#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "ifccr/serialize.hpp"

namespace {

using namespace ifccr;

// Minimal TOML reader for the six-key params file: `key = value` lines,
// '#' comments, nothing else.
ChannelParams params_from_toml(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open params file: " + path);
    std::map<std::string, int> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string t = strip(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = strip(t.substr(0, eq));
        std::string val = strip(t.substr(eq + 1));
        static const std::set<std::string> keys = {"n11", "n12", "n21", "n22", "n1c", "n2c"};
        if (!keys.count(key))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (kv.count(key))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
        std::size_t pos = 0;
        int v = std::stoi(val, &pos);
        if (pos != val.size())
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": bad value '" + val + "'");
        kv[key] = v;
    }
    for (const char* k : {"n11", "n12", "n21", "n22", "n1c", "n2c"})
        if (!kv.count(k)) throw std::invalid_argument(path + ": missing key '" + std::string(k) + "'");
    return new_params(kv["n11"], kv["n12"], kv["n21"], kv["n22"], kv["n1c"], kv["n2c"]);
}

ChannelParams params_from_list(const std::string& list) {
    std::vector<int> v;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        v.push_back(std::stoi(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument("bad gain '" + tok + "'");
    }
    if (v.size() != 6)
        throw std::invalid_argument("--params needs six gains n11,n12,n21,n22,n1c,n2c");
    return new_params(v[0], v[1], v[2], v[3], v[4], v[5]);
}

struct ParamSource {
    std::string list;  // comma list
    std::string file;  // TOML file

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--params", list, "six gains n11,n12,n21,n22,n1c,n2c");
        auto* b = cmd->add_option("--params-file", file, "TOML file with the six named keys");
        a->excludes(b);  // both given -> error, never a silent override
        b->excludes(a);
    }

    ChannelParams resolve() const {
        if (!list.empty() && !file.empty())
            throw std::invalid_argument("--params and --params-file conflict");
        if (!file.empty()) return params_from_toml(file);
        if (!list.empty()) return params_from_list(list);
        throw std::invalid_argument("params required (--params or --params-file)");
    }
};

std::string params_line(const ChannelParams& p) {
    std::ostringstream s;
    s << "params: n11=" << p.n11 << " n12=" << p.n12 << " n21=" << p.n21 << " n22=" << p.n22
      << " n1c=" << p.n1c << " n2c=" << p.n2c << " (m=" << p.m << ")";
    return s.str();
}

std::string ineq_text(const Inequality& q) {
    std::ostringstream s;
    if (!q.label.empty()) s << "(" << q.label << ") ";
    bool first = true;
    if (q.a) { s << (q.a == 2 ? "2R1" : "R1"); first = false; }
    if (q.b) { s << (first ? "" : " + ") << (q.b == 2 ? "2R2" : "R2"); }
    s << " <= " << q.c;
    return s.str();
}

void print_region_text(std::ostream& out, const RateRegion& r, const std::string& name) {
    out << name << ":\n";
    for (const auto& q : r.inequalities()) out << "  " << ineq_text(q) << "\n";
    out << "  vertices:";
    for (const auto& [x, y] : r.vertices()) out << " (" << x.to_string() << "," << y.to_string() << ")";
    out << "\n";
}

std::vector<std::string> applicable_regimes(const ChannelParams& p) {
    std::vector<std::string> out;
    if (mixed_regime_applies(p)) out.push_back("Corollary IV.1");
    if (p.n12 == 0 && p.n21 == 0) out.push_back("Corollary IV.2");
    return out;
}

int cmd_region(const ChannelParams& p, const std::string& format) {
    auto closed = closed_bound_values(p);
    auto rank = rank_bound_values(p);
    if (closed.value != rank.value) {
        std::cerr << "consistency failure: closed form disagrees with rank evaluation\n";
        for (std::size_t i = 0; i < 7; ++i)
            std::cerr << "  (" << SevenBounds::kLabel[i] << ") closed=" << closed.value[i]
                      << " rank=" << rank.value[i]
                      << (closed.value[i] != rank.value[i] ? "  <-- mismatch" : "") << "\n";
        return 2;
    }
    auto region = closed.to_region();
    auto det = deterministic_thm1(p);
    auto regimes = applicable_regimes(p);
    std::optional<RateRegion> capacity;
    if (auto c = capacity_mixed_regime(p)) capacity = *c;
    else if (auto c2 = capacity_no_interference(p)) capacity = *c2;

    if (format == "json") {
        json j;
        j["params"] = params_to_json(p);
        j["outer_bound"] = region_to_json(region);
        j["deterministic"] = region_to_json(det);
        j["regimes"] = regimes;
        j["bounds"] = json::array();
        for (std::size_t i = 0; i < 7; ++i)
            j["bounds"].push_back(json{{"label", SevenBounds::kLabel[i]},
                                       {"a", SevenBounds::kShape[i].first},
                                       {"b", SevenBounds::kShape[i].second},
                                       {"value", closed.value[i]}});
        if (capacity) j["capacity"] = region_to_json(*capacity);
        std::cout << j.dump(2) << "\n";
    } else if (format == "svg") {
        std::cout << region_to_svg(region, params_line(p));
    } else if (format == "csv") {
        std::cout << "label,a,b,c\n";
        for (const auto& q : region.inequalities())
            std::cout << q.label << "," << q.a << "," << q.b << "," << q.c << "\n";
    } else {
        std::cout << params_line(p) << "\n";
        print_region_text(std::cout, region, "outer bound");
        print_region_text(std::cout, det, "deterministic region");
        std::cout << "regimes:";
        if (regimes.empty()) std::cout << " none";
        for (const auto& r : regimes) std::cout << " [" << r << "]";
        std::cout << "\n";
        if (capacity) print_region_text(std::cout, *capacity, "capacity");
    }
    return 0;
}

int cmd_scheme(const ChannelParams& p, const std::string& example, int corner, bool verify,
               long long simulate, uint64_t seed, const std::string& format) {
    LinearScheme s;
    if (example == "I") {
        s = example1_scheme(p);
    } else if (example == "II") {
        s = example2_scheme(p, corner == 2 ? Corner::two : Corner::one);
    } else {
        throw std::invalid_argument("--example must be I or II");
    }
    auto rep = decode_check(p, s);
    auto closed = outer_bound_closed(p);
    RatePoint pt{Rational(s.k1), Rational(s.k2)};
    bool on_corner = false;
    for (const auto& v : closed.vertices())
        if (v == pt) on_corner = true;

    std::optional<SimulationReport> sim;
    if (simulate > 0) sim = simulate_scheme(p, s, simulate, seed);
    if (verify) {
        auto brute = brute_force_decode_check(p, s);
        if (brute.rx1_ok != rep.rx1_ok || brute.rx2_ok != rep.rx2_ok) {
            std::cerr << "consistency failure: decode_check disagrees with brute force\n";
            return 2;
        }
    }

    if (format == "json") {
        json j;
        j["params"] = params_to_json(p);
        j["scheme"] = scheme_to_json(s);
        j["report"] = report_to_json(rep);
        j["rates"] = json::array({s.k1, s.k2});
        j["outer_bound_corner"] = on_corner;
        if (sim) j["simulation"] = simulation_to_json(*sim);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << params_line(p) << "\n";
        std::cout << "example " << example;
        if (example == "II") std::cout << " corner " << corner;
        std::cout << ": rates (" << s.k1 << "," << s.k2 << ")"
                  << (rep.both_ok() ? ", decodable" : ", NOT decodable")
                  << (on_corner ? ", corner of the outer bound" : "") << "\n";
        std::cout << "  rx1: signal rank " << rep.rx1.signal << ", interference rank "
                  << rep.rx1.interference << ", joint rank " << rep.rx1.joint
                  << (rep.rx1_ok ? " (ok)" : " (fail)") << "\n";
        std::cout << "  rx2: signal rank " << rep.rx2.signal << ", interference rank "
                  << rep.rx2.interference << ", joint rank " << rep.rx2.joint
                  << (rep.rx2_ok ? " (ok)" : " (fail)") << "\n";
        if (sim)
            std::cout << "  simulation: " << sim->trials << " trials, " << sim->errors
                      << " errors (seed " << sim->seed << ")\n";
    }
    return rep.both_ok() ? 0 : 2;
}

int cmd_sweep(int max_gain, std::vector<std::string> checks, const std::string& format) {
    if (max_gain < 0 || max_gain > 6) throw std::invalid_argument("--max-gain must be in [0,6]");
    if (checks.empty()) checks = {"closed-vs-rank", "mirror-symmetry"};
    for (const auto& c : checks)
        if (c != "closed-vs-rank" && c != "mirror-symmetry")
            throw std::invalid_argument("unknown check '" + c + "'");

    bool all_pass = true;
    std::ostream& out = std::cout;
    if (format != "text") out << "n11,n12,n21,n22,n1c,n2c,check,pass\n";
    int g = max_gain + 1;
    for (int n11 = 0; n11 < g; ++n11)
    for (int n12 = 0; n12 < g; ++n12)
    for (int n21 = 0; n21 < g; ++n21)
    for (int n22 = 0; n22 < g; ++n22)
    for (int n1c = 0; n1c < g; ++n1c)
    for (int n2c = 0; n2c < g; ++n2c) {
        auto p = new_params(n11, n12, n21, n22, n1c, n2c);
        for (const auto& check : checks) {
            bool pass;
            if (check == "closed-vs-rank") {
                pass = closed_bound_values(p).value == rank_bound_values(p).value;
            } else {
                pass = outer_bound_closed(p).mirrored().equals(outer_bound_closed(swap_users(p)));
            }
            all_pass = all_pass && pass;
            if (format == "text") {
                if (!pass)
                    out << "FAIL " << n11 << "," << n12 << "," << n21 << "," << n22 << "," << n1c
                        << "," << n2c << " " << check << "\n";
            } else {
                out << n11 << "," << n12 << "," << n21 << "," << n22 << "," << n1c << "," << n2c
                    << "," << check << "," << (pass ? "1" : "0") << "\n";
            }
        }
    }
    if (format == "text") out << (all_pass ? "all checks passed\n" : "failures above\n");
    return all_pass ? 0 : 2;
}

int cmd_oracle(const ChannelParams& p, int kmax, long long budget_ms, const std::string& format) {
    OracleOptions opt;
    opt.kmax = kmax;
    opt.budget_ms = budget_ms;
    if (const char* env = std::getenv("DETIC_CR_MAX_M")) opt.m_cap = std::atoi(env);
    auto res = search_linear_schemes(p, opt);
    auto region = outer_bound_closed(p);
    auto gap = compare_to_bound(res, region);

    if (format == "json") {
        json j = oracle_to_json(res);
        j["gap"] = gap_to_json(gap);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "k1,k2\n";
        for (const auto& [a, b] : res.achievable) std::cout << a << "," << b << "\n";
    } else {
        std::cout << params_line(p) << "\n";
        std::cout << "achievable:";
        for (const auto& [a, b] : res.achievable) std::cout << " (" << a << "," << b << ")";
        std::cout << (res.incomplete ? "  [incomplete: budget hit]" : "") << "\n";
        std::cout << "checked " << res.stats.schemes_checked << " schemes in "
                  << res.stats.elapsed_ms << " ms\n";
        std::cout << "gap to outer bound:";
        if (gap.not_achieved.empty()) std::cout << " none";
        for (const auto& [a, b] : gap.not_achieved) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
        if (!gap.soundness_violations.empty()) {
            std::cout << "soundness violations:";
            for (const auto& [a, b] : gap.soundness_violations) std::cout << " (" << a << "," << b << ")";
            std::cout << "\n";
        }
    }
    if (!gap.sound()) {
        std::cerr << "consistency failure: achievable point outside the outer bound\n";
        return 2;
    }
    return 0;
}

int cmd_compare(const std::string& file_a, const std::string& file_b) {
    auto load = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        try {
            json j;
            in >> j;
            return region_from_json(j);
        } catch (const json::exception& e) {
            throw std::invalid_argument(path + ": " + e.what());
        }
    };
    auto a = load(file_a), b = load(file_b);
    if (a.equals(b)) {
        std::cout << "equal\n";
        return 0;
    }
    bool ab = a.is_subset_of(b), ba = b.is_subset_of(a);
    if (ab) {
        std::cout << "strict subset: " << file_a << " < " << file_b << "\n";
    } else if (ba) {
        std::cout << "strict subset: " << file_b << " < " << file_a << "\n";
    } else {
        std::cout << "incomparable\n";
    }
    auto witnesses = [](const RateRegion& x, const RateRegion& y, const std::string& name) {
        for (const auto& v : x.vertices())
            if (!y.contains(v))
                std::cout << "  vertex (" << v.first.to_string() << "," << v.second.to_string()
                          << ") of " << name << " lies outside the other region\n";
    };
    if (!ab) witnesses(a, b, file_a);
    if (!ba) witnesses(b, a, file_b);
    return 0;
}

int cmd_entropy(const ChannelParams& p, const std::string& term, const std::string& format) {
    int v = eval_term(p, term);
    if (format == "json") {
        std::cout << json{{"params", params_to_json(p)}, {"term", term}, {"value", v}}.dump(2)
                  << "\n";
    } else {
        std::cout << term << " = " << v << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for the linear deterministic interference channel "
                 "with a cognitive relay"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "svg", "text"}));

    ParamSource ps_region, ps_scheme, ps_oracle, ps_entropy;

    auto* region = app.add_subcommand("region", "outer bound, deterministic region, capacities");
    ps_region.attach(region);

    auto* scheme = app.add_subcommand("scheme", "construct and check an achievability scheme");
    ps_scheme.attach(scheme);
    std::string example = "I";
    int corner = 1;
    bool verify = false;
    long long simulate = 0;
    uint64_t seed = 1;
    scheme->add_option("--example", example, "scheme family: I or II");
    scheme->add_option("--corner", corner, "corner selector for example II")->check(CLI::Range(1, 2));
    scheme->add_flag("--verify", verify, "cross-check against the brute-force decoder");
    scheme->add_option("--simulate", simulate, "Monte Carlo trial count");
    scheme->add_option("--seed", seed, "simulation seed");

    auto* sweep = app.add_subcommand("sweep", "run consistency checks over all small tuples");
    int max_gain = 2;
    std::vector<std::string> checks;
    sweep->add_option("--max-gain", max_gain, "sweep gains 0..G");
    sweep->add_option("--check", checks, "closed-vs-rank | mirror-symmetry (repeatable)");

    auto* oracle = app.add_subcommand("oracle", "exhaustive linear-scheme search");
    ps_oracle.attach(oracle);
    int kmax = 2;
    long long budget_ms = 60000;
    oracle->add_option("--kmax", kmax, "per-user message length cap");
    oracle->add_option("--budget-ms", budget_ms, "time budget");

    auto* compare = app.add_subcommand("compare", "compare two region JSON files");
    std::string file_a, file_b;
    compare->add_option("a", file_a, "first region file")->required();
    compare->add_option("b", file_b, "second region file")->required();

    auto* entropy = app.add_subcommand("entropy", "evaluate a named rank-calculus term");
    ps_entropy.attach(entropy);
    std::string term;
    entropy->add_option("--term", term, "e.g. H(Y1|X2) or I(V12;V1c)")->required();

    // global options (--format) stay reachable after the subcommand name
    for (auto* sub : {region, scheme, sweep, oracle, compare, entropy}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage errors are exit 1, help is success
    }

    try {
        if (region->parsed()) return cmd_region(ps_region.resolve(), format);
        if (scheme->parsed())
            return cmd_scheme(ps_scheme.resolve(), example, corner, verify, simulate, seed, format);
        if (sweep->parsed()) return cmd_sweep(max_gain, checks, format);
        if (oracle->parsed()) return cmd_oracle(ps_oracle.resolve(), kmax, budget_ms, format);
        if (compare->parsed()) return cmd_compare(file_a, file_b);
        if (entropy->parsed()) return cmd_entropy(ps_entropy.resolve(), term, format);
    } catch (const ifccr::regime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ifccr::region_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
