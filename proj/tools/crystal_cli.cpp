// Command-line front end: enumerate | product | toeplitz | lgv | spectral | verify.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "crystal/enumerate.hpp"
#include "crystal/error.hpp"
#include "crystal/job.hpp"
#include "crystal/lgv.hpp"
#include "crystal/matrix_model.hpp"
#include "crystal/products.hpp"
#include "crystal/serialize.hpp"
#include "crystal/spectral.hpp"
#include "crystal/verify.hpp"

using namespace crystal;

namespace {

struct Common {
    std::string geometry = "c3";
    int chamber = 0;
    std::string spec_json;
    int degree = 4;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--geometry", c.geometry, "Geometry");
    cmd->add_option("--chamber", c.chamber, "Chamber index n (conifold theta_n)");
    cmd->add_option("--spec", c.spec_json, R"(Explicit chamber, e.g. {"L":2,"rho":[1,-1],"theta":[-1,5]})");
    cmd->add_option("--degree", c.degree, "Truncation degree D");
    cmd->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--seed", c.seed, "Seed for randomized suites");
    cmd->add_option("--out", c.out, "Write output to this file");
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw invalid_argument("cannot open output file " + c.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string render(const Common& c, const TruncatedSeries& s, json extra = json::object()) {
    if (parse_format(c.format) == OutputFormat::tsv) return series_to_tsv(s);
    json j = series_to_json(s);
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j.dump(2);
}

ChamberSpec spec_of(const Common& c) {
    const Geometry g = parse_geometry(c.geometry);
    if (g == Geometry::general) {
        if (c.spec_json.empty()) throw invalid_argument("--geometry general needs --spec");
        try {
            return chamber_from_json(json::parse(c.spec_json));
        } catch (const nlohmann::json::exception& e) {
            throw invalid_argument(std::string("--spec is not valid JSON: ") + e.what());
        }
    }
    if (c.chamber < 0) throw invalid_argument("--chamber must be non-negative");
    return g == Geometry::c3 ? c3_spec() : conifold_theta(c.chamber);
}

rational parse_rational(const std::string& s, const char* name) {
    rational r;
    if (r.set_str(s, 10) != 0) throw invalid_argument(std::string("--") + name + " is not a rational: " + s);
    r.canonicalize();
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact crystal-melting partition functions and their cross-checks"};
    app.require_subcommand(1);

    Common c;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Direct enumeration of configurations");
    add_common(enumerate_cmd, c);
    bool transposed = false;
    int max_rows = -1;
    enumerate_cmd->add_flag("--transposed", transposed, "Flip plus and minus in every slice rule");
    enumerate_cmd->add_option("--max-rows", max_rows, "At most this many rows per slice");

    auto* product_cmd = app.add_subcommand("product", "Infinite-product formulas (c3, conifold, spp)");
    add_common(product_cmd, c);

    auto* toeplitz_cmd = app.add_subcommand("toeplitz", "Stabilized Toeplitz determinant of the symbol");
    add_common(toeplitz_cmd, c);
    bool no_prefactor = false;
    toeplitz_cmd->add_flag("--no-prefactor", no_prefactor, "Print the bare determinant without C_n");

    auto* lgv_cmd = app.add_subcommand("lgv", "Non-intersecting paths and LGV determinants");
    add_common(lgv_cmd, c);
    int walkers = -1;
    std::string graph = "walkers";
    bool export_graph = false, bijection = false;
    lgv_cmd->add_option("--walkers", walkers, "Number of walkers N (default max(D, 1))");
    lgv_cmd->add_option("--graph", graph, "walkers, six-weight or random")
        ->check(CLI::IsMember({"walkers", "six-weight", "random"}));
    lgv_cmd->add_flag("--export", export_graph, "Print the graph as JSON adjacency lists");
    lgv_cmd->add_flag("--bijection", bijection, "Run the profile bijection check");

    auto* spectral_cmd = app.add_subcommand("spectral", "Spectral-curve identities");
    add_common(spectral_cmd, c);
    std::string check = "mirror", Q = "1/2", mu = "1/3", eps2 = "1/5";
    spectral_cmd->add_option("--check", check, "mirror, s3, spp-limit or spp-identity")
        ->check(CLI::IsMember({"mirror", "s3", "spp-limit", "spp-identity"}));
    spectral_cmd->add_option("--Q", Q, "Rational Q");
    spectral_cmd->add_option("--mu", mu, "Rational mu");
    spectral_cmd->add_option("--eps2", eps2, "Rational eps^2");

    auto* verify_cmd = app.add_subcommand("verify", "Cross-engine verification");
    add_common(verify_cmd, c);
    std::vector<std::string> engines;
    bool inject_fault = false;
    verify_cmd->add_option("--engines", engines, "Run one job with these engines instead of the full suite")
        ->delimiter(',')
        ->check(CLI::IsMember({"enumerate", "product", "toeplitz", "lgv"}));
    verify_cmd->add_flag("--inject-fault", inject_fault, "Flip one coefficient (self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c.degree < 0) throw invalid_argument("--degree must be non-negative");
        const int D = c.degree;

        if (*enumerate_cmd) {
            EnumerateOptions opts;
            opts.transposed = transposed;
            opts.max_rows = max_rows;
            emit(c, render(c, enumerate_z(spec_of(c), D, opts)));
            return 0;
        }
        if (*product_cmd) {
            if (c.geometry == "spp") {
                emit(c, render(c, spp_top_squared(c.chamber, D)));
                return 0;
            }
            const Geometry g = parse_geometry(c.geometry);
            if (g == Geometry::general) throw unsupported_chamber("no product formula for a general chamber");
            if (c.chamber < 0) throw invalid_argument("--chamber must be non-negative");
            emit(c, render(c, g == Geometry::c3 ? macmahon(D) : conifold_product(c.chamber, D)));
            return 0;
        }
        if (*toeplitz_cmd) {
            const Geometry g = parse_geometry(c.geometry);
            if (g == Geometry::general) throw unsupported_chamber("no matrix model for a general chamber");
            if (c.chamber < 0) throw invalid_argument("--chamber must be non-negative");
            const auto r = stabilized_toeplitz(g == Geometry::c3 ? c3_symbol(D) : conifold_symbol(c.chamber, D), D);
            TruncatedSeries value = r.value;
            if (g == Geometry::conifold && !no_prefactor) value = prefactor_cn(c.chamber, D) * value;
            emit(c, render(c, value, {{"stabilized_at", r.stabilized_at}}));
            return 0;
        }
        if (*lgv_cmd) {
            WeightedDag dag = [&] {
                if (graph == "six-weight") return six_weight_graph();
                if (graph == "random") return random_layered_dag(c.seed);
                return walker_graph(spec_of(c), walkers > 0 ? walkers : std::max(D, 1), D);
            }();
            if (export_graph) {
                emit(c, dag_to_json(dag).dump(2));
                return 0;
            }
            if (bijection) {
                if (graph != "walkers") throw invalid_argument("--bijection applies to walker graphs");
                const auto rep = profile_bijection_check(spec_of(c), walkers > 0 ? walkers : std::max(D, 1), D);
                emit(c, json{{"ok", rep.ok}, {"message", rep.message}, {"configurations", rep.configurations_checked}}.dump(2));
                return rep.ok ? 0 : 1;
            }
            const TruncatedSeries det = lgv_det(dag);
            if (graph == "walkers") {
                emit(c, render(c, det));
                return 0;
            }
            const TruncatedSeries brute = nonintersecting_bruteforce(dag);
            json j{{"lgv_det", series_to_json(det)}, {"bruteforce", series_to_json(brute)}, {"agree", det == brute}};
            emit(c, j.dump(2));
            return det == brute ? 0 : 1;
        }
        if (*spectral_cmd) {
            const CurveParams p{parse_rational(Q, "Q"), parse_rational(mu, "mu"), parse_rational(eps2, "eps2")};
            json j;
            bool ok = true;
            if (check == "mirror") {
                const auto m = mirror_map(p);
                j = {{"Q1", m.Q1.get_str()}, {"Q2", m.Q2.get_str()}, {"Q3", m.Q3.get_str()}};
            } else if (check == "s3") {
                const auto r = s3_equivariance_check(p);
                ok = r.ok;
                j = {{"ok", r.ok}, {"violation", r.violation}};
            } else if (check == "spp-limit") {
                const auto r = spp_limit_check(p);
                ok = r.ok;
                j = {{"ok", r.ok}, {"A", r.A.get_str()}, {"B", r.B.get_str()}, {"scale", r.scale.get_str()}};
                if (!r.message.empty()) j["message"] = r.message;
            } else {
                ok = spp_identity_squared(c.chamber, D);
                j = {{"ok", ok}, {"chamber", c.chamber}, {"degree", D}};
            }
            emit(c, j.dump(2));
            return ok ? 0 : 1;
        }
        if (*verify_cmd) {
            if (!engines.empty()) {
                JobConfig cfg;
                cfg.geometry = parse_geometry(c.geometry);
                cfg.chamber = c.chamber;
                if (cfg.geometry == Geometry::general) cfg.spec = spec_of(c);
                cfg.degree = D;
                cfg.engines.clear();
                for (const auto& e : engines) cfg.engines.push_back(parse_engine(e));
                cfg.format = parse_format(c.format);
                cfg.seed = c.seed;
                const JobReport rep = run_job(cfg);
                emit(c, cfg.format == OutputFormat::json ? rep.to_json().dump(2) : rep.to_tsv());
                return rep.exit_code();
            }
            VerifyOptions opts;
            opts.max_degree = D;
            opts.max_chamber = c.chamber;
            opts.seed = c.seed;
            opts.inject_fault = inject_fault;
            const auto checks = verify_all(opts);
            bool all = true;
            for (const auto& r : checks) all = all && r.passed;
            if (parse_format(c.format) == OutputFormat::json) {
                emit(c, json{{"passed", all}, {"checks", checks_to_json(checks)}}.dump(2));
            } else {
                std::string text = "check\tpassed\tdetail\n";
                for (const auto& r : checks) text += r.name + '\t' + (r.passed ? "true" : "false") + '\t' + r.detail + '\n';
                emit(c, text);
            }
            return all ? 0 : 1;
        }
    } catch (const error& e) {
        json j{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
        std::cerr << j.dump() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << '\n';
        return 3;
    }
    return 0;
}
