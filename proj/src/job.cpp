#include "crystal/job.hpp"

#include <sstream>

#include "crystal/enumerate.hpp"
#include "crystal/lgv.hpp"
#include "crystal/matrix_model.hpp"
#include "crystal/products.hpp"

namespace crystal {

Geometry parse_geometry(const std::string& s) {
    if (s == "c3") return Geometry::c3;
    if (s == "conifold") return Geometry::conifold;
    if (s == "general") return Geometry::general;
    throw invalid_argument("unknown geometry '" + s + "' (expected c3, conifold or general)");
}

Engine parse_engine(const std::string& s) {
    if (s == "enumerate") return Engine::enumerate;
    if (s == "product") return Engine::product;
    if (s == "toeplitz") return Engine::toeplitz;
    if (s == "lgv") return Engine::lgv;
    throw invalid_argument("unknown engine '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "tsv") return OutputFormat::tsv;
    throw invalid_argument("unknown format '" + s + "' (expected json or tsv)");
}

const char* to_string(Geometry g) noexcept {
    switch (g) {
    case Geometry::c3: return "c3";
    case Geometry::conifold: return "conifold";
    case Geometry::general: return "general";
    }
    return "?";
}

const char* to_string(Engine e) noexcept {
    switch (e) {
    case Engine::enumerate: return "enumerate";
    case Engine::product: return "product";
    case Engine::toeplitz: return "toeplitz";
    case Engine::lgv: return "lgv";
    }
    return "?";
}

void JobConfig::validate() const {
    if (degree < 0) throw invalid_argument("degree must be non-negative");
    if (chamber < 0) throw invalid_argument("chamber must be non-negative");
    if (geometry == Geometry::general && !spec)
        throw invalid_argument("general geometry requires an explicit L, rho, theta");
    if (engines.empty()) throw invalid_argument("no engines selected");
}

ChamberSpec JobConfig::chamber_spec() const {
    switch (geometry) {
    case Geometry::c3: return c3_spec();
    case Geometry::conifold: return conifold_theta(chamber);
    case Geometry::general: return *spec;
    }
    throw invalid_argument("unknown geometry");
}

TruncatedSeries run_engine(const JobConfig& cfg, Engine e, int* stabilized_at) {
    const int D = cfg.degree;
    const ChamberSpec spec = cfg.chamber_spec();
    switch (e) {
    case Engine::enumerate:
        return enumerate_z(spec, D);
    case Engine::product:
        if (cfg.geometry == Geometry::c3) return macmahon(D);
        if (cfg.geometry == Geometry::conifold) return conifold_product(cfg.chamber, D);
        throw unsupported_chamber("no product formula for a general chamber");
    case Engine::toeplitz: {
        MatrixModelResult r = [&] {
            if (cfg.geometry == Geometry::c3) return stabilized_toeplitz(c3_symbol(D), D);
            if (cfg.geometry == Geometry::conifold)
                return stabilized_toeplitz(conifold_symbol(cfg.chamber, D), D);
            throw unsupported_chamber("no matrix model for a general chamber");
        }();
        if (stabilized_at) *stabilized_at = r.stabilized_at;
        if (cfg.geometry == Geometry::conifold) return prefactor_cn(cfg.chamber, D) * r.value;
        return r.value;
    }
    case Engine::lgv:
        // A configuration of weight degree ≤ D has at most D rows in each slice.
        return lgv_det(walker_graph(spec, std::max(D, 1), D));
    }
    throw invalid_argument("unknown engine");
}

JobReport run_job(const JobConfig& cfg) {
    cfg.validate();
    JobReport report{cfg, {}, {}, true};
    for (Engine e : cfg.engines) {
        EngineOutcome o{e, std::nullopt, std::nullopt, "", 0};
        try {
            o.value = run_engine(cfg, e, &o.stabilized_at);
        } catch (const error& err) {
            o.error = err.kind();
            o.message = err.what();
        }
        report.outcomes.push_back(std::move(o));
    }
    const std::size_t n = report.outcomes.size();
    report.agreement.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& a = report.outcomes[i].value;
            const auto& b = report.outcomes[j].value;
            report.agreement[i][j] = a && b && *a == *b;
            if (!report.agreement[i][j]) report.all_agree = false;
        }
    return report;
}

int exit_code_for(error_kind kind) noexcept {
    switch (kind) {
    case error_kind::invalid_input: return 2;
    case error_kind::not_invertible: return 2;
    case error_kind::unsupported: return 2;
    case error_kind::internal_limit: return 3;
    }
    return 3;
}

int JobReport::exit_code() const {
    for (const auto& o : outcomes)
        if (o.error) return exit_code_for(*o.error);
    return all_agree ? 0 : 1;
}

json JobReport::to_json() const {
    json engines = json::object();
    for (const auto& o : outcomes) {
        json entry;
        if (o.value) {
            entry = series_to_json(*o.value);
            if (o.engine == Engine::toeplitz) entry["stabilized_at"] = o.stabilized_at;
        } else {
            entry["error"] = {{"kind", crystal::to_string(*o.error)}, {"message", o.message}};
        }
        engines[to_string(o.engine)] = std::move(entry);
    }
    json names = json::array();
    for (const auto& o : outcomes) names.push_back(to_string(o.engine));
    return {{"geometry", to_string(config.geometry)},
            {"chamber", chamber_to_json(config.chamber_spec())},
            {"degree", config.degree},
            {"engines", std::move(engines)},
            {"order", std::move(names)},
            {"agreement", agreement},
            {"agree", all_agree}};
}

std::string JobReport::to_tsv() const {
    std::ostringstream os;
    for (const auto& o : outcomes) {
        os << "# engine\t" << to_string(o.engine) << '\n';
        if (o.value)
            os << series_to_tsv(*o.value);
        else
            os << "# error\t" << crystal::to_string(*o.error) << '\t' << o.message << '\n';
    }
    os << "# agree\t" << (all_agree ? "true" : "false") << '\n';
    return os.str();
}

} // namespace crystal
