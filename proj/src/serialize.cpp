#include "crystal/serialize.hpp"

#include <sstream>

#include "crystal/error.hpp"

namespace crystal {

json series_to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& t : s.terms()) terms.push_back({{"exp", t.exp}, {"coef", t.coef.get_str()}});
    return {{"vars", default_variable_names(s.num_vars())}, {"cutoff", s.cutoff()}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const json& j) {
    try {
        const auto nv = static_cast<int>(j.at("vars").size());
        const int cutoff = j.at("cutoff").get<int>();
        TruncatedSeries s(nv, cutoff);
        for (const auto& t : j.at("terms")) {
            const auto exp = t.at("exp").get<std::vector<int>>();
            if (static_cast<int>(exp.size()) != nv) throw dimension_error("term has the wrong number of exponents");
            int deg = 0;
            for (int e : exp) deg += e;
            if (deg > cutoff) throw dimension_error("term exceeds the cutoff");
            bigint c;
            if (c.set_str(t.at("coef").get<std::string>(), 10) != 0)
                throw invalid_argument("coefficient is not a decimal integer");
            if (sgn(c) == 0) throw invalid_argument("zero coefficients must be omitted");
            s.add_term(exp, c);
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument(std::string("malformed series JSON: ") + e.what());
    }
}

std::string series_to_tsv(const TruncatedSeries& s) {
    std::ostringstream os;
    for (int i = 0; i < s.num_vars(); ++i) os << "exp_" << i << '\t';
    os << "coefficient\n";
    for (const auto& t : s.terms()) {
        for (int e : t.exp) os << e << '\t';
        os << t.coef.get_str() << '\n';
    }
    return os.str();
}

json partition_to_json(const Partition& p) {
    return json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

Partition partition_from_json(const json& j) {
    try {
        return Partition(j.get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument(std::string("malformed partition JSON: ") + e.what());
    }
}

json chamber_to_json(const ChamberSpec& spec) {
    return {{"L", spec.L()}, {"rho", spec.rho()}, {"theta", spec.theta_images()}};
}

ChamberSpec chamber_from_json(const json& j) {
    try {
        return ChamberSpec::make(j.at("L").get<int>(), j.at("rho").get<std::vector<int>>(),
                                 j.at("theta").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument(std::string("malformed chamber JSON: ") + e.what());
    }
}

json dag_to_json(const WeightedDag& g) {
    json vertices = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto [t, h] = g.coords(v);
        json out = json::array();
        for (int ei : g.out_edges(v)) {
            const auto& e = g.edges()[static_cast<std::size_t>(ei)];
            out.push_back({{"to", e.to}, {"weight", series_to_json(e.weight)["terms"]}});
        }
        vertices.push_back({{"id", v}, {"t", t}, {"h", h}, {"out", std::move(out)}});
    }
    return {{"vars", default_variable_names(g.num_vars())},
            {"cutoff", g.cutoff()},
            {"sources", g.sources()},
            {"sinks", g.sinks()},
            {"vertices", std::move(vertices)}};
}

} // namespace crystal
