#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crystal/chamber.hpp"
#include "crystal/error.hpp"
#include "crystal/serialize.hpp"
#include "crystal/series.hpp"

namespace crystal {

enum class Geometry { c3, conifold, general };
enum class Engine { enumerate, product, toeplitz, lgv };
enum class OutputFormat { json, tsv };

Geometry parse_geometry(const std::string& s);
Engine parse_engine(const std::string& s);
OutputFormat parse_format(const std::string& s);
const char* to_string(Geometry g) noexcept;
const char* to_string(Engine e) noexcept;

struct JobConfig {
    Geometry geometry = Geometry::c3;
    int chamber = 0;                       // conifold θ_n
    std::optional<ChamberSpec> spec;       // general geometry
    int degree = 0;
    std::vector<Engine> engines{Engine::enumerate, Engine::product};
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 0;

    /// Throws invalid_argument when the invariants do not hold.
    void validate() const;
    ChamberSpec chamber_spec() const;
};

struct EngineOutcome {
    Engine engine;
    std::optional<TruncatedSeries> value;
    std::optional<error_kind> error;
    std::string message;
    int stabilized_at = 0;  // toeplitz only
};

struct JobReport {
    JobConfig config;
    std::vector<EngineOutcome> outcomes;
    std::vector<std::vector<bool>> agreement;  // pairwise, over outcomes
    bool all_agree;

    json to_json() const;
    std::string to_tsv() const;
    /// 0 when every engine succeeded and all agree; 1 on disagreement;
    /// 2 or 3 for the first engine error (invalid input / internal limit).
    int exit_code() const;
};

/// Runs a single engine of the job.
TruncatedSeries run_engine(const JobConfig& cfg, Engine e, int* stabilized_at = nullptr);

JobReport run_job(const JobConfig& cfg);

int exit_code_for(error_kind kind) noexcept;

} // namespace crystal
