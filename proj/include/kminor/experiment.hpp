#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "kminor/engine.hpp"
#include "kminor/generators.hpp"

namespace kminor {

/// Optional engine-parameter overrides applied on top of compute_params.
/// Fields that depend on t or slack are re-derived after the override.
struct ParamOverrides {
    std::optional<std::uint32_t> t;
    std::optional<std::uint32_t> r;
    std::optional<double> slack;
    std::optional<double> C;
    std::optional<double> cover_coeff;
    std::optional<double> K;
};

EngineParams apply_overrides(EngineParams p, const ParamOverrides& o);

struct CellSpec {
    GenSpec::Family family = GenSpec::Family::Regular;
    std::vector<Vertex> n_values;
    std::vector<std::uint32_t> d_values;  // regular only
    double p = 0.0;                       // gnp only
    Vertex a = 0, b = 0;                  // complete-bipartite only
    double eps = 0.4;
    EngineMode mode = EngineMode::Sparse;
    std::vector<std::uint64_t> seeds;
    ParamOverrides overrides;
};

struct ExperimentConfig {
    int schema_version = 1;
    std::vector<CellSpec> cells;
    double time_budget_s = 120.0;
    double spectral_tol = 1e-6;
    std::uint64_t spectral_budget = 30000;
};

/// Parses the versioned config document. Unknown fields are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);

struct ResultRow {
    std::string family;
    Vertex n = 0;
    std::uint32_t d = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string mode;
    double eps = 0.0;
    std::string outcome;  // success | failure | timeout | error
    std::string detail;
    std::uint32_t target_r = 0;
    std::uint32_t achieved_r = 0;
    std::uint32_t iterations = 0;
    std::string route;  // hypothesis-gate route
    bool certified = false;
    double ratio = 0.0;  // achieved_r / sqrt(n d / ln d)
    double wall_ms = 0.0;

    /// Stable identity of a run within a sweep (used for resuming).
    std::string key() const;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    int exit_code = 0;  // 0 all succeeded, 2 some run failed, 1 harness error
};

struct ExperimentCallbacks {
    /// Called once per completed row, in grid order.
    std::function<void(const ResultRow&)> on_row;
    /// Keys to skip (their rows are supplied by the caller from a previous
    /// partial sweep).
    std::set<std::string> skip;
    /// Receives the verified witness of each successful run.
    std::function<void(const ResultRow&, const MinorWitness&)> on_witness;
};

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned jobs = 1,
                                const ExperimentCallbacks& callbacks = {});

extern const char* const kCsvHeader;
std::string row_to_csv(const ResultRow& row);
std::optional<ResultRow> row_from_csv(const std::string& line);
std::string emit_csv(const std::vector<ResultRow>& rows);
nlohmann::json emit_json(const std::vector<ResultRow>& rows);

}  // namespace kminor
