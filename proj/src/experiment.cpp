#include "kminor/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "kminor/spectral.hpp"

namespace kminor {

using nlohmann::json;

EngineParams apply_overrides(EngineParams p, const ParamOverrides& o) {
    if (o.slack) p.slack = *o.slack;
    if (o.t) p.t = *o.t;
    if (o.C) p.C = *o.C;
    if (o.cover_coeff) p.cover_coeff = *o.cover_coeff;
    if (o.K) p.K = *o.K;
    if (o.t || o.slack) {
        const double dd = static_cast<double>(p.d);
        p.size_cap = (1.0 + p.slack) * p.t;
        if (p.mode == EngineMode::ConstantDegree) {
            p.cover_cap = p.size_cap;
            const double eps_eff = std::min(p.eps, (dd - 2.0) / (2.0 * dd));
            p.keep_edges = eps_eff * p.t * dd;
            p.s = std::max<std::uint64_t>(
                1, static_cast<std::uint64_t>(std::ceil(eps_eff * p.t)));
        } else {
            p.cover_cap = p.slack * p.t;
            p.keep_threshold = std::max(
                1.0, (p.growth_threshold - std::max(p.zeta * dd, 1.0 + p.slack)) * p.t);
            p.s = std::max<std::uint64_t>(
                1, static_cast<std::uint64_t>(std::ceil(p.keep_threshold)));
        }
    }
    if (o.C)
        p.retries = static_cast<int>(
            std::ceil(p.C * std::log(static_cast<double>(std::max<Vertex>(p.n, 3)))));
    if (o.r) p.r = *o.r;
    return p;
}

namespace {

ParamOverrides overrides_from_json(const json& j) {
    ParamOverrides o;
    static const std::set<std::string> allowed{"t", "r", "slack", "C", "cover_coeff", "K"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::runtime_error("config: unknown override field '" + it.key() + "'");
    if (j.contains("t")) o.t = j["t"].get<std::uint32_t>();
    if (j.contains("r")) o.r = j["r"].get<std::uint32_t>();
    if (j.contains("slack")) o.slack = j["slack"].get<double>();
    if (j.contains("C")) o.C = j["C"].get<double>();
    if (j.contains("cover_coeff")) o.cover_coeff = j["cover_coeff"].get<double>();
    if (j.contains("K")) o.K = j["K"].get<double>();
    return o;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::runtime_error(std::string("config: unknown field '") + it.key() +
                                     "' in " + where);
}

}  // namespace

ExperimentConfig config_from_json(const json& j) {
    reject_unknown(j, {"schema_version", "cells", "time_budget_s", "spectral_tol",
                       "spectral_budget"},
                   "config");
    ExperimentConfig cfg;
    cfg.schema_version = j.at("schema_version").get<int>();
    if (cfg.schema_version != 1)
        throw std::runtime_error("config: unsupported schema_version");
    if (j.contains("time_budget_s")) cfg.time_budget_s = j["time_budget_s"].get<double>();
    if (cfg.time_budget_s <= 0) throw std::runtime_error("config: budget must be positive");
    if (j.contains("spectral_tol")) cfg.spectral_tol = j["spectral_tol"].get<double>();
    if (j.contains("spectral_budget"))
        cfg.spectral_budget = j["spectral_budget"].get<std::uint64_t>();
    if (!j.contains("cells") || j["cells"].empty())
        throw std::runtime_error("config: grid must be nonempty");
    for (const auto& c : j["cells"]) {
        reject_unknown(c, {"family", "n", "d", "p", "a", "b", "eps", "mode", "seeds",
                           "overrides"},
                       "cell");
        CellSpec cell;
        auto fam = parse_family(c.at("family").get<std::string>());
        if (!fam) throw std::runtime_error("config: unknown family");
        cell.family = *fam;
        if (c.contains("n")) {
            if (c["n"].is_array())
                cell.n_values = c["n"].get<std::vector<Vertex>>();
            else
                cell.n_values = {c["n"].get<Vertex>()};
        }
        if (c.contains("d")) {
            if (c["d"].is_array())
                cell.d_values = c["d"].get<std::vector<std::uint32_t>>();
            else
                cell.d_values = {c["d"].get<std::uint32_t>()};
        }
        if (cell.n_values.empty()) cell.n_values = {0};
        if (cell.d_values.empty()) cell.d_values = {0};
        if (c.contains("p")) cell.p = c["p"].get<double>();
        if (c.contains("a")) cell.a = c["a"].get<Vertex>();
        if (c.contains("b")) cell.b = c["b"].get<Vertex>();
        if (c.contains("eps")) cell.eps = c["eps"].get<double>();
        if (c.contains("mode")) {
            auto m = parse_mode(c["mode"].get<std::string>());
            if (!m) throw std::runtime_error("config: unknown mode");
            cell.mode = *m;
        }
        if (!c.contains("seeds") || c["seeds"].empty())
            throw std::runtime_error("config: each cell needs at least one seed");
        cell.seeds = c["seeds"].get<std::vector<std::uint64_t>>();
        if (c.contains("overrides")) cell.overrides = overrides_from_json(c["overrides"]);
        cfg.cells.push_back(std::move(cell));
    }
    return cfg;
}

std::string ResultRow::key() const {
    return family + "/" + std::to_string(n) + "/" + std::to_string(d) + "/" +
           std::to_string(seed) + "/" + mode;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

struct RunJob {
    CellSpec cell;
    Vertex n;
    std::uint32_t d;
    std::uint64_t seed;
};

/// True instance order, known without generating (fixture families have a
/// fixed or parameter-derived order).
Vertex instance_order(const CellSpec& cell, Vertex n) {
    switch (cell.family) {
        case GenSpec::Family::Petersen: return 10;
        case GenSpec::Family::TwoTriangles: return 6;
        case GenSpec::Family::CompleteBipartite: return cell.a + cell.b;
        default: return n;
    }
}

ResultRow execute_run(const RunJob& job, const ExperimentConfig& cfg,
                      const ExperimentCallbacks& callbacks) {
    ResultRow row;
    row.family = family_name(job.cell.family);
    row.n = instance_order(job.cell, job.n);
    row.d = job.d;
    row.p = job.cell.p;
    row.seed = job.seed;
    row.mode = mode_name(job.cell.mode);
    row.eps = job.cell.eps;
    row.route = "none";

    const auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](ResultRow& r) {
        std::chrono::duration<double, std::milli> dt =
            std::chrono::steady_clock::now() - t0;
        r.wall_ms = dt.count();
        return r;
    };

    try {
        // The row's seed is the generation seed verbatim, so `gen` with the
        // row's family/n/d/seed reproduces the instance for witness replay.
        GenSpec spec;
        spec.family = job.cell.family;
        spec.n = job.n;
        spec.d = job.d;
        spec.p = job.cell.p;
        spec.a = job.cell.a;
        spec.b = job.cell.b;
        spec.seed = job.seed;
        Graph g = generate(spec);
        if (g.n() != row.n) {
            row.outcome = "error";
            row.detail = "instance-order-mismatch";
            return finish(row);
        }
        if (!is_connected(g)) {
            row.outcome = "error";
            row.detail = "disconnected-instance";
            return finish(row);
        }

        GateReport gate = gate_theorem_hypotheses(g, job.cell.eps);
        row.route = route_name(gate.route);
        row.certified = gate.certified;

        EngineParams params = compute_params(
            g.n(), std::max<std::uint32_t>(3, g.max_degree()), job.cell.eps,
            job.cell.mode);
        params = apply_overrides(params, job.cell.overrides);
        row.target_r = params.r;

        EngineOptions opts;
        opts.time_budget_s = cfg.time_budget_s;
        opts.spectral_tol = cfg.spectral_tol;
        opts.spectral_budget = cfg.spectral_budget;
        RngStream run_rng(job.seed, fnv1a("run/" + row.key()));
        RunReport rep = find_minor(g, params, run_rng, opts);

        row.iterations = rep.iterations;
        row.achieved_r = rep.achieved_order;
        double dn = static_cast<double>(g.n());
        double dd = std::max<double>(3.0, g.max_degree());
        row.ratio = rep.achieved_order / std::sqrt(dn * dd / std::log(dd));
        if (rep.success) {
            // The witness is re-verified before the row is written.
            if (!rep.witness || !verify_witness(g, *rep.witness).valid) {
                row.outcome = "error";
                row.detail = "witness-verification-failed";
                return finish(row);
            }
            row.outcome = "success";
            if (callbacks.on_witness) callbacks.on_witness(row, *rep.witness);
        } else if (rep.failure_reason == "timeout") {
            row.outcome = "timeout";
            row.detail = rep.failure_reason;
        } else {
            row.outcome = "failure";
            row.detail = rep.failure_reason;
        }
    } catch (const std::exception& e) {
        row.outcome = "error";
        row.detail = e.what();
    }
    std::replace(row.detail.begin(), row.detail.end(), ',', ';');
    std::replace(row.detail.begin(), row.detail.end(), '\n', ' ');
    return finish(row);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned jobs,
                                const ExperimentCallbacks& callbacks) {
    std::vector<RunJob> runs;
    for (const CellSpec& cell : config.cells)
        for (Vertex n : cell.n_values)
            for (std::uint32_t d : cell.d_values)
                for (std::uint64_t seed : cell.seeds)
                    runs.push_back({cell, n, d, seed});

    ExperimentResult result;
    result.rows.resize(runs.size());
    std::vector<char> done(runs.size(), 0);
    std::vector<char> skipped(runs.size(), 0);

    for (std::size_t i = 0; i < runs.size(); ++i) {
        ResultRow probe;
        probe.family = family_name(runs[i].cell.family);
        probe.n = instance_order(runs[i].cell, runs[i].n);
        probe.d = runs[i].d;
        probe.seed = runs[i].seed;
        probe.mode = mode_name(runs[i].cell.mode);
        if (callbacks.skip.count(probe.key())) skipped[i] = 1;
    }

    std::mutex emit_mutex;
    std::size_t emitted = 0;
    auto try_emit = [&]() {
        // Rows flush in grid order regardless of completion order.
        while (emitted < runs.size() && done[emitted]) {
            if (callbacks.on_row && !skipped[emitted]) callbacks.on_row(result.rows[emitted]);
            ++emitted;
        }
    };

    std::atomic<std::size_t> next{0};
    unsigned worker_count = std::max(1u, jobs);
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= runs.size()) return;
            ResultRow row;
            if (!skipped[i]) row = execute_run(runs[i], config, callbacks);
            {
                std::lock_guard<std::mutex> lock(emit_mutex);
                result.rows[i] = std::move(row);
                done[i] = 1;
                try_emit();
            }
        }
    };
    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < worker_count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Drop skipped rows (the caller already has them).
    std::vector<ResultRow> rows;
    rows.reserve(runs.size());
    bool any_failed = false;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (skipped[i]) continue;
        if (result.rows[i].outcome != "success") any_failed = true;
        rows.push_back(std::move(result.rows[i]));
    }
    result.rows = std::move(rows);
    result.exit_code = any_failed ? 2 : 0;
    return result;
}

const char* const kCsvHeader =
    "family,n,d,p,seed,mode,eps,outcome,detail,target_r,achieved_r,iterations,"
    "route,certified,ratio,wall_ms";

std::string row_to_csv(const ResultRow& r) {
    char buf[96];
    std::string out = r.family;
    auto num = [&](const char* fmt, double v) {
        std::snprintf(buf, sizeof(buf), fmt, v);
        out += ',';
        out += buf;
    };
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.d);
    num("%.6g", r.p);
    out += ',' + std::to_string(r.seed);
    out += ',' + r.mode;
    num("%.6g", r.eps);
    out += ',' + r.outcome;
    out += ',' + r.detail;
    out += ',' + std::to_string(r.target_r);
    out += ',' + std::to_string(r.achieved_r);
    out += ',' + std::to_string(r.iterations);
    out += ',' + r.route;
    out += r.certified ? ",1" : ",0";
    num("%.6f", r.ratio);
    num("%.3f", r.wall_ms);  // timing stays in the last column
    return out;
}

std::optional<ResultRow> row_from_csv(const std::string& line) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 16) return std::nullopt;
    try {
        ResultRow r;
        r.family = parts[0];
        r.n = static_cast<Vertex>(std::stoull(parts[1]));
        r.d = static_cast<std::uint32_t>(std::stoul(parts[2]));
        r.p = std::stod(parts[3]);
        r.seed = std::stoull(parts[4]);
        r.mode = parts[5];
        r.eps = std::stod(parts[6]);
        r.outcome = parts[7];
        r.detail = parts[8];
        r.target_r = static_cast<std::uint32_t>(std::stoul(parts[9]));
        r.achieved_r = static_cast<std::uint32_t>(std::stoul(parts[10]));
        r.iterations = static_cast<std::uint32_t>(std::stoul(parts[11]));
        r.route = parts[12];
        r.certified = parts[13] == "1";
        r.ratio = std::stod(parts[14]);
        r.wall_ms = std::stod(parts[15]);
        return r;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string emit_csv(const std::vector<ResultRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const ResultRow& r : rows) {
        out += row_to_csv(r);
        out += '\n';
    }
    return out;
}

json emit_json(const std::vector<ResultRow>& rows) {
    json arr = json::array();
    for (const ResultRow& r : rows)
        arr.push_back({{"family", r.family},
                       {"n", r.n},
                       {"d", r.d},
                       {"p", r.p},
                       {"seed", r.seed},
                       {"mode", r.mode},
                       {"eps", r.eps},
                       {"outcome", r.outcome},
                       {"detail", r.detail},
                       {"target_r", r.target_r},
                       {"achieved_r", r.achieved_r},
                       {"iterations", r.iterations},
                       {"route", r.route},
                       {"certified", r.certified},
                       {"ratio", r.ratio},
                       {"wall_ms", r.wall_ms}});
    return arr;
}

}  // namespace kminor
