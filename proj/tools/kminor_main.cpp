#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kminor/engine.hpp"
#include "kminor/experiment.hpp"
#include "kminor/generators.hpp"
#include "kminor/io.hpp"
#include "kminor/spectral.hpp"
#include "kminor/walks.hpp"

using nlohmann::json;
using namespace kminor;

namespace {

Graph load_graph(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    return read_edge_list_file(path);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

int cmd_gen(const std::string& family, Vertex n, std::uint32_t d, double p, Vertex a,
            Vertex b, std::uint64_t seed, const std::string& out_path) {
    GenSpec spec;
    auto fam = parse_family(family);
    if (!fam) {
        std::cerr << "unknown family '" << family << "'\n";
        return 1;
    }
    spec.family = *fam;
    spec.n = n;
    spec.d = d;
    spec.p = p;
    spec.a = a;
    spec.b = b;
    spec.seed = seed;
    Graph g = generate(spec);
    std::ostringstream os;
    write_edge_list(os, g);
    write_text(out_path, os.str());
    return 0;
}

int cmd_analyze(const std::string& in, double eps, double tol, Vertex limit,
                const std::string& out_path) {
    Graph g = load_graph(in);
    ExpansionReport rep = analyze(g, eps, tol, limit);
    write_text(out_path, expansion_report_to_json(rep).dump(2) + "\n");
    return 0;
}

int cmd_walk(const std::string& in, std::uint64_t steps, std::uint64_t seed,
             const std::string& start, const std::string& out_path) {
    Graph g = load_graph(in);
    RngStream rng(seed, 0);
    std::optional<Vertex> start_vertex;
    if (start != "stationary") start_vertex = static_cast<Vertex>(std::stoul(start));
    WalkTrace trace = run_walk(g, steps, rng, start_vertex);
    std::string out;
    for (Vertex v : trace.vertices) {
        out += std::to_string(v);
        out += '\n';
    }
    write_text(out_path, out);
    return 0;
}

int cmd_find_minor(const std::string& in, double eps, const std::string& mode_str,
                   std::uint64_t seed, std::uint32_t max_iter, bool emit_history,
                   const ParamOverrides& overrides, const std::string& witness_path,
                   const std::string& out_path) {
    Graph g = load_graph(in);
    auto mode = parse_mode(mode_str);
    if (!mode) {
        std::cerr << "unknown mode '" << mode_str << "'\n";
        return 1;
    }
    EngineParams params =
        compute_params(g.n(), std::max<std::uint32_t>(3, g.max_degree()), eps, *mode);
    params = apply_overrides(params, overrides);
    EngineOptions opts;
    opts.max_iterations = max_iter;
    RngStream rng(seed, 0);
    RunReport rep = find_minor(g, params, rng, opts);

    json j = run_report_to_json(rep, emit_history);
    j["params"] = params_to_json(params);
    write_text(out_path, j.dump(2) + "\n");
    if (!witness_path.empty() && rep.witness)
        write_text(witness_path, witness_to_json(*rep.witness).dump(2) + "\n");
    return rep.success ? 0 : 2;
}

int cmd_verify(const std::string& in, const std::string& witness_path) {
    Graph g = load_graph(in);
    std::ifstream win(witness_path);
    if (!win) {
        std::cerr << "cannot open " << witness_path << "\n";
        return 1;
    }
    json j = json::parse(win);
    MinorWitness w = witness_from_json(j, g.n());
    WitnessReport rep = verify_witness(g, w);
    if (rep.valid) {
        std::cout << "valid " << (w.kind == MinorWitness::Kind::Complete
                                      ? "complete"
                                      : "pair-fraction")
                  << " witness of order " << w.order() << "\n";
        return 0;
    }
    std::cout << "invalid: " << rep.violation;
    if (rep.index_a >= 0) std::cout << " (set " << rep.index_a;
    if (rep.index_b >= 0) std::cout << ", set " << rep.index_b;
    if (rep.index_a >= 0) std::cout << ")";
    std::cout << "\n";
    return 2;
}

int cmd_experiment(const std::string& config_path, const std::string& csv_path,
                   const std::string& json_path, unsigned jobs,
                   const std::string& witness_dir, bool resume) {
    std::ifstream cin_file(config_path);
    if (!cin_file) {
        std::cerr << "cannot open config " << config_path << "\n";
        return 1;
    }
    ExperimentConfig cfg = config_from_json(json::parse(cin_file));

    ExperimentCallbacks callbacks;
    std::vector<ResultRow> previous;
    if (resume && !csv_path.empty() && csv_path != "-") {
        std::ifstream existing(csv_path);
        if (existing) {
            std::string line;
            std::getline(existing, line);  // header
            while (std::getline(existing, line)) {
                auto row = row_from_csv(line);
                if (row) {
                    callbacks.skip.insert(row->key());
                    previous.push_back(std::move(*row));
                }
            }
        }
    }

    std::ofstream csv_stream;
    bool stream_rows = !csv_path.empty() && csv_path != "-";
    if (stream_rows) {
        csv_stream.open(csv_path, resume && !previous.empty() ? std::ios::app
                                                              : std::ios::out);
        if (!csv_stream) {
            std::cerr << "cannot open " << csv_path << " for writing\n";
            return 1;
        }
        if (!(resume && !previous.empty())) csv_stream << kCsvHeader << '\n';
        callbacks.on_row = [&](const ResultRow& row) {
            csv_stream << row_to_csv(row) << '\n';
            csv_stream.flush();
        };
    }
    if (!witness_dir.empty()) {
        callbacks.on_witness = [&](const ResultRow& row, const MinorWitness& w) {
            std::string name = row.key();
            std::replace(name.begin(), name.end(), '/', '_');
            std::ofstream out(witness_dir + "/" + name + ".witness.json");
            if (out) out << witness_to_json(w).dump(2) << '\n';
        };
    }

    ExperimentResult result = run_experiment(cfg, jobs, callbacks);
    if (!stream_rows && csv_path == "-") std::cout << emit_csv(result.rows);
    if (!json_path.empty()) {
        std::vector<ResultRow> all = previous;
        all.insert(all.end(), result.rows.begin(), result.rows.end());
        write_text(json_path, emit_json(all).dump(2) + "\n");
    }
    int code = result.exit_code;
    for (const ResultRow& row : previous)
        if (row.outcome != "success") code = std::max(code, 2);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complete-minor extraction toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph in edge-list format");
    std::string gen_family = "regular";
    Vertex gen_n = 0, gen_a = 0, gen_b = 0;
    std::uint32_t gen_d = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "-";
    gen->add_option("--family", gen_family,
                    "regular|gnp|cycle|complete|complete-bipartite|petersen|two-triangles");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--d", gen_d, "degree (regular)");
    gen->add_option("--p", gen_p, "edge probability (gnp)");
    gen->add_option("--a", gen_a, "left side (complete-bipartite)");
    gen->add_option("--b", gen_b, "right side (complete-bipartite)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // analyze
    auto* an = app.add_subcommand("analyze", "expansion metrics report (JSON)");
    std::string an_in, an_out = "-";
    double an_eps = 0.4, an_tol = 1e-8;
    Vertex an_limit = kDefaultExhaustiveLimit;
    an->add_option("--in", an_in, "input edge list ('-' for stdin)")->required();
    an->add_option("--eps", an_eps, "expansion parameter for the hypothesis gate");
    an->add_option("--tol", an_tol, "eigenvalue tolerance");
    an->add_option("--limit", an_limit, "exhaustive brute-force limit");
    an->add_option("--out", an_out, "output path (default stdout)");

    // walk
    auto* wk = app.add_subcommand("walk", "emit a lazy-random-walk trace");
    std::string wk_in, wk_start = "stationary", wk_out = "-";
    std::uint64_t wk_steps = 0, wk_seed = 1;
    wk->add_option("--in", wk_in, "input edge list")->required();
    wk->add_option("--steps", wk_steps, "number of steps")->required();
    wk->add_option("--seed", wk_seed, "random seed");
    wk->add_option("--start", wk_start, "start vertex id, or 'stationary'");
    wk->add_option("--out", wk_out, "output path (default stdout)");

    // find-minor
    auto* fm = app.add_subcommand("find-minor", "run the extraction engine");
    std::string fm_in, fm_mode = "sparse", fm_witness, fm_out = "-";
    double fm_eps = 0.4;
    std::uint64_t fm_seed = 1;
    std::uint32_t fm_max_iter = 0;
    bool fm_history = false;
    ParamOverrides fm_over;
    std::uint32_t fm_t = 0, fm_r = 0;
    double fm_slack = -1.0, fm_C = -1.0, fm_cover = -1.0;
    fm->add_option("--in", fm_in, "input edge list")->required();
    fm->add_option("--eps", fm_eps, "expansion parameter");
    fm->add_option("--mode", fm_mode, "sparse|constd|intermediate");
    fm->add_option("--seed", fm_seed, "random seed");
    fm->add_option("--max-iter", fm_max_iter, "iteration cap (default 2n)");
    fm->add_flag("--emit-history", fm_history, "include the per-iteration event log");
    fm->add_option("--t", fm_t, "override branch-set size scale");
    fm->add_option("--r", fm_r, "override target minor order");
    fm->add_option("--slack", fm_slack, "override branch-set slack fraction");
    fm->add_option("--C", fm_C, "override retry coefficient");
    fm->add_option("--cover-coeff", fm_cover, "override walk-length coefficient");
    fm->add_option("--witness-out", fm_witness, "write the witness JSON here");
    fm->add_option("--out", fm_out, "report output path (default stdout)");

    // verify
    auto* vf = app.add_subcommand("verify", "verify a minor witness");
    std::string vf_in, vf_witness;
    vf->add_option("--in", vf_in, "input edge list")->required();
    vf->add_option("--witness", vf_witness, "witness JSON path")->required();

    // experiment
    auto* ex = app.add_subcommand("experiment", "run a seeded experiment sweep");
    const char* env_config = std::getenv("KMINOR_CONFIG");
    std::string ex_config = env_config ? env_config : "";
    std::string ex_csv = "-", ex_json, ex_witness_dir;
    unsigned ex_jobs = 1;
    bool ex_resume = false;
    auto* copt = ex->add_option("--config", ex_config, "config JSON path");
    if (ex_config.empty()) copt->required();
    ex->add_option("--out", ex_csv, "CSV output path ('-' for stdout)");
    ex->add_option("--json-out", ex_json, "JSON output path");
    ex->add_option("--jobs", ex_jobs, "concurrent runs");
    ex->add_option("--witness-dir", ex_witness_dir, "directory for success witnesses");
    ex->add_flag("--resume", ex_resume, "skip runs already present in --out");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_family, gen_n, gen_d, gen_p, gen_a, gen_b, gen_seed, gen_out);
        if (an->parsed()) return cmd_analyze(an_in, an_eps, an_tol, an_limit, an_out);
        if (wk->parsed()) return cmd_walk(wk_in, wk_steps, wk_seed, wk_start, wk_out);
        if (fm->parsed()) {
            if (fm_t > 0) fm_over.t = fm_t;
            if (fm_r > 0) fm_over.r = fm_r;
            if (fm_slack >= 0) fm_over.slack = fm_slack;
            if (fm_C > 0) fm_over.C = fm_C;
            if (fm_cover > 0) fm_over.cover_coeff = fm_cover;
            return cmd_find_minor(fm_in, fm_eps, fm_mode, fm_seed, fm_max_iter, fm_history,
                                  fm_over, fm_witness, fm_out);
        }
        if (vf->parsed()) return cmd_verify(vf_in, vf_witness);
        if (ex->parsed())
            return cmd_experiment(ex_config, ex_csv, ex_json, ex_jobs, ex_witness_dir,
                                  ex_resume);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
