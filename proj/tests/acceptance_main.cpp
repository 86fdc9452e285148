// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kminor/engine.hpp"
#include "kminor/experiment.hpp"
#include "kminor/generators.hpp"
#include "kminor/graph.hpp"
#include "kminor/spectral.hpp"
#include "kminor/walks.hpp"
#include "oracles.hpp"

namespace kminor {
namespace {

struct Criterion {
    bool ok = true;
    std::string detail;
    std::ostringstream log;

    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
        if (!cond) log << "  violated: " << why << "\n";
    }
};

double now_s() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

Graph connected_gnp(Vertex n, double p, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        RngStream rng(seed, attempt);
        Graph g = gnp(n, p, rng);
        if (is_connected(g) && g.min_degree() >= 1 && g.m() >= 1) return g;
    }
}

/// The shared small-graph suite: 100 seeded connected random graphs with
/// n <= 14 plus the named fixtures.
std::vector<Graph> small_suite() {
    std::vector<Graph> suite;
    const double ps[3] = {0.3, 0.5, 0.7};
    for (int i = 0; i < 100; ++i) {
        Vertex n = 4 + static_cast<Vertex>(i % 11);
        suite.push_back(connected_gnp(n, ps[i % 3], 9000 + i));
    }
    suite.push_back(build_graph(2, {{0, 1}}));
    suite.push_back(complete_graph(4));
    suite.push_back(complete_graph(5));
    suite.push_back(cycle_graph(6));
    suite.push_back(cycle_graph(12));
    suite.push_back(petersen());
    suite.push_back(two_triangles());
    suite.push_back(complete_bipartite(3, 5));
    suite.push_back(complete_bipartite(1, 3));
    return suite;
}

// ---------------------------------------------------------------------------
// 1. Cheeger inequality: lambda/2 <= h' <= sqrt(2 lambda), iterative lambda
//    within 1e-6 of the dense oracle.
// ---------------------------------------------------------------------------
Criterion criterion1(const std::vector<Graph>& suite) {
    Criterion c;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const Graph& g = suite[i];
        if (g.n() < 2 || g.m() < 1) continue;
        double dense = oracle::normalized_laplacian_spectrum(g)[1];
        auto iter = lambda_normalized(g, 1e-8);
        c.require(std::abs(iter.value - dense) <= 1e-6,
                  "graph " + std::to_string(i) + ": iterative lambda off by " +
                      std::to_string(std::abs(iter.value - dense)));
        double hp = h_prime_exact(g).value;
        c.require(dense / 2.0 <= hp + 1e-9,
                  "graph " + std::to_string(i) + ": lambda/2 > h'");
        c.require(hp <= std::sqrt(2.0 * dense) + 1e-9,
                  "graph " + std::to_string(i) + ": h' > sqrt(2 lambda)");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 2. Deterministic lemma suite: vertex expansion, ball growth, spectral gap
//    vs conductance, and Phi >= h/(2d), exact arithmetic where possible.
// ---------------------------------------------------------------------------
Criterion criterion2(const std::vector<Graph>& suite) {
    Criterion c;
    for (std::size_t gi = 0; gi < suite.size(); ++gi) {
        const Graph& g = suite[gi];
        const Vertex n = g.n();
        if (n < 2 || g.m() < 1) continue;
        const std::uint32_t d = g.max_degree();
        auto h = cheeger_exact(g, std::max<Vertex>(1, n / 2));
        const std::string tag = "graph " + std::to_string(gi);

        std::vector<std::uint64_t> row(n, 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v)) row[v] |= 1ull << w;
        auto nbr_mask = [&](std::uint64_t mask) {
            std::uint64_t nb = 0, m = mask;
            while (m) {
                unsigned v = static_cast<unsigned>(__builtin_ctzll(m));
                m &= m - 1;
                nb |= row[v];
            }
            return nb & ~mask;
        };

        // Vertex expansion: |N(S)| >= h(G) |S| / d for |S| <= n/2, checked
        // as |N(S)| d h.denom >= h.cut |S| in exact integers.
        bool expansion_ok = true;
        const std::uint64_t total = 1ull << n;
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            std::uint32_t size = static_cast<std::uint32_t>(__builtin_popcountll(mask));
            if (size > n / 2) continue;
            std::uint64_t nbrs =
                static_cast<std::uint64_t>(__builtin_popcountll(nbr_mask(mask)));
            if (nbrs * d * h.denom < h.cut * size) {
                expansion_ok = false;
                break;
            }
        }
        c.require(expansion_ok, tag + ": vertex-expansion bound violated");

        // Ball growth: |B(U,i)| >= min(n/2, |U| (1 + h/d)^i); exhaustive U
        // for n <= 10, all singletons plus 300 seeded subsets otherwise.
        const double ratio = 1.0 + h.value / d;
        auto check_ball = [&](std::uint64_t umask) {
            std::uint64_t b = umask;
            double u_size = __builtin_popcountll(umask);
            for (std::uint32_t i = 1; i <= n; ++i) {
                b |= nbr_mask(b);
                double bound =
                    std::min(n / 2.0, u_size * std::pow(ratio, static_cast<double>(i)));
                if (static_cast<double>(__builtin_popcountll(b)) + 1e-9 < bound)
                    return false;
            }
            return true;
        };
        bool ball_ok = true;
        if (n <= 10) {
            for (std::uint64_t umask = 1; umask < total && ball_ok; ++umask)
                ball_ok = check_ball(umask);
        } else {
            for (Vertex v = 0; v < n && ball_ok; ++v) ball_ok = check_ball(1ull << v);
            RngStream rng(4242, gi);
            for (int trial = 0; trial < 300 && ball_ok; ++trial) {
                std::uint64_t umask = rng.next_u64() & (total - 1);
                if (umask == 0) umask = 1;
                ball_ok = check_ball(umask);
            }
        }
        c.require(ball_ok, tag + ": ball-growth bound violated");

        // Spectral gap of the lazy walk vs conductance: delta >= Phi^2 / 2.
        auto phi = conductance_exact(g);
        auto p_spec = oracle::lazy_transition_spectrum(g);
        double delta = 1.0 - p_spec[n - 2];
        c.require(delta + 1e-12 >= phi.value * phi.value / 2.0,
                  tag + ": spectral gap below Phi^2/2");

        // Phi >= h/(2d) in exact integers: phi.cut d h.denom >= h.cut phi.vol.
        c.require(phi.cut * d * h.denom >= h.cut * phi.vol, tag + ": Phi < h/(2d)");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 3. Walk miss-probability: empirical miss frequency over 2000 stationary
//    walks <= closed-form bound + 0.05, on 20 seeded configurations.
// ---------------------------------------------------------------------------
Criterion criterion3() {
    Criterion c;
    struct Config {
        Vertex n;
        std::uint32_t d;
        double u_frac;
        double mass;  // target exponent of the bound
    };
    std::vector<Config> configs;
    const std::pair<Vertex, std::uint32_t> graphs[5] = {
        {200, 6}, {400, 6}, {500, 8}, {1000, 8}, {2000, 8}};
    for (auto [n, d] : graphs)
        for (double u_frac : {0.05, 0.25})
            for (double mass : {0.35, 0.8}) configs.push_back({n, d, u_frac, mass});

    int index = 0;
    for (const Config& cfg : configs) {
        ++index;
        RngStream g_rng(7000 + index, 0);
        Graph g = random_regular(cfg.n, cfg.d, g_rng);
        if (!is_connected(g)) {
            c.require(false, "config " + std::to_string(index) + ": disconnected sample");
            continue;
        }
        // Certified lower bound on h via the regular-graph identity
        // h = d h' >= d lambda / 2.
        auto eig = lambda_normalized(g, 1e-8);
        double h_lb = cfg.d * std::max(0.0, eig.value - eig.residual) / 2.0;
        if (h_lb <= 0) {
            c.require(false, "config " + std::to_string(index) + ": no expansion bound");
            continue;
        }
        std::uint64_t u_size =
            std::max<std::uint64_t>(1, static_cast<std::uint64_t>(cfg.u_frac * cfg.n));
        VertexSet u(g.n());
        RngStream u_rng(7100 + index, 1);
        while (u.size() < u_size)
            u.insert(static_cast<Vertex>(u_rng.next_below(g.n())));

        double rate = std::pow(h_lb / cfg.d, 3.0) / 8.0;
        std::uint64_t ell = static_cast<std::uint64_t>(
            std::ceil(cfg.mass / (rate * static_cast<double>(u_size) / cfg.n)));
        double bound = miss_probability_bound(h_lb, cfg.d, static_cast<double>(u_size),
                                              cfg.n, static_cast<double>(ell));

        const int walks = 2000;
        int missed = 0;
        RngStream w_rng(7200 + index, 2);
        for (int t = 0; t < walks; ++t) {
            RngStream walk_rng = w_rng.derive(t);
            Vertex cur = sample_stationary(g, walk_rng);
            bool hit = u.contains(cur);
            for (std::uint64_t s = 0; s < ell && !hit; ++s) {
                cur = lazy_step(g, cur, walk_rng);
                hit = u.contains(cur);
            }
            if (!hit) ++missed;
        }
        double freq = missed / static_cast<double>(walks);
        c.log << "  config " << index << ": n=" << cfg.n << " d=" << cfg.d
              << " |U|=" << u_size << " l=" << ell << " bound=" << bound
              << " empirical=" << freq << "\n";
        c.require(freq <= bound + 0.05,
                  "config " + std::to_string(index) + ": empirical " +
                      std::to_string(freq) + " above bound " + std::to_string(bound));
    }
    return c;
}

// ---------------------------------------------------------------------------
// 4. Covering-set contract on 50 seeded instances: success within
//    ceil(3 ln n) retries, connected, hits all targets, size bound holds.
// ---------------------------------------------------------------------------
Criterion criterion4() {
    Criterion c;
    int instance = 0, successes = 0;
    const double eps = 0.1;
    const double big_k = 32.0 / (eps * eps * eps);
    struct Cell {
        Vertex n;
        std::uint32_t d;
        int count;
    };
    for (const Cell& cell : {Cell{1000, 3, 13}, Cell{1000, 8, 13}, Cell{10000, 3, 12},
                             Cell{10000, 8, 12}}) {
        for (int k = 0; k < cell.count; ++k) {
            ++instance;
            RngStream g_rng(8000 + instance, 0);
            Graph g = random_regular(cell.n, cell.d, g_rng);
            if (!is_connected(g)) {
                c.require(false, "instance " + std::to_string(instance) + " disconnected");
                continue;
            }
            std::vector<VertexSet> targets;
            RngStream t_rng(8100 + instance, 1);
            for (int i = 0; i < 100; ++i) {
                VertexSet t(g.n());
                while (t.size() < 20)
                    t.insert(static_cast<Vertex>(t_rng.next_below(g.n())));
                targets.push_back(std::move(t));
            }
            int retries = static_cast<int>(std::ceil(3.0 * std::log(cell.n)));
            RngStream rng(8200 + instance, 2);
            auto res = covering_set(g, targets, 20, eps, big_k, retries, rng);
            if (!res.success) {
                c.require(false, "instance " + std::to_string(instance) +
                                     " failed after " + std::to_string(retries) +
                                     " retries");
                continue;
            }
            ++successes;
            bool connected = is_connected_set(g, res.t);
            bool hits = true;
            for (const VertexSet& t : targets)
                if (!res.t.intersects(t)) hits = false;
            c.require(connected,
                      "instance " + std::to_string(instance) + " disconnected T");
            c.require(hits, "instance " + std::to_string(instance) + " missed a target");
            c.require(static_cast<double>(res.t.size()) <= res.size_bound,
                      "instance " + std::to_string(instance) + " exceeds size bound");
        }
    }
    c.log << "  successes: " << successes << "/50\n";
    c.require(successes == 50, "needed 50/50 covering successes");
    return c;
}

// ---------------------------------------------------------------------------
// 5. Soundness: 1e5 witness fuzz cases and the exhaustive-ccl cross-check.
// ---------------------------------------------------------------------------

// Naive re-implementation of the witness rules, kept independent of
// verify_witness so mutations are confirmed broken before asserting.
bool naive_witness_valid(const Graph& g, const MinorWitness& w) {
    for (const VertexSet& s : w.branch_sets)
        if (s.empty()) return false;
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i)
        for (std::size_t j = i + 1; j < w.branch_sets.size(); ++j)
            for (Vertex x : w.branch_sets[i].to_vector())
                for (Vertex y : w.branch_sets[j].to_vector())
                    if (x == y) return false;
    for (const VertexSet& s : w.branch_sets) {
        auto vs = s.to_vector();
        std::vector<char> seen(vs.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (!seen[j] && g.has_edge(vs[i], vs[j])) {
                    seen[j] = 1;
                    ++count;
                    stack.push_back(j);
                }
        }
        if (count != vs.size()) return false;
    }
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i)
        for (std::size_t j = i + 1; j < w.branch_sets.size(); ++j) {
            bool adjacent = false;
            for (Vertex x : w.branch_sets[i].to_vector())
                for (Vertex y : w.branch_sets[j].to_vector())
                    if (g.has_edge(x, y)) adjacent = true;
            if (!adjacent) return false;
        }
    return true;
}

Criterion criterion5() {
    Criterion c;
    std::vector<Graph> pool;
    for (int i = 0; i < 60; ++i)
        pool.push_back(connected_gnp(5 + static_cast<Vertex>(i % 4), 0.5, 11000 + i));
    pool.push_back(complete_graph(4));
    pool.push_back(complete_graph(5));
    pool.push_back(cycle_graph(6));
    pool.push_back(cycle_graph(8));
    pool.push_back(two_triangles());
    pool.push_back(complete_bipartite(3, 5));

    std::vector<MinorWitness> bases;
    std::vector<std::uint32_t> ccl_values;
    for (const Graph& g : pool) {
        bases.push_back(brute_force_ccl_witness(g));
        ccl_values.push_back(bases.back().order());
    }

    RngStream rng(0xF0F0, 0);
    std::uint64_t accepted_valid = 0, rejected_mutated = 0, cases = 0;
    const std::uint64_t total_cases = 100000;
    while (cases < total_cases && c.ok) {
        std::size_t gi = rng.next_below(pool.size());
        const Graph& g = pool[gi];
        const MinorWitness& base = bases[gi];
        if (!verify_witness(g, base).valid) {
            c.require(false, "verifier rejected a valid witness");
            break;
        }
        ++accepted_valid;

        MinorWitness mutated = base;
        int kind = static_cast<int>(rng.next_below(4));
        bool built = false;
        switch (kind) {
            case 0: {  // overlap two sets
                if (base.branch_sets.size() >= 2) {
                    std::size_t i = rng.next_below(base.branch_sets.size());
                    std::size_t j = rng.next_below(base.branch_sets.size());
                    if (i != j) {
                        mutated.branch_sets[i].insert(base.branch_sets[j].front());
                        built = true;
                    }
                }
                break;
            }
            case 1: {  // empty a set
                std::size_t i = rng.next_below(base.branch_sets.size());
                mutated.branch_sets[i] = VertexSet(g.n());
                built = true;
                break;
            }
            case 2: {  // replace a set by a disconnected pair
                for (Vertex a = 0; a < g.n() && !built; ++a)
                    for (Vertex b = a + 1; b < g.n() && !built; ++b) {
                        if (g.has_edge(a, b)) continue;
                        mutated.branch_sets[rng.next_below(base.branch_sets.size())] =
                            VertexSet::of(g.n(), {a, b});
                        built = true;
                    }
                break;
            }
            case 3: {  // drop a vertex so a set may disconnect or detach
                std::size_t i = rng.next_below(base.branch_sets.size());
                if (base.branch_sets[i].size() >= 2) {
                    mutated.branch_sets[i].erase(base.branch_sets[i].front());
                    built = true;
                }
                break;
            }
        }
        if (!built || naive_witness_valid(g, mutated)) continue;  // resample

        ++cases;
        if (verify_witness(g, mutated).valid) {
            c.require(false, "verifier accepted a mutated witness (kind " +
                                 std::to_string(kind) + ")");
            break;
        }
        ++rejected_mutated;
    }
    c.log << "  accepted valid: " << accepted_valid
          << ", rejected mutated: " << rejected_mutated << "\n";

    // Engine never beats the exhaustive contraction-clique oracle.
    for (std::size_t gi = 0; gi < pool.size(); ++gi) {
        const Graph& g = pool[gi];
        if (g.n() > 8 || g.n() < 4) continue;
        EngineParams p =
            compute_params(g.n(), std::max<std::uint32_t>(3, g.max_degree()), 0.2,
                           EngineMode::ConstantDegree);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            RngStream run_rng(seed, gi);
            RunReport rep = find_minor(g, p, run_rng);
            if (rep.witness)
                c.require(rep.witness->order() <= ccl_values[gi],
                          "engine witness order beats exact ccl on pool graph " +
                              std::to_string(gi));
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// 6 & 8. Scaling sweep and determinism.
// ---------------------------------------------------------------------------

ExperimentConfig sweep_config() {
    nlohmann::json j = {
        {"schema_version", 1},
        {"time_budget_s", 300.0},
        {"cells",
         {{{"family", "regular"},
           {"n", {1024, 2048, 4096, 8192, 16384}},
           {"d", {8, 16}},
           {"eps", 0.4},
           {"mode", "sparse"},
           {"seeds", {1, 2, 3, 4, 5}}}}}};
    return config_from_json(j);
}

std::string strip_wall_column(const std::string& csv) {
    std::string out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.rfind(',');
        out += line.substr(0, pos);
        out += '\n';
    }
    return out;
}

struct SweepOutcome {
    std::vector<ResultRow> rows;
    std::string csv;
    int verified_witnesses = 0;
    int successes = 0;
    double wall_s = 0.0;
};

SweepOutcome run_sweep() {
    SweepOutcome out;
    double t0 = now_s();
    ExperimentConfig cfg = sweep_config();
    ExperimentCallbacks cb;
    cb.on_witness = [&](const ResultRow&, const MinorWitness& w) {
        if (w.order() >= 1) ++out.verified_witnesses;
    };
    ExperimentResult res = run_experiment(cfg, 1, cb);
    out.rows = res.rows;
    out.csv = emit_csv(res.rows);
    for (const ResultRow& r : out.rows)
        if (r.outcome == "success") ++out.successes;
    out.wall_s = now_s() - t0;
    return out;
}

Criterion criterion6(const SweepOutcome& sweep) {
    Criterion c;
    c.require(sweep.rows.size() == 50, "expected 50 rows");
    std::map<std::pair<std::uint32_t, Vertex>, std::vector<std::uint32_t>> achieved;
    for (const ResultRow& r : sweep.rows) {
        c.require(r.outcome == "success" || r.outcome == "failure",
                  r.key() + ": unexpected outcome " + r.outcome + " (" + r.detail + ")");
        c.require(r.iterations <= 2 * r.n, r.key() + ": iteration cap exceeded");
        achieved[{r.d, r.n}].push_back(r.achieved_r);
    }
    // Median achieved order must be non-decreasing in n for each d.
    for (std::uint32_t d : {8u, 16u}) {
        double prev = -1.0;
        for (Vertex n : {1024u, 2048u, 4096u, 8192u, 16384u}) {
            auto& v = achieved[{d, n}];
            c.require(v.size() == 5, "missing rows for d=" + std::to_string(d) +
                                         " n=" + std::to_string(n));
            if (v.size() != 5) continue;
            std::sort(v.begin(), v.end());
            double median = v[2];
            c.log << "  d=" << d << " n=" << n << " achieved=[" << v[0] << "," << v[1]
                  << "," << v[2] << "," << v[3] << "," << v[4] << "] median=" << median
                  << "\n";
            c.require(median + 1e-9 >= prev,
                      "median achieved order decreased at d=" + std::to_string(d) +
                          " n=" + std::to_string(n));
            prev = median;
        }
    }
    // Among eigenvalue-certified runs, >= 80% must reach the target. At
    // eps = 0.4 and these degrees no run certifies (lambda2 of a d-regular
    // graph sits near 2 sqrt(d-1), far above d/10), so the clause is
    // typically vacuous; it is still enforced when it applies.
    int certified = 0, certified_success = 0;
    for (const ResultRow& r : sweep.rows)
        if (r.certified && r.route == std::string("eigenvalue")) {
            ++certified;
            if (r.outcome == "success") ++certified_success;
        }
    c.log << "  eigenvalue-certified runs: " << certified << "\n";
    if (certified > 0)
        c.require(certified_success * 5 >= certified * 4,
                  "under 80% success among eigenvalue-certified runs");
    c.log << "  successes: " << sweep.successes
          << "/50, verified witnesses: " << sweep.verified_witnesses << "\n";
    c.require(sweep.verified_witnesses == sweep.successes,
              "a success row lacks a verified witness");
    c.log << "  sweep wall time: " << sweep.wall_s << "s\n";
    c.require(sweep.wall_s < 1800.0, "sweep exceeded the 30-minute budget");
    return c;
}

// ---------------------------------------------------------------------------
// 7. The complete-bipartite counterexample: ccl(K_{3,5}) = 4 and the engine
//    never emits a complete witness of order 5 on it.
// ---------------------------------------------------------------------------
Criterion criterion7() {
    Criterion c;
    Graph g = complete_bipartite(3, 5);
    std::uint32_t exact = brute_force_ccl(g);
    c.require(exact == 4, "ccl(K_{3,5}) computed as " + std::to_string(exact));

    EngineParams natural = compute_params(8, 5, 0.3, EngineMode::ConstantDegree);
    EngineParams forced = natural;
    forced.r = 5;
    int forced_failures = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RngStream r1(seed, 1);
        RunReport rep1 = find_minor(g, natural, r1);
        if (rep1.witness) {
            c.require(verify_witness(g, *rep1.witness).valid, "invalid witness emitted");
            c.require(rep1.witness->order() <= 4, "engine claimed order >= 5 on K_{3,5}");
        }
        RngStream r2(seed, 2);
        RunReport rep2 = find_minor(g, forced, r2);
        c.require(!rep2.success, "engine reported success at forced r = 5");
        if (!rep2.success) ++forced_failures;
        if (rep2.witness)
            c.require(rep2.witness->order() <= 4, "engine claimed order >= 5 on K_{3,5}");
    }
    c.log << "  forced-target failures: " << forced_failures << "/100\n";
    return c;
}

Criterion criterion8(const SweepOutcome& first) {
    Criterion c;
    SweepOutcome second = run_sweep();
    c.require(strip_wall_column(first.csv) == strip_wall_column(second.csv),
              "repeated sweep differs outside the timing column");
    return c;
}

}  // namespace
}  // namespace kminor

int main() {
    using namespace kminor;
    int failures = 0;
    std::size_t total = 0;

    auto run = [&](const char* name, auto&& fn) {
        double t0 = now_s();
        Criterion c = fn();
        double dt = now_s() - t0;
        ++total;
        std::printf("[%s] %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", name, dt,
                    c.ok ? "" : " - ", c.detail.c_str());
        std::string log = c.log.str();
        if (!log.empty()) std::fputs(log.c_str(), stdout);
        std::fflush(stdout);
        if (!c.ok) ++failures;
    };

    std::vector<Graph> suite = small_suite();
    run("criterion 1: Cheeger inequality suite", [&] { return criterion1(suite); });
    run("criterion 2: deterministic lemma suite", [&] { return criterion2(suite); });
    run("criterion 3: walk miss-probability bound", [] { return criterion3(); });
    run("criterion 4: covering-set contract", [] { return criterion4(); });
    run("criterion 5: witness soundness", [] { return criterion5(); });
    SweepOutcome sweep;
    run("criterion 6: scaling sweep", [&] {
        sweep = run_sweep();
        return criterion6(sweep);
    });
    run("criterion 7: complete-bipartite counterexample", [] { return criterion7(); });
    run("criterion 8: sweep determinism", [&] { return criterion8(sweep); });

    std::printf("%d/%zu criteria passed\n", static_cast<int>(total) - failures, total);
    return failures;
}
