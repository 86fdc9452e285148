#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kminor/graph.hpp"
#include "kminor/rng.hpp"

namespace kminor {

enum class EngineMode { Sparse, ConstantDegree, Intermediate };

std::optional<EngineMode> parse_mode(const std::string& name);
const char* mode_name(EngineMode m);

/// All tuning constants and the quantities derived from them. The derivation
/// in compute_params follows the shape of the analysis (t ~ sqrt(n log d / d),
/// r ~ n / t, walk length ~ (n/s) log(qs/n)) with coefficients chosen so the
/// machine is operable at bench scale; every field can be overridden before a
/// run and is echoed into reports.
struct EngineParams {
    EngineMode mode = EngineMode::Sparse;
    Vertex n = 0;
    std::uint32_t d = 0;  // maximum degree the derivation assumed
    double eps = 0.0;
    double zeta = 0.0;   // eps / 8
    double slack = 0.0;  // branch-set slack fraction; cap is (1 + slack) t

    std::uint32_t t = 0;  // branch-set size scale
    std::uint32_t r = 0;  // target minor order

    double size_cap = 0.0;          // max |T_i|
    double keep_threshold = 0.0;    // min |N(T_i) \cap U| to retain T_i
    double keep_edges = 0.0;        // constant-degree: min e(T_i, U)
    double u_min_deg = 0.0;         // zeta d
    double growth_threshold = 0.0;  // (1/2 + 3 zeta) d
    double spectral_gate = 0.0;     // zeta^2 / 2
    double d_rate_small = 0.0;      // (d) rate while |D| <= eps n
    double d_rate_big = 0.0;        // (d) rate once |D| > eps n
    double hit_fraction = 1.0;      // 0.1 in intermediate mode
    double pair_threshold = 0.0;    // intermediate witness threshold (ordered pairs)

    std::uint64_t s = 1;       // covering min target size
    double cover_coeff = 16.0; // walk length = coeff (|U|/s) log(q s/|U|)
    double cover_cap = 0.0;    // max covering-set size accepted
    double K = 0.0;            // covering size-bound constant (reported)
    double C = 3.0;            // retry coefficient
    int retries = 1;           // ceil(C ln n)
};

/// Derives EngineParams for a graph of order n with maximum degree d.
/// Rejects degenerate regimes (sparse mode requires t <= eps n / (4d) so the
/// growth step stays inside its domain) with an error naming the violated
/// inequality.
EngineParams compute_params(Vertex n, std::uint32_t d, double eps, EngineMode mode);

struct GrowthResult {
    enum class Kind { Grown, Obstruction, Stuck };
    Kind kind = Kind::Stuck;
    VertexSet set;                // X when grown; X plus its neighborhood otherwise
    std::uint64_t external = 0;   // |N(set)| at termination
};

/// Greedy connected-expander growth: extend X from v one vertex at a time,
/// always keeping |N(X)| >= (threshold - 1) |X| when possible. When no
/// extension can maintain the bound and none adds `threshold` new neighbors,
/// X together with N(X) certifies e(X u N(X), rest) < threshold |X u N(X)|
/// and is returned as the obstruction.
GrowthResult grow_connected_expander(const Graph& g, Vertex v, std::uint32_t s,
                                     double threshold);

struct MinorWitness {
    enum class Kind { Complete, PairFraction };
    Kind kind = Kind::Complete;
    double threshold = 0.0;  // pair-fraction only; counted over ordered pairs
    std::vector<VertexSet> branch_sets;
    std::uint32_t order() const { return static_cast<std::uint32_t>(branch_sets.size()); }
};

struct WitnessReport {
    bool valid = false;
    std::string violation;  // empty when valid
    int index_a = -1;
    int index_b = -1;
    std::uint64_t adjacent_ordered_pairs = 0;
};

/// Checks nonemptiness, disjointness, per-set connectivity and the adjacency
/// requirement of the witness kind. Violations are report content.
WitnessReport verify_witness(const Graph& g, const MinorWitness& w);

struct Partition {
    VertexSet d_set;
    std::vector<VertexSet> branch_sets;
    VertexSet u_set;
    /// Certified adjacent (unordered) index pairs; intermediate mode only.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_edges;
};

struct PartitionReport {
    bool valid = false;
    std::string violation;
};

/// Checks the mode-appropriate partition constraints against the engine
/// parameters: branch-set size/connectivity/neighborhood, pairwise adjacency
/// (or the pair fraction), |D| <= 2n/3, and the e(D, U) rate.
PartitionReport verify_partition(const Graph& g, const Partition& p,
                                 const EngineParams& params);

enum class EngineEvent {
    TiRecycled,
    VertexMoved,
    SweepMoved,
    CoveringBuilt,
    ExpanderGrown,
    SMoved,
};
const char* event_name(EngineEvent e);

struct HistoryEntry {
    std::uint32_t iteration = 0;
    EngineEvent event = EngineEvent::VertexMoved;
    std::uint32_t moved = 0;  // vertices involved in the event
    std::uint32_t q = 0;
    std::uint64_t d_size = 0;
    std::uint64_t u_size = 0;
};

struct RunReport {
    bool success = false;
    std::string failure_reason;  // empty on success
    /// Best verified witness encountered (present even on failure whenever
    /// at least one branch set was formed).
    std::optional<MinorWitness> witness;
    std::uint32_t achieved_order = 0;  // order of `witness`, 0 if none
    std::uint32_t target_r = 0;
    std::uint32_t iterations = 0;
    std::vector<HistoryEntry> history;
    Partition final_partition;
};

struct EngineOptions {
    std::uint32_t max_iterations = 0;  // 0 means 2n
    bool check_invariants = false;     // verify_partition after every iteration
    double time_budget_s = 0.0;        // 0 means unlimited
    double spectral_tol = 1e-6;
    std::uint64_t spectral_budget = 30000;  // matvecs per evaluation
};

/// The partition-refinement loop: recycle starved branch sets, shed
/// low-degree vertices, cut along the Fiedler sweep when the working graph
/// stops expanding, otherwise build a covering set by a lazy walk and grow
/// it into the next branch set. Runs until q = r, an iteration/time cap, or
/// |U| < n/2. Every reported witness has been verified.
RunReport find_minor(const Graph& g, const EngineParams& params, RngStream& rng,
                     const EngineOptions& opts = {});

/// Exact contraction clique number by exhaustive search over partitions of
/// vertex subsets into connected, pairwise adjacent blocks. n <= 10.
std::uint32_t brute_force_ccl(const Graph& g);

/// Same search, returning one maximizing witness.
MinorWitness brute_force_ccl_witness(const Graph& g);

}  // namespace kminor
