#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kminor/graph.hpp"
#include "kminor/rng.hpp"

namespace kminor {

struct WalkTrace {
    std::vector<Vertex> vertices;  // steps + 1 entries
    VertexSet visited;
};

/// One lazy transition: stay with probability 1/2, otherwise a uniformly
/// random neighbor. Draw order is fixed (stay bit first, then the neighbor
/// index), so traces are reproducible.
Vertex lazy_step(const Graph& g, Vertex v, RngStream& rng);

/// Degree-proportional vertex draw via the cumulative degree table.
Vertex sample_stationary(const Graph& g, RngStream& rng);

/// Lazy walk of `steps` transitions. Starts from `start`, or from the
/// stationary distribution when `start` is empty.
WalkTrace run_walk(const Graph& g, std::uint64_t steps, RngStream& rng,
                   std::optional<Vertex> start = std::nullopt);

/// Closed-form bound on the probability that a stationary-start lazy walk of
/// `steps` steps misses a vertex set of size u_size:
/// exp(-(h^3 / (8 d^3)) * u_size * steps / n).
double miss_probability_bound(double h, double d, double u_size, double n,
                              double steps);

struct CoveringOptions {
    std::optional<std::uint64_t> ell_override;
    std::optional<double> size_cap_override;
    /// Keep only a minimal connected skeleton of walk-plus-paths instead of
    /// the full visited set.
    bool prune = false;
    /// Fraction of the targets that must be intersected (1.0 = all). The
    /// closest targets are chosen first.
    double hit_fraction = 1.0;
};

struct CoveringResult {
    bool success = false;
    VertexSet t;                    // best set found (meets the cap on success)
    std::vector<std::uint32_t> hit; // indices of intersected targets
    std::uint64_t ell = 0;          // walk length per retry
    double size_bound = 0.0;
    int retries_used = 0;
    std::size_t best_size = 0;
};

/// Connected set intersecting the required fraction of the targets, built
/// from one stationary-start lazy walk plus a shortest path from each target
/// to the walk (one multi-source BFS). Retried with derived streams until
/// the size bound K (n/s) log(q s / n) holds; when the target family is too
/// small the log term is padded as if dummy targets brought q s up to 2n.
CoveringResult covering_set(const Graph& g, const std::vector<VertexSet>& targets,
                            std::uint64_t s, double eps, double K, int retries,
                            RngStream& rng, const CoveringOptions& opts = {});

}  // namespace kminor
