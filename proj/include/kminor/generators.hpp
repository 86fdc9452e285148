#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kminor/graph.hpp"
#include "kminor/rng.hpp"

namespace kminor {

/// Uniform-ish random d-regular graph by incremental stub pairing: random
/// stub pairs are drawn and kept only when they create neither a loop nor a
/// repeated edge; a stuck matching restarts from scratch. Restart budget 500.
/// Requires n*d even, 3 <= d < n.
Graph random_regular(Vertex n, std::uint32_t d, RngStream& rng);

/// Binomial random graph: each pair kept independently with probability p.
Graph gnp(Vertex n, double p, RngStream& rng);

Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);
Graph petersen();
/// Two triangles joined by a single bridge edge (6 vertices, 7 edges).
Graph two_triangles();

struct GenSpec {
    enum class Family {
        Regular,
        Gnp,
        Cycle,
        Complete,
        CompleteBipartite,
        Petersen,
        TwoTriangles,
    };
    Family family = Family::Regular;
    Vertex n = 0;
    std::uint32_t d = 0;
    double p = 0.0;
    Vertex a = 0;
    Vertex b = 0;
    std::uint64_t seed = 0;
};

std::optional<GenSpec::Family> parse_family(const std::string& name);
std::string family_name(GenSpec::Family f);

Graph generate(const GenSpec& spec);

/// Checks |e(X) - p*C(|X|,2)| <= beta*|X|. Exact subset enumeration up to
/// exhaustive_limit vertices; above it a sampling sweep that can only report
/// violations, never certify.
struct JumblednessReport {
    bool exact = false;
    bool violated = false;
    std::vector<Vertex> worst;  // maximally violating subset when violated
    double margin = 0.0;        // max of |e(X) - p*C(|X|,2)| - beta*|X|
    std::uint64_t subsets_checked = 0;
};

JumblednessReport jumbledness_check(const Graph& g, double p, double beta,
                                    Vertex exhaustive_limit = 20,
                                    std::uint64_t sample_count = 10000,
                                    std::uint64_t sample_seed = 1);

}  // namespace kminor
