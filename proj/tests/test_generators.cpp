#include "kminor/generators.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "gtest/gtest.h"

namespace kminor {
namespace {

TEST(RandomRegular, K4IsForced) {
    RngStream rng(1, 0);
    Graph g = random_regular(4, 3, rng);
    EXPECT_EQ(g.m(), 6u);  // the unique 3-regular graph on 4 vertices
}

TEST(RandomRegular, ParityRejected) {
    RngStream rng(1, 0);
    EXPECT_THROW(random_regular(5, 3, rng), std::invalid_argument);
}

TEST(RandomRegular, ExactDegrees) {
    RngStream rng(42, 0);
    Graph g = random_regular(1000, 8, rng);
    EXPECT_EQ(g.n(), 1000u);
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_EQ(g.degree(v), 8u);
    // Simplicity is enforced by construction; spot-check symmetry.
    for (Vertex v = 0; v < g.n(); v += 97)
        for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.has_edge(w, v));
}

TEST(RandomRegular, Deterministic) {
    RngStream a(7, 0), b(7, 0);
    Graph g1 = random_regular(64, 5, a);
    Graph g2 = random_regular(64, 5, b);
    EXPECT_EQ(g1.edges(), g2.edges());
}

// Canonical form of an 8-vertex graph by minimizing the adjacency bitmask
// over all vertex permutations.
std::uint64_t canonical_form_8(const Graph& g) {
    std::array<Vertex, 8> perm{0, 1, 2, 3, 4, 5, 6, 7};
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t mask = 0;
        for (auto [u, v] : g.edges()) {
            Vertex a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            mask |= 1ull << (a * 8 + b);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

TEST(RandomRegular, HitsSeveralIsomorphismClasses) {
    std::set<std::uint64_t> classes;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RngStream rng(seed, 1);
        classes.insert(canonical_form_8(random_regular(8, 3, rng)));
    }
    EXPECT_GE(classes.size(), 4u);
}

TEST(Gnp, Extremes) {
    RngStream rng(3, 0);
    EXPECT_EQ(gnp(50, 0.0, rng).m(), 0u);
    EXPECT_EQ(gnp(10, 1.0, rng).m(), 45u);
}

TEST(Gnp, EdgeCountWithinFourSigma) {
    // Binomial(C(1000,2), 0.01): mean 4995, sigma ~ 70.3.
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        RngStream rng(seed, 0);
        Graph g = gnp(1000, 0.01, rng);
        EXPECT_NEAR(static_cast<double>(g.m()), 4995.0, 4 * 70.4);
    }
}

TEST(Gnp, Deterministic) {
    RngStream a(9, 4), b(9, 4);
    EXPECT_EQ(gnp(80, 0.1, a).edges(), gnp(80, 0.1, b).edges());
}

TEST(Fixtures, Cycle) {
    Graph g = cycle_graph(6);
    EXPECT_EQ(g.m(), 6u);
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 2u);
    EXPECT_TRUE(g.has_edge(5, 0));
}

TEST(Fixtures, Petersen) {
    Graph g = petersen();
    EXPECT_EQ(g.n(), 10u);
    EXPECT_EQ(g.m(), 15u);
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3u);
    // Girth 5: no triangle (common neighbor of an edge) and no 4-cycle
    // (two common neighbors of a non-edge) anywhere.
    for (auto [u, v] : g.edges()) {
        VertexSet nu(10), nv(10);
        for (Vertex w : g.neighbors(u)) nu.insert(w);
        for (Vertex w : g.neighbors(v)) nv.insert(w);
        VertexSet common = nu;
        common &= nv;
        EXPECT_TRUE(common.empty());
    }
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = u + 1; v < 10; ++v) {
            if (g.has_edge(u, v)) continue;
            VertexSet nu(10), nv(10);
            for (Vertex w : g.neighbors(u)) nu.insert(w);
            for (Vertex w : g.neighbors(v)) nv.insert(w);
            VertexSet common = nu;
            common &= nv;
            EXPECT_LE(common.size(), 1u);
        }
}

TEST(Fixtures, TwoTriangles) {
    Graph g = two_triangles();
    EXPECT_EQ(g.n(), 6u);
    EXPECT_EQ(g.m(), 7u);
    EXPECT_EQ(g.degree(2), 3u);
    EXPECT_EQ(g.degree(3), 3u);
    EXPECT_EQ(g.degree(0), 2u);
}

TEST(Fixtures, CompleteBipartite) {
    Graph g = complete_bipartite(3, 5);
    EXPECT_EQ(g.n(), 8u);
    EXPECT_EQ(g.m(), 15u);
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 5u);
    for (Vertex v = 3; v < 8; ++v) EXPECT_EQ(g.degree(v), 3u);
}

TEST(Fixtures, GenerateDispatch) {
    GenSpec spec;
    spec.family = GenSpec::Family::Petersen;
    EXPECT_EQ(generate(spec).n(), 10u);
    EXPECT_EQ(*parse_family("two-triangles"), GenSpec::Family::TwoTriangles);
    EXPECT_STREQ(family_name(GenSpec::Family::Gnp).c_str(), "gnp");
    EXPECT_FALSE(parse_family("nope").has_value());
}

TEST(Jumbledness, CompleteGraphIsTight) {
    Graph g = complete_graph(6);
    auto rep = jumbledness_check(g, 1.0, 0.0);
    EXPECT_TRUE(rep.exact);
    EXPECT_FALSE(rep.violated);
    EXPECT_LE(rep.margin, 0.0);
}

TEST(Jumbledness, EdgelessViolation) {
    Graph g = build_graph(6, {});
    auto rep = jumbledness_check(g, 0.5, 1.0);
    EXPECT_TRUE(rep.exact);
    EXPECT_TRUE(rep.violated);
    // Worst subset is all of V: |0 - 7.5| - 6 = 1.5.
    EXPECT_EQ(rep.worst.size(), 6u);
    EXPECT_NEAR(rep.margin, 1.5, 1e-12);
}

TEST(Jumbledness, MatchesIndependentEnumeration) {
    Graph g = cycle_graph(6);
    const double p = 1.0 / 3.0, beta = 2.0;
    auto rep = jumbledness_check(g, p, beta);
    EXPECT_TRUE(rep.exact);
    double worst = -1e9;
    for (std::uint32_t mask = 1; mask < 64; ++mask) {
        std::uint32_t k = static_cast<std::uint32_t>(__builtin_popcount(mask));
        std::uint64_t edges_in = 0;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) ++edges_in;
        double viol = std::abs(static_cast<double>(edges_in) - p * k * (k - 1) / 2.0) -
                      beta * k;
        worst = std::max(worst, viol);
    }
    EXPECT_NEAR(rep.margin, worst, 1e-12);
    EXPECT_EQ(rep.violated, worst > 0.0);
}

TEST(Jumbledness, SamplingModeFindsGrossViolations) {
    Graph g = build_graph(30, {});  // edgeless, above the exhaustive limit
    auto rep = jumbledness_check(g, 0.5, 0.1, 20, 2000, 7);
    EXPECT_FALSE(rep.exact);
    EXPECT_TRUE(rep.violated);
}

}  // namespace
}  // namespace kminor
