#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kminor/graph.hpp"

namespace kminor {

/// Visits every nonempty subset of a graph with n <= 63 vertices in
/// Gray-code order, maintaining the cut and volume incrementally.
/// visit(mask, size, cut, vol).
template <typename F>
void for_each_subset(const Graph& g, F&& visit) {
    const Vertex n = g.n();
    std::vector<std::uint64_t> row(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) row[v] |= 1ull << w;
    std::uint64_t cur = 0, cut = 0, vol = 0;
    std::uint32_t size = 0;
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t gray = code ^ (code >> 1);
        unsigned v = static_cast<unsigned>(__builtin_ctzll(code));
        std::uint64_t bit = 1ull << v;
        std::uint32_t deg = g.degree(static_cast<Vertex>(v));
        if (gray & bit) {
            std::uint32_t inside = static_cast<std::uint32_t>(__builtin_popcountll(row[v] & cur));
            cut += deg - 2ull * inside;
            vol += deg;
            cur |= bit;
            ++size;
        } else {
            cur &= ~bit;
            std::uint32_t inside = static_cast<std::uint32_t>(__builtin_popcountll(row[v] & cur));
            cut -= deg - 2ull * inside;
            vol -= deg;
            --size;
        }
        visit(cur, size, cut, vol);
    }
}

/// Result of a brute-force cut minimization. `value` = cut / denom where
/// denom is |S| (edge expansion) or min-volume (h'). The minimizing set is
/// returned; ties break toward smaller sets, then lexicographically.
struct CutMinimum {
    double value = 0.0;
    std::uint64_t cut = 0;
    std::uint64_t denom = 0;
    VertexSet set;
};

inline constexpr Vertex kDefaultExhaustiveLimit = 20;

/// h_k(G): exact minimum of e(S, V\S)/|S| over nonempty S with |S| <= k.
/// h(G) is the case k = floor(n/2). Brute force; errors above the limit.
CutMinimum cheeger_exact(const Graph& g, Vertex k,
                         Vertex exhaustive_limit = kDefaultExhaustiveLimit);

/// h'(G): exact minimum of cut/min(vol(S), vol(V\S)) over proper nonempty S.
CutMinimum h_prime_exact(const Graph& g,
                         Vertex exhaustive_limit = kDefaultExhaustiveLimit);

struct ConductanceResult {
    double value = 0.0;
    bool disconnected = false;
    std::uint64_t cut = 0;
    std::uint64_t vol = 0;
    VertexSet set;
};

/// Phi(G) = min over 0 < vol(S) <= m of cut(S) / (2 vol(S)). Brute force.
/// A disconnected graph yields 0 with the flag set.
ConductanceResult conductance_exact(const Graph& g,
                                    Vertex exhaustive_limit = kDefaultExhaustiveLimit);

struct EigenResult {
    double value = 0.0;
    bool disconnected = false;
    bool converged = false;
    double residual = 0.0;
    std::uint64_t matvecs = 0;
    /// Eigenvector in the D^{1/2} coordinate space (normalized Laplacian).
    std::vector<double> vector;
};

/// Second-smallest eigenvalue of the normalized Laplacian, by Lanczos
/// iteration with the known kernel direction (proportional to sqrt(deg))
/// deflated. Certified by the residual ||Lx - lambda x|| <= tol.
/// Disconnected graphs report 0 with a flag instead of an error.
EigenResult lambda_normalized(const Graph& g, double tol = 1e-8,
                              std::uint64_t budget = 100000,
                              const std::vector<double>* warm_start = nullptr);

struct AdjacencySpectrum {
    double lambda2 = 0.0;     // second largest, signed
    double lambda_min = 0.0;  // smallest
    double lambda_abs2 = 0.0; // max(|lambda2|, |lambda_min|)
    double residual = 0.0;
    std::uint64_t matvecs = 0;
};

/// Second-largest adjacency eigenvalue (signed) plus the smallest, via
/// shifted Lanczos with deflation of the top eigenvector (all-ones for
/// regular graphs, otherwise computed first).
AdjacencySpectrum lambda2_adjacency(const Graph& g, double tol = 1e-8,
                                    std::uint64_t budget = 100000);

struct SweepCut {
    VertexSet set;           // side with vol(S) <= vol(V)/2
    std::uint64_t cut = 0;
    std::uint64_t vol = 0;   // volume of the returned side
    double cut_ratio = 0.0;  // cut / min(vol, 2m - vol)
    double rayleigh = 0.0;   // exact Rayleigh quotient of the sweep vector
    double bound = 0.0;      // sqrt(2 * rayleigh); cut_ratio <= bound always
    double lambda = 0.0;     // eigenvalue estimate used
};

/// Best prefix cut along the degree-normalized Fiedler direction.
SweepCut sweep_cut(const Graph& g, double tol = 1e-8);

/// Same scan with a caller-supplied vector in the D^{1/2} space.
SweepCut sweep_cut_from_vector(const Graph& g, const std::vector<double>& x,
                               double lambda_estimate);

struct GateReport {
    enum class Route { Exact, Eigenvalue, Uncertified };
    Route route = Route::Uncertified;
    bool certified = false;
    double eps = 0.0;
    std::uint32_t d = 0;

    bool exact_evaluated = false;
    bool exact_certified = false;
    double h = 0.0;
    double h_k = 0.0;
    Vertex k = 0;

    bool eigen_evaluated = false;
    bool eigen_certified = false;
    double lambda2 = 0.0;
    double lambda2_threshold = 0.0;
    // Expansion bounds implied by a certified eigenvalue route.
    double implied_h_lower = 0.0;
    double implied_hk_lower = 0.0;
    Vertex implied_k = 0;
};

/// Decides which expansion-hypothesis route is certified: exact brute force
/// for small graphs, the eigenvalue condition lambda2 < (1/2 - eps) d for
/// regular graphs, or uncertified (the extraction may still be attempted;
/// its witnesses are verified regardless).
GateReport gate_theorem_hypotheses(const Graph& g, double eps,
                                   Vertex exhaustive_limit = kDefaultExhaustiveLimit,
                                   double tol = 1e-8);

const char* route_name(GateReport::Route r);

struct ExpansionReport {
    Vertex n = 0;
    std::uint64_t m = 0;
    std::uint32_t max_degree = 0;
    bool connected = false;

    // Exact metrics, present only when n is within the exhaustive limit.
    std::optional<CutMinimum> h;
    std::optional<CutMinimum> h_k;
    Vertex k = 0;
    std::optional<CutMinimum> h_prime;
    std::optional<ConductanceResult> phi;

    EigenResult lambda_norm;
    std::optional<AdjacencySpectrum> adjacency;
    // Certified lower bound h >= (lambda/2) * min_degree when exact h is
    // out of reach.
    std::optional<double> h_lower_bound;
    std::optional<SweepCut> sweep;
    GateReport gate;
};

ExpansionReport analyze(const Graph& g, double eps = 0.4, double tol = 1e-8,
                        Vertex exhaustive_limit = kDefaultExhaustiveLimit);

}  // namespace kminor
