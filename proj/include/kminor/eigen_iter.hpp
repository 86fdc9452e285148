#pragma once

#include <cstdint>
#include <vector>

#include "kminor/graph.hpp"

namespace kminor::eigen_iter {

/// Sparse symmetric operators the iterative solver can apply. All are
/// positive semidefinite shifts of the quantity of interest, so the largest
/// eigenvalue is the one Lanczos converges to.
struct SymOperator {
    enum class Kind {
        TwoMinusNormalizedLaplacian,  // I + D^{-1/2} A D^{-1/2}
        AdjacencyPlusShift,           // A + shift I
        ShiftMinusAdjacency,          // shift I - A
    };

    static SymOperator normalized(const Graph& g);
    static SymOperator adjacency_shifted(const Graph& g, double shift);
    static SymOperator shifted_minus_adjacency(const Graph& g, double shift);

    void apply(const std::vector<double>& x, std::vector<double>& y) const;
    Vertex n() const { return graph->n(); }

    const Graph* graph = nullptr;
    Kind kind = Kind::AdjacencyPlusShift;
    double shift = 0.0;
    std::vector<double> inv_sqrt_deg;
};

struct ExtremeEigenResult {
    double theta = 0.0;  // Rayleigh quotient of `vec` under the operator
    std::vector<double> vec;
    double residual = 0.0;
    std::uint64_t matvecs = 0;
    bool converged = false;
};

/// Largest eigenpair of `op` restricted to the orthogonal complement of the
/// deflation vectors. Lanczos with full reorthogonalization, restarted from
/// the best Ritz vector until the residual certificate passes or the matvec
/// budget runs out. Deterministic: the fallback start vector is pseudo-random
/// with a fixed seed derived from the graph size.
ExtremeEigenResult top_eigenpair(const SymOperator& op,
                                 const std::vector<std::vector<double>>& deflate,
                                 const std::vector<double>* warm_start,
                                 double tol, std::uint64_t budget,
                                 std::uint32_t max_lanczos_dim = 48);

}  // namespace kminor::eigen_iter
