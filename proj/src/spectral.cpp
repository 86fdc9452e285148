#include "kminor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "kminor/eigen_iter.hpp"
#include "kminor/rng.hpp"

namespace kminor {

namespace {

void require_exhaustive(const Graph& g, Vertex limit, const char* op) {
    if (g.n() > limit || g.n() > 63)
        throw std::invalid_argument(std::string(op) + ": n = " + std::to_string(g.n()) +
                                    " exceeds the exhaustive limit " +
                                    std::to_string(std::min<Vertex>(limit, 63)) +
                                    "; use certified bounds instead");
}

VertexSet mask_to_set(Vertex n, std::uint64_t mask) {
    VertexSet s(n);
    while (mask) {
        unsigned v = static_cast<unsigned>(__builtin_ctzll(mask));
        s.insert(static_cast<Vertex>(v));
        mask &= mask - 1;
    }
    return s;
}

/// Candidate ordering for brute-force minima: value as an exact rational,
/// then smaller set, then the set whose lowest differing vertex is its own.
struct BestCut {
    bool has = false;
    std::uint64_t num = 0;     // cut
    std::uint64_t den = 1;     // |S| or volume term
    std::uint64_t mask = 0;
    std::uint32_t size = 0;

    void offer(std::uint64_t num2, std::uint64_t den2, std::uint64_t mask2,
               std::uint32_t size2) {
        if (!has) {
            has = true;
            num = num2; den = den2; mask = mask2; size = size2;
            return;
        }
        // num/den vs num2/den2 by cross multiplication (values fit easily).
        __uint128_t lhs = static_cast<__uint128_t>(num2) * den;
        __uint128_t rhs = static_cast<__uint128_t>(num) * den2;
        bool better = false;
        if (lhs < rhs) {
            better = true;
        } else if (lhs == rhs) {
            if (size2 < size) {
                better = true;
            } else if (size2 == size && mask2 != mask) {
                std::uint64_t diff = mask2 ^ mask;
                std::uint64_t low = diff & (~diff + 1);
                better = (mask2 & low) != 0;
            }
        }
        if (better) {
            num = num2; den = den2; mask = mask2; size = size2;
        }
    }
};

}  // namespace

CutMinimum cheeger_exact(const Graph& g, Vertex k, Vertex exhaustive_limit) {
    require_exhaustive(g, exhaustive_limit, "cheeger_exact");
    if (g.n() < 2) throw std::invalid_argument("cheeger_exact: need n >= 2");
    if (k < 1 || k > g.n() / 2)
        throw std::invalid_argument("cheeger_exact: need 1 <= k <= n/2");
    BestCut best;
    for_each_subset(g, [&](std::uint64_t mask, std::uint32_t size, std::uint64_t cut,
                           std::uint64_t) {
        if (size >= 1 && size <= k) best.offer(cut, size, mask, size);
    });
    CutMinimum out;
    out.cut = best.num;
    out.denom = best.den;
    out.value = static_cast<double>(best.num) / static_cast<double>(best.den);
    out.set = mask_to_set(g.n(), best.mask);
    return out;
}

CutMinimum h_prime_exact(const Graph& g, Vertex exhaustive_limit) {
    require_exhaustive(g, exhaustive_limit, "h_prime_exact");
    if (g.m() == 0) throw std::invalid_argument("h_prime_exact: edgeless graph");
    const std::uint64_t total_vol = 2 * g.m();
    BestCut best;
    for_each_subset(g, [&](std::uint64_t mask, std::uint32_t size, std::uint64_t cut,
                           std::uint64_t vol) {
        if (size == 0 || size == g.n()) return;
        std::uint64_t denom = std::min(vol, total_vol - vol);
        if (denom == 0) return;  // isolated-vertex side
        best.offer(cut, denom, mask, size);
    });
    CutMinimum out;
    out.cut = best.num;
    out.denom = best.den;
    out.value = static_cast<double>(best.num) / static_cast<double>(best.den);
    out.set = mask_to_set(g.n(), best.mask);
    return out;
}

ConductanceResult conductance_exact(const Graph& g, Vertex exhaustive_limit) {
    require_exhaustive(g, exhaustive_limit, "conductance_exact");
    if (g.m() == 0) throw std::invalid_argument("conductance_exact: edgeless graph");
    const std::uint64_t m = g.m();
    BestCut best;
    for_each_subset(g, [&](std::uint64_t mask, std::uint32_t size, std::uint64_t cut,
                           std::uint64_t vol) {
        if (size == 0 || vol == 0 || vol > m) return;  // pi(S) in (0, 1/2]
        best.offer(cut, 2 * vol, mask, size);
    });
    ConductanceResult out;
    out.disconnected = !is_connected(g);
    out.cut = best.num;
    out.vol = best.den / 2;
    out.value = static_cast<double>(best.num) / static_cast<double>(best.den);
    out.set = mask_to_set(g.n(), best.mask);
    return out;
}

// ---------------------------------------------------------------------------
// Iterative eigensolver.
// ---------------------------------------------------------------------------

namespace eigen_iter {

SymOperator SymOperator::normalized(const Graph& g) {
    SymOperator op;
    op.graph = &g;
    op.kind = Kind::TwoMinusNormalizedLaplacian;
    op.inv_sqrt_deg.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        op.inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
    return op;
}

SymOperator SymOperator::adjacency_shifted(const Graph& g, double shift) {
    SymOperator op;
    op.graph = &g;
    op.kind = Kind::AdjacencyPlusShift;
    op.shift = shift;
    return op;
}

SymOperator SymOperator::shifted_minus_adjacency(const Graph& g, double shift) {
    SymOperator op;
    op.graph = &g;
    op.kind = Kind::ShiftMinusAdjacency;
    op.shift = shift;
    return op;
}

void SymOperator::apply(const std::vector<double>& x, std::vector<double>& y) const {
    const Graph& g = *graph;
    const Vertex n = g.n();
    y.assign(n, 0.0);
    switch (kind) {
        case Kind::TwoMinusNormalizedLaplacian:
            for (Vertex v = 0; v < n; ++v) {
                double acc = 0.0;
                for (Vertex w : g.neighbors(v)) acc += inv_sqrt_deg[w] * x[w];
                y[v] = x[v] + inv_sqrt_deg[v] * acc;
            }
            break;
        case Kind::AdjacencyPlusShift:
            for (Vertex v = 0; v < n; ++v) {
                double acc = 0.0;
                for (Vertex w : g.neighbors(v)) acc += x[w];
                y[v] = shift * x[v] + acc;
            }
            break;
        case Kind::ShiftMinusAdjacency:
            for (Vertex v = 0; v < n; ++v) {
                double acc = 0.0;
                for (Vertex w : g.neighbors(v)) acc += x[w];
                y[v] = shift * x[v] - acc;
            }
            break;
    }
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(std::vector<double>& y, double c, const std::vector<double>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

void scale(std::vector<double>& a, double c) {
    for (double& x : a) x *= c;
}

void project_out(std::vector<double>& w, const std::vector<std::vector<double>>& basis,
                 std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) axpy(w, -dot(w, basis[i]), basis[i]);
}

/// Number of eigenvalues of the tridiagonal (a, b) strictly below x.
int sturm_count(const std::vector<double>& a, const std::vector<double>& b, double x) {
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double off = (i > 0) ? b[i] * b[i] : 0.0;
        d = a[i] - x - off / d;
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

double top_tridiag_eigenvalue(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t k = a.size();
    double lo = a[0], hi = a[0];
    for (std::size_t i = 0; i < k; ++i) {
        double r = (i > 0 ? std::abs(b[i]) : 0.0) + (i + 1 < k ? std::abs(b[i + 1]) : 0.0);
        lo = std::min(lo, a[i] - r);
        hi = std::max(hi, a[i] + r);
    }
    double span = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    for (int it = 0; it < 100 && hi - lo > 1e-15 * span; ++it) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count(a, b, mid) >= static_cast<int>(k))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

/// Solve (T - theta I) x = rhs in place; tridiagonal LU with partial
/// pivoting (dgtsv-style).
void solve_shifted_tridiag(const std::vector<double>& a, const std::vector<double>& b,
                           double theta, std::vector<double>& x) {
    const std::size_t n = a.size();
    std::vector<double> dl(n > 1 ? n - 1 : 0), d(n), du(n > 1 ? n - 1 : 0),
        du2(n > 2 ? n - 2 : 0, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i] - theta;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dl[i] = b[i + 1];
        du[i] = b[i + 1];
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0.0) d[i] = 1e-300;
            double fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            x[i + 1] -= fact * x[i];
        } else {
            double fact = d[i] / dl[i];
            d[i] = dl[i];
            double tmp = d[i + 1];
            d[i + 1] = du[i] - fact * tmp;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            du[i] = tmp;
            std::swap(x[i], x[i + 1]);
            x[i + 1] -= fact * x[i];
        }
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
    x[n - 1] /= d[n - 1];
    if (n >= 2) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (std::size_t ii = n; ii >= 3; --ii) {
        std::size_t i = ii - 3;
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
}

std::vector<double> top_tridiag_eigenvector(const std::vector<double>& a,
                                            const std::vector<double>& b, double theta) {
    const std::size_t k = a.size();
    std::vector<double> y(k, 1.0 / std::sqrt(static_cast<double>(k)));
    double shift = theta * (1.0 + 1e-13) + 1e-14;
    for (int it = 0; it < 3; ++it) {
        solve_shifted_tridiag(a, b, shift, y);
        double nn = norm(y);
        if (nn == 0.0 || !std::isfinite(nn)) {
            y.assign(k, 0.0);
            y[k - 1] = 1.0;
            continue;
        }
        scale(y, 1.0 / nn);
    }
    return y;
}

}  // namespace

ExtremeEigenResult top_eigenpair(const SymOperator& op,
                                 const std::vector<std::vector<double>>& deflate,
                                 const std::vector<double>* warm_start,
                                 double tol, std::uint64_t budget,
                                 std::uint32_t max_lanczos_dim) {
    const Vertex n = op.n();
    const std::uint32_t complement_dim =
        n > deflate.size() ? static_cast<std::uint32_t>(n - deflate.size()) : 0;
    ExtremeEigenResult out;
    if (complement_dim == 0) return out;
    const std::uint32_t dim = std::min(max_lanczos_dim, complement_dim);

    auto pseudo_random = [&](std::uint64_t stream) {
        RngStream rng(0x6A09E667F3BCC908ull ^ n, stream);
        std::vector<double> v(n);
        for (Vertex i = 0; i < n; ++i) v[i] = rng.next_unit() - 0.5;
        return v;
    };

    std::vector<double> v0;
    if (warm_start && warm_start->size() == n) v0 = *warm_start;
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (v0.empty()) v0 = pseudo_random(attempt);
        project_out(v0, deflate, deflate.size());
        double nn = norm(v0);
        if (nn > 1e-10) {
            scale(v0, 1.0 / nn);
            break;
        }
        v0.clear();
        if (attempt > 8)
            throw std::runtime_error("eigensolver: cannot find a start vector "
                                     "orthogonal to the deflated space");
    }

    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta, w, tmp;
    ExtremeEigenResult best;
    best.residual = std::numeric_limits<double>::infinity();

    while (out.matvecs < budget) {
        basis.clear();
        basis.push_back(v0);
        alpha.clear();
        beta.assign(1, 0.0);
        std::uint32_t k = 0;
        for (std::uint32_t j = 0; j < dim && out.matvecs < budget; ++j) {
            op.apply(basis[j], w);
            ++out.matvecs;
            if (j > 0) axpy(w, -beta[j], basis[j - 1]);
            double a = dot(w, basis[j]);
            alpha.push_back(a);
            axpy(w, -a, basis[j]);
            // Two reorthogonalization passes keep the basis orthogonal to
            // working precision even for clustered spectra.
            for (int pass = 0; pass < 2; ++pass) {
                project_out(w, deflate, deflate.size());
                project_out(w, basis, basis.size());
            }
            k = j + 1;
            if (j + 1 == dim) break;
            double nb = norm(w);
            if (nb < 1e-12 * std::max(1.0, std::abs(a))) break;  // invariant subspace
            beta.push_back(nb);
            tmp = w;
            scale(tmp, 1.0 / nb);
            basis.push_back(tmp);
        }
        if (k == 0) break;

        std::vector<double> a_sub(alpha.begin(), alpha.begin() + k);
        std::vector<double> b_sub(beta.begin(), beta.begin() + k);
        double theta = top_tridiag_eigenvalue(a_sub, b_sub);
        std::vector<double> y = top_tridiag_eigenvector(a_sub, b_sub, theta);

        std::vector<double> x(n, 0.0);
        for (std::uint32_t j = 0; j < k; ++j) axpy(x, y[j], basis[j]);
        project_out(x, deflate, deflate.size());
        double nx = norm(x);
        if (nx < 1e-12) {
            v0.clear();
            v0 = pseudo_random(out.matvecs + 17);
            project_out(v0, deflate, deflate.size());
            double nn = norm(v0);
            if (nn < 1e-12) break;
            scale(v0, 1.0 / nn);
            continue;
        }
        scale(x, 1.0 / nx);

        op.apply(x, w);
        ++out.matvecs;
        double rayleigh = dot(x, w);
        axpy(w, -rayleigh, x);
        double res = norm(w);
        if (res < best.residual) {
            best.theta = rayleigh;
            best.vec = x;
            best.residual = res;
        }
        if (res <= tol) {
            best.converged = true;
            break;
        }
        v0 = x;
    }
    best.matvecs = out.matvecs;
    out = best;
    return out;
}

}  // namespace eigen_iter

EigenResult lambda_normalized(const Graph& g, double tol, std::uint64_t budget,
                              const std::vector<double>* warm_start) {
    if (g.n() == 0) throw std::invalid_argument("lambda_normalized: empty graph");
    if (g.min_degree() == 0)
        throw std::invalid_argument("lambda_normalized: graph has an isolated vertex");
    if (tol <= 0) throw std::invalid_argument("lambda_normalized: tol must be positive");
    EigenResult r;
    if (!is_connected(g)) {
        r.disconnected = true;
        r.converged = true;
        r.value = 0.0;
        return r;
    }
    std::vector<double> kernel(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        kernel[v] = std::sqrt(static_cast<double>(g.degree(v)));
    double kn = std::sqrt(static_cast<double>(2 * g.m()));
    for (double& x : kernel) x /= kn;

    auto op = eigen_iter::SymOperator::normalized(g);
    auto res = eigen_iter::top_eigenpair(op, {kernel}, warm_start, tol, budget);
    if (!res.converged)
        throw std::runtime_error("lambda_normalized: no convergence within budget (residual " +
                                 std::to_string(res.residual) + ")");
    r.value = 2.0 - res.theta;  // residual is identical under the shift
    r.converged = true;
    r.residual = res.residual;
    r.matvecs = res.matvecs;
    r.vector = std::move(res.vec);
    return r;
}

AdjacencySpectrum lambda2_adjacency(const Graph& g, double tol, std::uint64_t budget) {
    if (g.n() < 2) throw std::invalid_argument("lambda2_adjacency: need n >= 2");
    if (!is_connected(g))
        throw std::invalid_argument("lambda2_adjacency: graph must be connected");
    if (tol <= 0) throw std::invalid_argument("lambda2_adjacency: tol must be positive");
    const double shift = static_cast<double>(g.max_degree());
    AdjacencySpectrum out;

    std::vector<double> top_vec;
    if (g.is_regular()) {
        top_vec.assign(g.n(), 1.0 / std::sqrt(static_cast<double>(g.n())));
    } else {
        auto op1 = eigen_iter::SymOperator::adjacency_shifted(g, shift);
        auto r1 = eigen_iter::top_eigenpair(op1, {}, nullptr, tol, budget);
        if (!r1.converged)
            throw std::runtime_error("lambda2_adjacency: top eigenvector did not converge");
        out.matvecs += r1.matvecs;
        out.residual = std::max(out.residual, r1.residual);
        top_vec = std::move(r1.vec);
    }

    auto op2 = eigen_iter::SymOperator::adjacency_shifted(g, shift);
    auto r2 = eigen_iter::top_eigenpair(op2, {top_vec}, nullptr, tol,
                                        budget > out.matvecs ? budget - out.matvecs : 1);
    if (!r2.converged)
        throw std::runtime_error("lambda2_adjacency: no convergence within budget");
    out.lambda2 = r2.theta - shift;
    out.matvecs += r2.matvecs;
    out.residual = std::max(out.residual, r2.residual);

    auto op3 = eigen_iter::SymOperator::shifted_minus_adjacency(g, shift);
    auto r3 = eigen_iter::top_eigenpair(op3, {}, nullptr, tol,
                                        budget > out.matvecs ? budget - out.matvecs : 1);
    if (!r3.converged)
        throw std::runtime_error("lambda2_adjacency: smallest eigenvalue did not converge");
    out.lambda_min = shift - r3.theta;
    out.matvecs += r3.matvecs;
    out.residual = std::max(out.residual, r3.residual);
    out.lambda_abs2 = std::max(std::abs(out.lambda2), std::abs(out.lambda_min));
    return out;
}

SweepCut sweep_cut_from_vector(const Graph& g, const std::vector<double>& x,
                               double lambda_estimate) {
    const Vertex n = g.n();
    if (n < 2 || g.m() == 0)
        throw std::invalid_argument("sweep_cut: need a graph with at least one edge");
    const double total_vol = static_cast<double>(2 * g.m());

    // Move to vertex space and project out the degree-weighted constant.
    std::vector<double> y(n);
    for (Vertex v = 0; v < n; ++v)
        y[v] = x[v] / std::sqrt(static_cast<double>(g.degree(v)));
    double mean = 0.0;
    for (Vertex v = 0; v < n; ++v) mean += g.degree(v) * y[v];
    mean /= total_vol;
    for (Vertex v = 0; v < n; ++v) y[v] -= mean;

    double num = 0.0, den = 0.0;
    for (Vertex v = 0; v < n; ++v) {
        den += g.degree(v) * y[v] * y[v];
        for (Vertex w : g.neighbors(v))
            if (w > v) num += (y[v] - y[w]) * (y[v] - y[w]);
    }
    double rayleigh = den > 0 ? num / den : 2.0;

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (y[a] != y[b]) return y[a] < y[b];
        return a < b;
    });

    std::vector<char> in_prefix(n, 0);
    std::uint64_t cut = 0, vol = 0;
    const std::uint64_t m = g.m();
    bool has_best = false;
    double best_ratio = 0.0;
    Vertex best_len = 0;
    std::uint64_t best_cut = 0, best_vol = 0;
    for (Vertex i = 0; i + 1 < n; ++i) {
        Vertex v = order[i];
        std::uint32_t inside = 0;
        for (Vertex w : g.neighbors(v)) inside += in_prefix[w];
        cut += g.degree(v) - 2ull * inside;
        vol += g.degree(v);
        in_prefix[v] = 1;
        std::uint64_t small = std::min<std::uint64_t>(vol, 2 * m - vol);
        if (small == 0) continue;
        double ratio = static_cast<double>(cut) / static_cast<double>(small);
        if (!has_best || ratio < best_ratio) {
            has_best = true;
            best_ratio = ratio;
            best_len = i + 1;
            best_cut = cut;
            best_vol = vol;
        }
    }
    if (!has_best) throw std::runtime_error("sweep_cut: no admissible prefix");

    SweepCut out;
    out.cut = best_cut;
    out.cut_ratio = best_ratio;
    out.rayleigh = rayleigh;
    out.bound = std::sqrt(2.0 * std::max(0.0, rayleigh));
    out.lambda = lambda_estimate;
    VertexSet s(n);
    for (Vertex i = 0; i < best_len; ++i) s.insert(order[i]);
    if (best_vol <= m) {
        out.set = std::move(s);
        out.vol = best_vol;
    } else {
        VertexSet comp = VertexSet::full(n);
        comp.subtract(s);
        out.set = std::move(comp);
        out.vol = 2 * m - best_vol;
    }
    return out;
}

SweepCut sweep_cut(const Graph& g, double tol) {
    if (!is_connected(g))
        throw std::invalid_argument("sweep_cut: graph must be connected");
    auto eig = lambda_normalized(g, tol);
    return sweep_cut_from_vector(g, eig.vector, eig.value);
}

GateReport gate_theorem_hypotheses(const Graph& g, double eps, Vertex exhaustive_limit,
                                   double tol) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("gate: eps must lie in (0, 1/2)");
    GateReport rep;
    rep.eps = eps;
    rep.d = g.max_degree();
    const Vertex n = g.n();
    const double d = static_cast<double>(g.max_degree());

    if (n >= 2 && n <= exhaustive_limit && g.m() >= 1) {
        rep.exact_evaluated = true;
        rep.h = cheeger_exact(g, n / 2, exhaustive_limit).value;
        Vertex k = static_cast<Vertex>(std::ceil(eps * n));
        k = std::clamp<Vertex>(k, 1, n / 2);
        rep.k = k;
        rep.h_k = cheeger_exact(g, k, exhaustive_limit).value;
        rep.exact_certified = rep.h >= eps * d && rep.h_k >= (0.5 + eps) * d;
    }
    if (g.is_regular() && n >= 2 && is_connected(g)) {
        rep.eigen_evaluated = true;
        auto spec = lambda2_adjacency(g, tol);
        rep.lambda2 = spec.lambda2;
        rep.lambda2_threshold = (0.5 - eps) * d;
        rep.eigen_certified = spec.lambda2 + spec.residual < rep.lambda2_threshold;
        if (rep.eigen_certified) {
            rep.implied_h_lower = d / 4.0;
            rep.implied_hk_lower = (0.5 + eps / 2.0) * d;
            rep.implied_k = std::max<Vertex>(1, static_cast<Vertex>(eps * n / 4.0));
        }
    }
    if (rep.exact_certified) {
        rep.route = GateReport::Route::Exact;
        rep.certified = true;
    } else if (rep.eigen_certified) {
        rep.route = GateReport::Route::Eigenvalue;
        rep.certified = true;
    } else {
        rep.route = GateReport::Route::Uncertified;
        rep.certified = false;
    }
    return rep;
}

const char* route_name(GateReport::Route r) {
    switch (r) {
        case GateReport::Route::Exact: return "exact";
        case GateReport::Route::Eigenvalue: return "eigenvalue";
        case GateReport::Route::Uncertified: return "uncertified";
    }
    return "?";
}

ExpansionReport analyze(const Graph& g, double eps, double tol, Vertex exhaustive_limit) {
    if (g.n() == 0) throw std::invalid_argument("analyze: empty graph");
    ExpansionReport rep;
    rep.n = g.n();
    rep.m = g.m();
    rep.max_degree = g.max_degree();
    rep.connected = is_connected(g);

    const bool small = g.n() >= 2 && g.n() <= exhaustive_limit;
    if (small) {
        rep.h = cheeger_exact(g, g.n() / 2, exhaustive_limit);
        rep.k = std::clamp<Vertex>(static_cast<Vertex>(std::ceil(eps * g.n())), 1, g.n() / 2);
        rep.h_k = cheeger_exact(g, rep.k, exhaustive_limit);
        if (g.m() > 0) {
            rep.h_prime = h_prime_exact(g, exhaustive_limit);
            rep.phi = conductance_exact(g, exhaustive_limit);
        }
    }
    if (!rep.connected) {
        rep.lambda_norm.disconnected = true;
        rep.lambda_norm.converged = true;
        rep.lambda_norm.value = 0.0;
    } else if (g.n() >= 2 && g.min_degree() >= 1) {
        rep.lambda_norm = lambda_normalized(g, tol);
        rep.adjacency = lambda2_adjacency(g, tol);
        if (!rep.h) {
            double lb = std::max(0.0, rep.lambda_norm.value - rep.lambda_norm.residual);
            rep.h_lower_bound = 0.5 * lb * g.min_degree();
        }
        if (g.m() > 0)
            rep.sweep = sweep_cut_from_vector(g, rep.lambda_norm.vector,
                                              rep.lambda_norm.value);
    }
    rep.gate = gate_theorem_hypotheses(g, eps, exhaustive_limit, tol);
    return rep;
}

}  // namespace kminor
