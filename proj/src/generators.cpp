#include "kminor/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kminor {

namespace {

bool adj_contains(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v) {
    for (Vertex w : adj[u])
        if (w == v) return true;
    return false;
}

}  // namespace

Graph random_regular(Vertex n, std::uint32_t d, RngStream& rng) {
    if (d < 3 || d >= n)
        throw std::invalid_argument("random_regular: need 3 <= d < n");
    if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");

    constexpr int kRestartBudget = 500;
    for (int attempt = 0; attempt < kRestartBudget; ++attempt) {
        std::vector<Vertex> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (Vertex v = 0; v < n; ++v)
            for (std::uint32_t k = 0; k < d; ++k) stubs.push_back(v);

        std::vector<std::vector<Vertex>> adj(n);
        for (auto& nb : adj) nb.reserve(d);
        bool stuck = false;
        while (!stubs.empty()) {
            std::uint64_t tries = 0;
            const std::uint64_t try_cap = 100 + 20 * stubs.size();
            for (;;) {
                std::size_t i = rng.next_below(stubs.size());
                std::size_t j = rng.next_below(stubs.size() - 1);
                if (j >= i) ++j;
                Vertex u = stubs[i], v = stubs[j];
                if (u != v && !adj_contains(adj, u, v)) {
                    if (i < j) std::swap(i, j);
                    stubs[i] = stubs.back();
                    stubs.pop_back();
                    stubs[j] = stubs.back();
                    stubs.pop_back();
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                    break;
                }
                if (++tries > try_cap) {
                    stuck = true;
                    break;
                }
            }
            if (stuck) break;
        }
        if (!stuck) return build_graph_unchecked(n, std::move(adj));
    }
    throw std::runtime_error(
        "random_regular: restart budget exhausted (d too large relative to n; "
        "dense-regime generation is out of scope)");
}

Graph gnp(Vertex n, double p, RngStream& rng) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("gnp: p must be in [0, 1]");
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (n >= 2 && p > 0.0) {
        if (p >= 1.0) return complete_graph(n);
        const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const double logq = std::log1p(-p);
        // Geometric jumps over the row-major upper-triangle pair index.
        std::uint64_t k = 0;
        for (;;) {
            double u = rng.next_unit();
            double skip = std::floor(std::log1p(-u) / logq);
            if (skip >= static_cast<double>(total - k)) break;
            k += static_cast<std::uint64_t>(skip);
            if (k >= total) break;
            // Decode pair index k -> (a, b), a < b.
            Vertex a = 0;
            std::uint64_t row_start = 0;
            {
                Vertex lo = 0, hi = n - 1;
                while (lo < hi) {
                    Vertex mid = lo + (hi - lo + 1) / 2;
                    std::uint64_t start =
                        static_cast<std::uint64_t>(mid) * n -
                        static_cast<std::uint64_t>(mid) * (mid + 1) / 2;
                    if (start <= k) {
                        lo = mid;
                    } else {
                        hi = mid - 1;
                    }
                }
                a = lo;
                row_start = static_cast<std::uint64_t>(a) * n -
                            static_cast<std::uint64_t>(a) * (a + 1) / 2;
            }
            Vertex b = static_cast<Vertex>(a + 1 + (k - row_start));
            edges.emplace_back(a, b);
            ++k;
            if (k >= total) break;
        }
    }
    return build_graph(n, edges);
}

Graph cycle_graph(Vertex n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return build_graph(n, edges);
}

Graph complete_graph(Vertex n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: need a, b >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return build_graph(a + b, edges);
}

Graph petersen() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return build_graph(10, edges);
}

Graph two_triangles() {
    return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

std::optional<GenSpec::Family> parse_family(const std::string& name) {
    using F = GenSpec::Family;
    if (name == "regular") return F::Regular;
    if (name == "gnp") return F::Gnp;
    if (name == "cycle") return F::Cycle;
    if (name == "complete") return F::Complete;
    if (name == "complete-bipartite") return F::CompleteBipartite;
    if (name == "petersen") return F::Petersen;
    if (name == "two-triangles") return F::TwoTriangles;
    return std::nullopt;
}

std::string family_name(GenSpec::Family f) {
    using F = GenSpec::Family;
    switch (f) {
        case F::Regular: return "regular";
        case F::Gnp: return "gnp";
        case F::Cycle: return "cycle";
        case F::Complete: return "complete";
        case F::CompleteBipartite: return "complete-bipartite";
        case F::Petersen: return "petersen";
        case F::TwoTriangles: return "two-triangles";
    }
    return "?";
}

Graph generate(const GenSpec& spec) {
    using F = GenSpec::Family;
    switch (spec.family) {
        case F::Regular: {
            RngStream rng(spec.seed, 0);
            return random_regular(spec.n, spec.d, rng);
        }
        case F::Gnp: {
            RngStream rng(spec.seed, 0);
            return gnp(spec.n, spec.p, rng);
        }
        case F::Cycle: return cycle_graph(spec.n);
        case F::Complete: return complete_graph(spec.n);
        case F::CompleteBipartite: return complete_bipartite(spec.a, spec.b);
        case F::Petersen: return petersen();
        case F::TwoTriangles: return two_triangles();
    }
    throw std::invalid_argument("generate: unknown family");
}

JumblednessReport jumbledness_check(const Graph& g, double p, double beta,
                                    Vertex exhaustive_limit,
                                    std::uint64_t sample_count,
                                    std::uint64_t sample_seed) {
    JumblednessReport report;
    const Vertex n = g.n();

    auto violation = [&](std::uint64_t edges_in, std::uint64_t k) {
        double expected = p * (static_cast<double>(k) * (k - 1) / 2.0);
        return std::abs(static_cast<double>(edges_in) - expected) -
               beta * static_cast<double>(k);
    };

    if (n <= exhaustive_limit && n <= 63) {
        report.exact = true;
        std::vector<std::uint64_t> row(n, 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v)) row[v] |= 1ull << w;
        std::uint64_t cur = 0;
        std::uint64_t edges_in = 0;
        std::uint64_t k = 0;
        double worst = 0.0;
        std::uint64_t worst_mask = 0;
        bool has_worst = false;
        const std::uint64_t total = 1ull << n;
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t gray = code ^ (code >> 1);
            unsigned v = static_cast<unsigned>(__builtin_ctzll(code));
            std::uint64_t bit = 1ull << v;
            if (gray & bit) {
                edges_in += static_cast<std::uint64_t>(__builtin_popcountll(row[v] & cur));
                cur |= bit;
                ++k;
            } else {
                cur &= ~bit;
                edges_in -= static_cast<std::uint64_t>(__builtin_popcountll(row[v] & cur));
                --k;
            }
            double viol = violation(edges_in, k);
            if (!has_worst || viol > worst) {
                worst = viol;
                worst_mask = cur;
                has_worst = true;
            }
        }
        report.subsets_checked = total - 1;
        report.margin = worst;
        report.violated = worst > 0.0;
        if (report.violated)
            for (Vertex v = 0; v < n; ++v)
                if (worst_mask & (1ull << v)) report.worst.push_back(v);
        return report;
    }

    // Sampling mode: random subsets at geometrically spread sizes. Only ever
    // reports a violation it found; absence of one certifies nothing.
    report.exact = false;
    std::vector<Vertex> sizes;
    for (Vertex s = 2; s < n; s *= 2) sizes.push_back(s);
    sizes.push_back(n);
    RngStream rng(sample_seed, 0xBADC0DE);
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    const std::uint64_t per_size = std::max<std::uint64_t>(1, sample_count / sizes.size());
    double worst = 0.0;
    std::vector<Vertex> worst_set;
    for (Vertex s : sizes) {
        for (std::uint64_t it = 0; it < per_size; ++it) {
            for (Vertex i = 0; i < s; ++i) {
                std::uint64_t j = i + rng.next_below(n - i);
                std::swap(pool[i], pool[j]);
            }
            VertexSet x(n);
            for (Vertex i = 0; i < s; ++i) x.insert(pool[i]);
            std::uint64_t edges_in = 0;
            x.for_each([&](Vertex v) {
                for (Vertex w : g.neighbors(v))
                    if (w > v && x.contains(w)) ++edges_in;
            });
            ++report.subsets_checked;
            double viol = violation(edges_in, s);
            if (viol > worst) {
                worst = viol;
                worst_set.assign(pool.begin(), pool.begin() + s);
                std::sort(worst_set.begin(), worst_set.end());
            }
        }
    }
    report.margin = worst;
    report.violated = worst > 0.0;
    report.worst = std::move(worst_set);
    return report;
}

}  // namespace kminor
