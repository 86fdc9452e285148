#include "kminor/walks.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace kminor {

Vertex lazy_step(const Graph& g, Vertex v, RngStream& rng) {
    const std::uint32_t deg = g.degree(v);
    if (deg == 0) throw std::invalid_argument("lazy_step: isolated vertex " + std::to_string(v));
    if (rng.next_bit()) return v;
    return g.neighbors(v)[rng.next_below(deg)];
}

Vertex sample_stationary(const Graph& g, RngStream& rng) {
    if (g.m() == 0) throw std::invalid_argument("sample_stationary: edgeless graph");
    std::uint64_t r = rng.next_below(2 * g.m());
    auto off = g.offsets();
    auto it = std::upper_bound(off.begin(), off.end(), r);
    return static_cast<Vertex>(it - off.begin() - 1);
}

WalkTrace run_walk(const Graph& g, std::uint64_t steps, RngStream& rng,
                   std::optional<Vertex> start) {
    WalkTrace trace;
    trace.visited = VertexSet(g.n());
    Vertex cur = start ? *start : sample_stationary(g, rng);
    if (cur >= g.n()) throw std::invalid_argument("run_walk: start vertex out of range");
    trace.vertices.reserve(steps + 1);
    trace.vertices.push_back(cur);
    trace.visited.insert(cur);
    for (std::uint64_t i = 0; i < steps; ++i) {
        cur = lazy_step(g, cur, rng);
        trace.vertices.push_back(cur);
        trace.visited.insert(cur);
    }
    return trace;
}

double miss_probability_bound(double h, double d, double u_size, double n,
                              double steps) {
    if (!(h > 0) || !(d > 0) || !(u_size > 0) || !(n > 0) || steps < 0)
        throw std::invalid_argument("miss_probability_bound: arguments must be positive");
    if (h > d) throw std::invalid_argument("miss_probability_bound: h cannot exceed d");
    double rate = (h * h * h) / (8.0 * d * d * d);
    return std::exp(-rate * u_size * steps / n);
}

namespace {

/// Minimal connected skeleton of `raw`: BFS tree inside G[raw] from `root`,
/// keeping only the branches that reach the given contact vertices.
VertexSet prune_to_skeleton(const Graph& g, const VertexSet& raw, Vertex root,
                            const std::vector<Vertex>& contacts) {
    constexpr Vertex kNone = ~Vertex{0};
    std::vector<Vertex> parent(g.n(), kNone);
    std::queue<Vertex> queue;
    parent[root] = root;
    queue.push(root);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v))
            if (raw.contains(w) && parent[w] == kNone) {
                parent[w] = v;
                queue.push(w);
            }
    }
    VertexSet out(g.n());
    out.insert(root);
    for (Vertex c : contacts) {
        Vertex cur = c;
        while (parent[cur] != cur) {
            out.insert(cur);
            cur = parent[cur];
        }
    }
    return out;
}

}  // namespace

CoveringResult covering_set(const Graph& g, const std::vector<VertexSet>& targets,
                            std::uint64_t s, double eps, double K, int retries,
                            RngStream& rng, const CoveringOptions& opts) {
    if (g.n() == 0 || g.m() == 0)
        throw std::invalid_argument("covering_set: graph has no edges");
    if (!is_connected(g))
        throw std::invalid_argument("covering_set: graph must be connected");
    if (s < 1) throw std::invalid_argument("covering_set: s must be >= 1");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("covering_set: eps must lie in (0, 1)");
    if (retries < 1) throw std::invalid_argument("covering_set: retries must be >= 1");
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (targets[i].size() < s)
            throw std::invalid_argument("covering_set: target " + std::to_string(i) +
                                        " smaller than s");

    const double n = static_cast<double>(g.n());
    const std::size_t q = targets.size();
    const double q_eff =
        std::max(static_cast<double>(q), std::ceil(2.0 * n / static_cast<double>(s)));
    const double log_term = std::log(q_eff * static_cast<double>(s) / n);

    CoveringResult res;
    res.ell = opts.ell_override
                  ? *opts.ell_override
                  : static_cast<std::uint64_t>(
                        std::ceil((16.0 / (eps * eps * eps)) * (n / s) * log_term));
    res.size_bound = opts.size_cap_override ? *opts.size_cap_override
                                            : K * (n / s) * log_term;

    const std::size_t need_hits =
        q == 0 ? 0
               : (opts.hit_fraction >= 1.0
                      ? q
                      : std::max<std::size_t>(
                            1, static_cast<std::size_t>(
                                   std::ceil(opts.hit_fraction * static_cast<double>(q)))));

    constexpr Vertex kNone = ~Vertex{0};
    std::vector<Vertex> parent(g.n());
    std::vector<std::uint32_t> dist(g.n());
    std::size_t best_size = ~std::size_t{0};

    for (int attempt = 0; attempt < retries; ++attempt) {
        RngStream walk_rng = rng.derive(static_cast<std::uint64_t>(attempt));
        WalkTrace walk = run_walk(g, res.ell, walk_rng);

        std::fill(parent.begin(), parent.end(), kNone);
        std::queue<Vertex> queue;
        walk.visited.for_each([&](Vertex v) {
            parent[v] = v;
            dist[v] = 0;
            queue.push(v);
        });
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(v))
                if (parent[w] == kNone) {
                    parent[w] = v;
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
        }

        // Contact vertex per target: nearest to the walk, lowest id on ties.
        struct Contact {
            std::uint32_t dist;
            std::uint32_t index;
            Vertex vertex;
        };
        std::vector<Contact> contacts;
        contacts.reserve(q);
        for (std::size_t i = 0; i < q; ++i) {
            Contact best{~0u, static_cast<std::uint32_t>(i), 0};
            targets[i].for_each([&](Vertex v) {
                if (dist[v] < best.dist) {
                    best.dist = dist[v];
                    best.vertex = v;
                }
            });
            contacts.push_back(best);
        }
        std::vector<std::uint32_t> chosen(q);
        for (std::size_t i = 0; i < q; ++i) chosen[i] = static_cast<std::uint32_t>(i);
        if (need_hits < q)
            std::stable_sort(chosen.begin(), chosen.end(), [&](std::uint32_t a, std::uint32_t b) {
                return contacts[a].dist < contacts[b].dist;
            });

        VertexSet t_set = walk.visited;
        std::vector<std::uint32_t> hit;
        std::vector<Vertex> contact_vertices;
        hit.reserve(need_hits);
        for (std::size_t idx = 0; idx < need_hits; ++idx) {
            const Contact& c = contacts[chosen[idx]];
            Vertex cur = c.vertex;
            while (parent[cur] != cur) {
                t_set.insert(cur);
                cur = parent[cur];
            }
            hit.push_back(c.index);
            contact_vertices.push_back(c.vertex);
        }
        std::sort(hit.begin(), hit.end());

        if (opts.prune) {
            Vertex root = contact_vertices.empty() ? walk.vertices.front()
                                                   : contact_vertices.front();
            t_set = prune_to_skeleton(g, t_set, root, contact_vertices);
            if (t_set.empty()) t_set.insert(root);
        }

        if (static_cast<double>(t_set.size()) <= res.size_bound) {
            res.success = true;
            res.t = std::move(t_set);
            res.hit = std::move(hit);
            res.retries_used = attempt + 1;
            res.best_size = res.t.size();
            if (!is_connected_set(g, res.t))
                throw std::logic_error("covering_set: produced a disconnected set");
            for (std::uint32_t i : res.hit)
                if (!res.t.intersects(targets[i]))
                    throw std::logic_error("covering_set: produced set misses target " +
                                           std::to_string(i));
            return res;
        }
        if (t_set.size() < best_size) {
            best_size = t_set.size();
            res.t = std::move(t_set);
            res.hit = std::move(hit);
        }
    }
    res.success = false;
    res.retries_used = retries;
    res.best_size = best_size;
    return res;
}

}  // namespace kminor
