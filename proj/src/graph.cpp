#include "kminor/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace kminor {

VertexSet VertexSet::full(Vertex universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::of(Vertex universe, const std::vector<Vertex>& ids) {
    VertexSet s(universe);
    for (Vertex v : ids) {
        if (v >= universe)
            throw std::invalid_argument("vertex id " + std::to_string(v) +
                                        " outside universe " + std::to_string(universe));
        s.insert(v);
    }
    return s;
}

void VertexSet::clear() {
    std::fill(words_.begin(), words_.end(), 0);
    size_ = 0;
}

Vertex VertexSet::front() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi])
            return static_cast<Vertex>(wi * 64 + __builtin_ctzll(words_[wi]));
    throw std::logic_error("front() on empty VertexSet");
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    size_ = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= o.words_[i];
        size_ += static_cast<std::size_t>(__builtin_popcountll(words_[i]));
    }
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    size_ = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= o.words_[i];
        size_ += static_cast<std::size_t>(__builtin_popcountll(words_[i]));
    }
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
    assert(universe_ == o.universe_);
    size_ = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~o.words_[i];
        size_ += static_cast<std::size_t>(__builtin_popcountll(words_[i]));
    }
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool VertexSet::operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
}

namespace {

std::string pair_str(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

void check_subset(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n())
        throw std::invalid_argument("vertex set universe " + std::to_string(s.universe()) +
                                    " does not match graph order " + std::to_string(g.n()));
}

}  // namespace

Graph build_graph(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + pair_str(u, v));
        if (u == v)
            throw std::invalid_argument("self-loop: " + pair_str(u, v));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& nb = adj[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end())
            throw std::invalid_argument("duplicate edge: " + pair_str(v, *dup));
    }
    return build_graph_unchecked(n, std::move(adj));
}

Graph build_graph_unchecked(Vertex n, std::vector<std::vector<Vertex>>&& adj) {
    assert(adj.size() == n);
    Graph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    std::uint64_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
        std::sort(adj[v].begin(), adj[v].end());
        g.offsets_[v] = total;
        total += adj[v].size();
    }
    g.offsets_[n] = total;
    g.adjacency_.reserve(total);
    for (Vertex v = 0; v < n; ++v)
        g.adjacency_.insert(g.adjacency_.end(), adj[v].begin(), adj[v].end());
    g.m_ = total / 2;
    assert(total % 2 == 0);
    g.max_degree_ = 0;
    g.min_degree_ = n > 0 ? ~0u : 0u;
    for (Vertex v = 0; v < n; ++v) {
        std::uint32_t d = g.degree(v);
        g.max_degree_ = std::max(g.max_degree_, d);
        g.min_degree_ = std::min(g.min_degree_, d);
    }
    if (n == 0) g.min_degree_ = 0;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet external_neighborhood(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    VertexSet out(g.n());
    s.for_each([&](Vertex v) {
        for (Vertex w : g.neighbors(v))
            if (!s.contains(w)) out.insert(w);
    });
    return out;
}

std::uint64_t edge_cut(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    std::uint64_t cut = 0;
    s.for_each([&](Vertex v) {
        for (Vertex w : g.neighbors(v))
            if (!s.contains(w)) ++cut;
    });
    return cut;
}

std::uint64_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_subset(g, a);
    check_subset(g, b);
    if (a.intersects(b))
        throw std::invalid_argument("edges_between: sets overlap");
    const VertexSet& small = a.size() <= b.size() ? a : b;
    const VertexSet& other = a.size() <= b.size() ? b : a;
    std::uint64_t count = 0;
    small.for_each([&](Vertex v) {
        for (Vertex w : g.neighbors(v))
            if (other.contains(w)) ++count;
    });
    return count;
}

std::uint64_t volume(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    std::uint64_t vol = 0;
    s.for_each([&](Vertex v) { vol += g.degree(v); });
    return vol;
}

VertexSet ball(const Graph& g, const VertexSet& u, std::uint32_t radius) {
    check_subset(g, u);
    if (u.empty()) throw std::invalid_argument("ball: empty center set");
    VertexSet reached = u;
    std::vector<Vertex> frontier = u.to_vector();
    for (std::uint32_t i = 0; i < radius && !frontier.empty(); ++i) {
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (Vertex w : g.neighbors(v))
                if (!reached.contains(w)) {
                    reached.insert(w);
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
    return reached;
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    if (s.size() <= 1) return true;
    VertexSet seen(g.n());
    std::vector<Vertex> stack{s.front()};
    seen.insert(s.front());
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (s.contains(w) && !seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.size() == s.size();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    InducedSubgraph out;
    out.to_original = s.to_vector();
    std::vector<Vertex> local(g.n(), 0);
    for (Vertex i = 0; i < out.to_original.size(); ++i)
        local[out.to_original[i]] = i;
    std::vector<std::vector<Vertex>> adj(out.to_original.size());
    for (Vertex i = 0; i < out.to_original.size(); ++i)
        for (Vertex w : g.neighbors(out.to_original[i]))
            if (s.contains(w)) adj[i].push_back(local[w]);
    out.graph = build_graph_unchecked(static_cast<Vertex>(out.to_original.size()),
                                      std::move(adj));
    return out;
}

std::optional<Path> shortest_path_between_sets(const Graph& g,
                                               const VertexSet& a,
                                               const VertexSet& b) {
    check_subset(g, a);
    check_subset(g, b);
    if (a.empty() || b.empty())
        throw std::invalid_argument("shortest_path_between_sets: empty endpoint set");
    if (a.intersects(b)) {
        VertexSet common = a;
        common &= b;
        return Path{{common.front()}};
    }
    constexpr Vertex kNone = ~Vertex{0};
    std::vector<Vertex> parent(g.n(), kNone);
    std::queue<Vertex> queue;
    a.for_each([&](Vertex v) {
        parent[v] = v;
        queue.push(v);
    });
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v)) {
            if (parent[w] != kNone) continue;
            parent[w] = v;
            if (b.contains(w)) {
                std::vector<Vertex> rev{w};
                Vertex cur = v;
                while (parent[cur] != cur) {
                    rev.push_back(cur);
                    cur = parent[cur];
                }
                rev.push_back(cur);
                std::reverse(rev.begin(), rev.end());
                return Path{std::move(rev)};
            }
            queue.push(w);
        }
    }
    return std::nullopt;
}

Components connected_components(const Graph& g) {
    Components out;
    constexpr Vertex kNone = ~Vertex{0};
    out.comp.assign(g.n(), kNone);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (out.comp[v] != kNone) continue;
        out.comp[v] = out.count;
        stack.push_back(v);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (out.comp[w] == kNone) {
                    out.comp[w] = out.count;
                    stack.push_back(w);
                }
        }
        ++out.count;
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return connected_components(g).count == 1;
}

}  // namespace kminor
