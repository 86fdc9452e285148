#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kminor {

using Vertex = std::uint32_t;

/// Set of vertex ids over a fixed universe [0, n). Bitset-backed with a
/// cached size; iteration is always in ascending id order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(Vertex universe)
        : words_((universe + 63) / 64, 0), universe_(universe) {}

    static VertexSet full(Vertex universe);
    static VertexSet of(Vertex universe, const std::vector<Vertex>& ids);

    Vertex universe() const { return universe_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(Vertex v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(Vertex v) {
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = 1ull << (v & 63);
        if (!(w & bit)) { w |= bit; ++size_; }
    }
    void erase(Vertex v) {
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = 1ull << (v & 63);
        if (w & bit) { w &= ~bit; --size_; }
    }
    void clear();

    /// Lowest id in the set; set must be nonempty.
    Vertex front() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(static_cast<Vertex>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& subtract(const VertexSet& o);
    bool intersects(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const;

private:
    std::vector<std::uint64_t> words_;
    Vertex universe_ = 0;
    std::size_t size_ = 0;
};

/// Immutable simple undirected graph in CSR form. Neighbor lists are sorted
/// by id, so every traversal that scans them in order is reproducible.
class Graph {
public:
    Graph() = default;

    Vertex n() const { return n_; }
    std::uint64_t m() const { return m_; }
    std::uint32_t degree(Vertex v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v],
                adjacency_.data() + offsets_[v + 1]};
    }
    std::uint32_t max_degree() const { return max_degree_; }
    std::uint32_t min_degree() const { return min_degree_; }
    bool is_regular() const { return n_ > 0 && max_degree_ == min_degree_; }
    bool has_edge(Vertex u, Vertex v) const;

    /// Cumulative degree table: offsets()[v] = sum of degrees below v.
    /// offsets()[n] == 2m.
    std::span<const std::uint64_t> offsets() const { return offsets_; }

    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    friend Graph build_graph(Vertex, const std::vector<std::pair<Vertex, Vertex>>&);
    friend Graph build_graph_unchecked(Vertex, std::vector<std::vector<Vertex>>&&);

    Vertex n_ = 0;
    std::uint64_t m_ = 0;
    std::uint32_t max_degree_ = 0;
    std::uint32_t min_degree_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<Vertex> adjacency_;
};

/// Builds a graph from an unordered edge list. Rejects out-of-range
/// endpoints, self-loops and duplicate edges, naming the offending pair.
Graph build_graph(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges);

/// Trusted constructor for generators that already guarantee simplicity.
/// Adjacency lists are sorted here; invariants are checked with assertions.
Graph build_graph_unchecked(Vertex n, std::vector<std::vector<Vertex>>&& adj);

/// Simple path: consecutive vertices adjacent, no repeats.
struct Path {
    std::vector<Vertex> vertices;
    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// N(S): union of neighborhoods minus S itself.
VertexSet external_neighborhood(const Graph& g, const VertexSet& s);

/// Number of edges with exactly one endpoint in S.
std::uint64_t edge_cut(const Graph& g, const VertexSet& s);

/// Number of edges with one endpoint in A and one in B. A and B must be
/// disjoint.
std::uint64_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Sum of degrees over S.
std::uint64_t volume(const Graph& g, const VertexSet& s);

/// B(U, i): all vertices within distance i of U. BFS with an explicit
/// frontier; no distance matrix is materialized.
VertexSet ball(const Graph& g, const VertexSet& u, std::uint32_t radius);

/// True iff G[S] is connected. Singletons are connected; the empty set is
/// connected by convention.
bool is_connected_set(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;  // local id -> original id
};

/// G[S] with a dense relabeling. Local ids follow ascending original ids.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Shortest path from A to B (multi-source BFS, lowest-id tie-breaking).
/// A single-vertex path when the sets intersect; nullopt when no path exists.
std::optional<Path> shortest_path_between_sets(const Graph& g,
                                               const VertexSet& a,
                                               const VertexSet& b);

/// Component id per vertex (ids assigned in order of lowest contained
/// vertex) and the component count.
struct Components {
    std::vector<Vertex> comp;
    Vertex count = 0;
};
Components connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace kminor
