#ifndef PEEL_GRAPH_HPP
#define PEEL_GRAPH_HPP

#include <utility>
#include <vector>

#include "peel/bitset.hpp"
#include "peel/errors.hpp"

namespace peel {

// Bitset-per-vertex representation caps the supported order.
inline constexpr int kMaxVertices = 4096;

// Simple undirected graph on vertices 0..n-1.  Adjacency is symmetric and
// irreflexive; both are enforced by add_edge and checkable afterwards.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;

    Graph() = default;

    explicit Graph(int vertices) : n(vertices)
    {
        if (vertices < 0 || vertices > kMaxVertices)
            throw PreconditionError("graph order must be in 0.." + std::to_string(kMaxVertices));
        adj.assign(static_cast<std::size_t>(vertices), Bitset(vertices));
    }

    void add_edge(int u, int v)
    {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("edge endpoint out of range");
        if (u == v)
            throw PreconditionError("loop edges are not allowed");
        adj[static_cast<std::size_t>(u)].set(v);
        adj[static_cast<std::size_t>(v)].set(u);
    }

    bool has_edge(int u, int v) const { return adj[static_cast<std::size_t>(u)].test(v); }

    int degree(int v) const { return adj[static_cast<std::size_t>(v)].count(); }

    // Delta(G); 0 for the vertexless graph by convention.
    int max_degree() const
    {
        int d = 0;
        for (int v = 0; v < n; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    std::vector<int> degree_sequence() const
    {
        std::vector<int> seq(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            seq[static_cast<std::size_t>(v)] = degree(v);
        return seq;
    }

    long edge_count() const
    {
        long total = 0;
        for (int v = 0; v < n; ++v)
            total += degree(v);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = adj[static_cast<std::size_t>(u)].next(u); v >= 0;
                 v = adj[static_cast<std::size_t>(u)].next(v))
                out.emplace_back(u, v);
        return out;
    }

    Bitset full_set() const
    {
        Bitset b(n);
        b.fill();
        return b;
    }

    Graph complement() const
    {
        Graph c(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!has_edge(u, v))
                    c.add_edge(u, v);
        return c;
    }

    // Induced subgraph on V minus drop.  old_ids, when given, receives the
    // original vertex id of each new vertex in ascending order.
    Graph remove_vertices(const Bitset& drop, std::vector<int>* old_ids = nullptr) const
    {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (!drop.test(v))
                keep.push_back(v);
        return induced(keep, old_ids);
    }

    Graph induced(const std::vector<int>& keep, std::vector<int>* old_ids = nullptr) const
    {
        Graph sub(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (has_edge(keep[i], keep[j]))
                    sub.add_edge(static_cast<int>(i), static_cast<int>(j));
        if (old_ids)
            *old_ids = keep;
        return sub;
    }

    void check_invariants() const
    {
        for (int v = 0; v < n; ++v) {
            if (adj[static_cast<std::size_t>(v)].universe() != n)
                throw InternalError("adjacency bitset universe mismatch");
            if (adj[static_cast<std::size_t>(v)].test(v))
                throw InternalError("graph has a loop at " + std::to_string(v));
            for (int u = adj[static_cast<std::size_t>(v)].first(); u >= 0;
                 u = adj[static_cast<std::size_t>(v)].next(u))
                if (!adj[static_cast<std::size_t>(u)].test(v))
                    throw InternalError("asymmetric adjacency " + std::to_string(v) + "," +
                                        std::to_string(u));
        }
    }

    bool operator==(const Graph& o) const = default;
};

// Multigraph: parallel edges allowed, loops are not.  Edges keep insertion
// order so the line graph's vertex numbering is deterministic.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Multigraph() = default;

    explicit Multigraph(int vertices) : n(vertices)
    {
        if (vertices < 0 || vertices > kMaxVertices)
            throw PreconditionError("multigraph order must be in 0.." + std::to_string(kMaxVertices));
    }

    void add_edge(int u, int v)
    {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("edge endpoint out of range");
        if (u == v)
            throw PreconditionError("loop edges are not allowed");
        edges.emplace_back(u, v);
    }

    // Degree counts parallel edges with multiplicity.
    int degree(int v) const
    {
        int d = 0;
        for (auto [a, b] : edges)
            d += (a == v) + (b == v);
        return d;
    }

    int max_degree() const
    {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (auto [a, b] : edges) {
            ++deg[static_cast<std::size_t>(a)];
            ++deg[static_cast<std::size_t>(b)];
        }
        int d = 0;
        for (int x : deg)
            d = std::max(d, x);
        return d;
    }
};

struct DegreeStats {
    int max_degree;
    std::vector<int> sequence;
};

inline DegreeStats degree_stats(const Graph& g)
{
    return {g.max_degree(), g.degree_sequence()};
}

// L(h): one vertex per edge of h, in edge order; vertices adjacent iff the
// underlying edges share an endpoint.  Parallel edges share both endpoints
// and are therefore adjacent.  Also returns the vertex -> edge mapping,
// which is just the identity into h.edges.
struct LineGraphResult {
    Graph graph;
    std::vector<std::pair<int, int>> edge_of_vertex;
};

inline LineGraphResult line_graph(const Multigraph& h)
{
    int m = static_cast<int>(h.edges.size());
    LineGraphResult out{Graph(m), h.edges};
    for (int i = 0; i < m; ++i) {
        auto [a, b] = h.edges[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
            auto [c, d] = h.edges[static_cast<std::size_t>(j)];
            if (a == c || a == d || b == c || b == d)
                out.graph.add_edge(i, j);
        }
    }
    return out;
}

} // namespace peel

#endif
