#ifndef PEEL_TEST_FIXTURES_HPP
#define PEEL_TEST_FIXTURES_HPP

#include "peel/graph.hpp"

namespace fixtures {

inline peel::Graph complete(int n)
{
    peel::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline peel::Graph cycle(int n)
{
    peel::Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

inline peel::Graph path(int n)
{
    peel::Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

// K4 minus the edge 0-3.
inline peel::Graph diamond()
{
    peel::Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

// K4 on {0,1,2,3} plus vertices 4, 5, 6 adjacent to all of the K4; has
// three maximum 5-cliques sharing the K4 as their core.
inline peel::Graph g7()
{
    peel::Graph out(7);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            out.add_edge(u, v);
    for (int w = 4; w < 7; ++w)
        for (int u = 0; u < 4; ++u)
            out.add_edge(w, u);
    return out;
}

inline peel::Graph petersen()
{
    peel::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

inline peel::Graph disjoint_union(const peel::Graph& a, const peel::Graph& b)
{
    peel::Graph g(a.n + b.n);
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(a.n + u, a.n + v);
    return g;
}

inline peel::Multigraph triangle_multigraph()
{
    peel::Multigraph h(3);
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    h.add_edge(0, 2);
    return h;
}

// Triangle with the edge 0-1 doubled; its line graph is K4.
inline peel::Multigraph doubled_edge_triangle()
{
    peel::Multigraph h(3);
    h.add_edge(0, 1);
    h.add_edge(0, 1);
    h.add_edge(0, 2);
    h.add_edge(1, 2);
    return h;
}

} // namespace fixtures

#endif
