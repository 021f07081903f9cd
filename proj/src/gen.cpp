#include "peel/gen.hpp"

#include <string>

#include "peel/cliques.hpp"
#include "peel/rng.hpp"

namespace peel {

Graph gen_er(int n, double p, uint64_t seed)
{
    if (p < 0.0 || p > 1.0)
        throw PreconditionError("edge probability must be in [0, 1]");
    Graph g(n);
    Xoshiro256 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                g.add_edge(u, v);
    return g;
}

namespace {

Graph hypothesis_attempt(int k, int t, double q, uint64_t seed)
{
    int n = k * t;
    Graph g(n);
    for (int c = 0; c < t; ++c)
        for (int u = c * k; u < (c + 1) * k; ++u)
            for (int v = u + 1; v < (c + 1) * k; ++v)
                g.add_edge(u, v);

    int degree_cap = (4 * k) / 3 - 1;
    std::vector<int> deg(static_cast<std::size_t>(n), k - 1);
    Xoshiro256 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (u / k == v / k)
                continue;
            if (rng.unit() < q && deg[static_cast<std::size_t>(u)] < degree_cap &&
                deg[static_cast<std::size_t>(v)] < degree_cap) {
                g.add_edge(u, v);
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(v)];
            }
        }
    return g;
}

} // namespace

Graph gen_hypothesis(int k, int t, double q, uint64_t seed)
{
    if (k < 1 || t < 1)
        throw PreconditionError("gen_hypothesis requires k >= 1 and t >= 1");
    if (q < 0.0 || q > 1.0)
        throw PreconditionError("edge probability must be in [0, 1]");
    if (static_cast<long>(k) * t > kMaxVertices)
        throw PreconditionError("k*t exceeds the supported vertex cap");

    SplitMix64 seeds(seed);
    uint64_t attempt_seed = seed;
    for (int attempt = 0; attempt < kHypothesisRetryBudget; ++attempt) {
        Graph g = hypothesis_attempt(k, t, q, attempt_seed);
        int omega = clique_number(g);
        int delta = g.max_degree();
        if (omega == k && 4L * omega >= 3L * (delta + 1))
            return g;
        attempt_seed = seeds.next();
    }
    throw GenerationError("gen_hypothesis exhausted " + std::to_string(kHypothesisRetryBudget) +
                          " attempts for k=" + std::to_string(k) + " t=" + std::to_string(t) +
                          " q=" + std::to_string(q) + " seed=" + std::to_string(seed));
}

Multigraph gen_multigraph(int n, int m, uint64_t seed)
{
    if (n < 2 && m > 0)
        throw PreconditionError("multigraph with edges needs at least two vertices");
    Multigraph h(n);
    Xoshiro256 rng(seed);
    for (int i = 0; i < m; ++i) {
        int u = rng.range(0, n - 1);
        int v = rng.range(0, n - 2);
        if (v >= u)
            ++v;
        h.add_edge(std::min(u, v), std::max(u, v));
    }
    return h;
}

} // namespace peel
