// Brute-force reference implementations, kept independent of the library's
// search code on purpose: these scan entire solution spaces.
#ifndef PEEL_TEST_ORACLES_HPP
#define PEEL_TEST_ORACLES_HPP

#include <algorithm>
#include <vector>

#include "peel/graph.hpp"
#include "peel/transversal.hpp"

namespace oracle {

inline bool mask_is_clique(const peel::Graph& g, unsigned mask)
{
    for (int u = 0; u < g.n; ++u) {
        if (!(mask >> u & 1u))
            continue;
        for (int v = u + 1; v < g.n; ++v)
            if ((mask >> v & 1u) && !g.has_edge(u, v))
                return false;
    }
    return true;
}

// All maximum cliques by scanning every one of the 2^n subsets.
inline std::vector<peel::Bitset> max_cliques_subset_scan(const peel::Graph& g, int& omega_out)
{
    int omega = 0;
    std::vector<unsigned> best;
    for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
        if (!mask_is_clique(g, mask))
            continue;
        int size = std::popcount(mask);
        if (size > omega) {
            omega = size;
            best.clear();
        }
        if (size == omega)
            best.push_back(mask);
    }
    omega_out = omega;
    std::vector<peel::Bitset> out;
    for (unsigned mask : best) {
        peel::Bitset b(g.n);
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1u)
                b.set(v);
        out.push_back(b);
    }
    std::sort(out.begin(), out.end(), [](const peel::Bitset& a, const peel::Bitset& b) {
        return peel::Bitset::compare_lex(a, b) < 0;
    });
    return out;
}

inline int omega_subset_scan(const peel::Graph& g)
{
    int omega = 0;
    max_cliques_subset_scan(g, omega);
    return omega;
}

// Existence of an independent transversal by full product enumeration,
// checking every tuple for independence (no pruning).
inline bool transversal_exists_product_scan(const peel::TransversalInstance& t)
{
    std::vector<std::vector<int>> parts;
    for (const auto& p : t.parts)
        parts.push_back(p.to_vector());
    std::vector<std::size_t> idx(parts.size(), 0);
    while (true) {
        bool independent = true;
        for (std::size_t i = 0; i < parts.size() && independent; ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                if (t.aux.has_edge(parts[i][idx[i]], parts[j][idx[j]])) {
                    independent = false;
                    break;
                }
        if (independent)
            return true;
        std::size_t i = 0;
        while (i < parts.size() && ++idx[i] == parts[i].size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == parts.size())
            return parts.empty();
    }
}

inline bool assignment_is_proper(const peel::Graph& g, const std::vector<int>& colors)
{
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) && colors[static_cast<std::size_t>(u)] ==
                                        colors[static_cast<std::size_t>(v)])
                return false;
    return true;
}

// Tries all k^n assignments.
inline bool k_colorable_exhaustive(const peel::Graph& g, int k)
{
    if (g.n == 0)
        return true;
    if (k == 0)
        return false;
    std::vector<int> colors(static_cast<std::size_t>(g.n), 0);
    while (true) {
        if (assignment_is_proper(g, colors))
            return true;
        int i = 0;
        while (i < g.n && ++colors[static_cast<std::size_t>(i)] == k) {
            colors[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == g.n)
            return false;
    }
}

inline int chromatic_exhaustive(const peel::Graph& g)
{
    for (int k = 0;; ++k)
        if (k_colorable_exhaustive(g, k))
            return k;
}

} // namespace oracle

#endif
