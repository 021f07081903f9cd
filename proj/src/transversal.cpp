#include "peel/transversal.hpp"

#include <algorithm>
#include <numeric>

#include "peel/io.hpp"
#include "peel/rng.hpp"

namespace peel {

void TransversalInstance::check_invariants() const
{
    Bitset covered(aux.n);
    for (const auto& part : parts) {
        if (part.empty())
            throw InternalError("transversal instance has an empty part");
        if (covered.intersects(part))
            throw InternalError("transversal instance parts overlap");
        covered |= part;
        for (int v = part.first(); v >= 0; v = part.next(v))
            if (aux.adj[static_cast<std::size_t>(v)].intersects(part))
                throw InternalError("aux edge inside a part");
    }
    if (covered != aux.full_set())
        throw InternalError("parts do not cover the aux graph");
}

TransversalInstance build_aux_graph(const Graph& g, const std::vector<CliqueCore>& cores)
{
    Bitset seen(g.n);
    int total = 0;
    for (const auto& c : cores) {
        if (seen.intersects(c.core))
            throw InternalError("component cores overlap");
        seen |= c.core;
        total += c.core.count();
    }

    TransversalInstance inst;
    inst.aux = Graph(total);
    inst.origin.reserve(static_cast<std::size_t>(total));
    std::vector<int> part_of(static_cast<std::size_t>(total));
    int next_id = 0;
    for (std::size_t i = 0; i < cores.size(); ++i) {
        Bitset part(total);
        for (int v = cores[i].core.first(); v >= 0; v = cores[i].core.next(v)) {
            inst.origin.push_back(v);
            part_of[static_cast<std::size_t>(next_id)] = static_cast<int>(i);
            part.set(next_id);
            ++next_id;
        }
        inst.parts.push_back(std::move(part));
    }
    for (int a = 0; a < total; ++a)
        for (int b = a + 1; b < total; ++b)
            if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)] &&
                g.has_edge(inst.origin[static_cast<std::size_t>(a)],
                           inst.origin[static_cast<std::size_t>(b)]))
                inst.aux.add_edge(a, b);
    inst.check_invariants();
    return inst;
}

HaxellPrecondition haxell_precondition(const TransversalInstance& t)
{
    HaxellPrecondition pre;
    pre.aux_max_degree = t.aux.max_degree();
    pre.min_part_size = t.parts.empty() ? 0 : t.parts.front().count();
    for (const auto& part : t.parts)
        pre.min_part_size = std::min(pre.min_part_size, part.count());
    pre.satisfied = t.parts.empty() || pre.min_part_size >= 2 * pre.aux_max_degree;
    return pre;
}

namespace {

bool transversal_dfs(const TransversalInstance& t, const std::vector<int>& order, std::size_t depth,
                     Bitset& blocked, std::vector<int>& picks)
{
    if (depth == order.size())
        return true;
    const Bitset& part = t.parts[static_cast<std::size_t>(order[depth])];
    for (int v = part.first(); v >= 0; v = part.next(v)) {
        if (blocked.test(v))
            continue;
        picks[static_cast<std::size_t>(order[depth])] = v;
        Bitset saved = blocked;
        blocked |= t.aux.adj[static_cast<std::size_t>(v)];
        if (transversal_dfs(t, order, depth + 1, blocked, picks))
            return true;
        blocked = saved;
    }
    return false;
}

} // namespace

std::optional<Transversal> find_transversal(const TransversalInstance& t)
{
    std::vector<int> order(t.parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return t.parts[static_cast<std::size_t>(a)].count() <
               t.parts[static_cast<std::size_t>(b)].count();
    });
    std::vector<int> picks(t.parts.size(), -1);
    Bitset blocked(t.aux.n);
    if (!transversal_dfs(t, order, 0, blocked, picks))
        return std::nullopt;
    return Transversal{std::move(picks)};
}

std::optional<Transversal> greedy_transversal(const TransversalInstance& t, uint64_t seed)
{
    std::size_t k = t.parts.size();
    if (k == 0)
        return Transversal{{}};

    std::vector<std::vector<int>> candidates(k);
    std::vector<int> picks(k);
    for (std::size_t i = 0; i < k; ++i) {
        candidates[i] = t.parts[i].to_vector();
        picks[i] = candidates[i].front();
    }

    auto conflicts_of = [&](std::size_t i, int v) {
        int c = 0;
        const Bitset& nv = t.aux.adj[static_cast<std::size_t>(v)];
        for (std::size_t j = 0; j < k; ++j)
            if (j != i && nv.test(picks[j]))
                ++c;
        return c;
    };

    Xoshiro256 rng(seed);
    long budget = 50L * static_cast<long>(k);
    for (long iter = 0; iter < budget; ++iter) {
        std::vector<std::size_t> conflicted;
        for (std::size_t i = 0; i < k; ++i)
            if (conflicts_of(i, picks[i]) > 0)
                conflicted.push_back(i);
        if (conflicted.empty())
            return Transversal{std::move(picks)};

        std::size_t i = conflicted[rng.below(conflicted.size())];
        int best_score = conflicts_of(i, picks[i]);
        std::vector<int> best;
        for (int v : candidates[i]) {
            int score = conflicts_of(i, v);
            if (score < best_score) {
                best_score = score;
                best = {v};
            } else if (score == best_score) {
                best.push_back(v);
            }
        }
        // best is nonempty: the current pick always matches its own score
        picks[i] = best[rng.below(best.size())];
    }
    return std::nullopt;
}

bool validate_transversal(const TransversalInstance& t, const Transversal& tr)
{
    if (tr.picks.size() != t.parts.size())
        return false;
    for (std::size_t i = 0; i < tr.picks.size(); ++i) {
        int v = tr.picks[i];
        if (v < 0 || v >= t.aux.n || !t.parts[i].test(v))
            return false;
        for (std::size_t j = i + 1; j < tr.picks.size(); ++j)
            if (t.aux.has_edge(v, tr.picks[j]))
                return false;
    }
    return true;
}

nlohmann::json instance_to_json(const TransversalInstance& t)
{
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : t.parts)
        parts.push_back(p.to_vector());
    return {{"aux", graph_to_json(t.aux)}, {"parts", parts}};
}

TransversalInstance instance_from_json(const nlohmann::json& j)
{
    TransversalInstance t;
    t.aux = graph_from_json(j.at("aux"));
    for (const auto& p : j.at("parts"))
        t.parts.push_back(Bitset::from_vector(t.aux.n, p.get<std::vector<int>>()));
    t.check_invariants();
    return t;
}

} // namespace peel
