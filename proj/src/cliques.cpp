#include "peel/cliques.hpp"

#include <algorithm>

namespace peel {

bool is_clique(const Graph& g, const Bitset& s)
{
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        Bitset rest = s;
        rest.reset(v);
        if (!rest.is_subset_of(g.adj[static_cast<std::size_t>(v)]))
            return false;
    }
    return true;
}

namespace {

struct BronKerbosch {
    const Graph& g;
    long cap;
    long found = 0;
    Bitset r;
    std::vector<Bitset>& out;

    BronKerbosch(const Graph& g, long cap, std::vector<Bitset>& out)
        : g(g), cap(cap), r(g.n), out(out)
    {
    }

    // Pivot: vertex of P∪X covering the most of P, ties to the lowest index.
    int pick_pivot(const Bitset& p, const Bitset& x) const
    {
        int pivot = -1, best = -1;
        Bitset pux = p | x;
        for (int v = pux.first(); v >= 0; v = pux.next(v)) {
            int c = (p & g.adj[static_cast<std::size_t>(v)]).count();
            if (c > best) {
                best = c;
                pivot = v;
            }
        }
        return pivot;
    }

    void expand(Bitset p, Bitset x)
    {
        if (p.empty() && x.empty()) {
            if (++found > cap)
                throw ResourceError("maximal clique count exceeds cap of " + std::to_string(cap));
            out.push_back(r);
            return;
        }
        int pivot = pick_pivot(p, x);
        Bitset candidates = p - g.adj[static_cast<std::size_t>(pivot)];
        for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
            const Bitset& nv = g.adj[static_cast<std::size_t>(v)];
            r.set(v);
            expand(p & nv, x & nv);
            r.reset(v);
            p.reset(v);
            x.set(v);
        }
    }
};

} // namespace

std::vector<Bitset> maximal_cliques(const Graph& g, long cap)
{
    std::vector<Bitset> out;
    if (g.n == 0)
        return out;
    BronKerbosch bk(g, cap, out);
    Bitset p = g.full_set();
    bk.expand(p, Bitset(g.n));
    return out;
}

CliqueFamily max_cliques(const Graph& g, long cap)
{
    if (g.n < 1)
        throw PreconditionError("max_cliques requires at least one vertex");
    std::vector<Bitset> maximal = maximal_cliques(g, cap);
    CliqueFamily fam;
    for (const auto& c : maximal)
        fam.omega = std::max(fam.omega, c.count());
    for (auto& c : maximal)
        if (c.count() == fam.omega)
            fam.cliques.push_back(std::move(c));
    std::sort(fam.cliques.begin(), fam.cliques.end(), [](const Bitset& a, const Bitset& b) {
        return Bitset::compare_lex(a, b) < 0;
    });
    return fam;
}

namespace {

void clique_bb(const Graph& g, int r_size, Bitset p, int& best)
{
    while (!p.empty()) {
        if (r_size + p.count() <= best)
            return;
        int v = p.first();
        p.reset(v);
        Bitset next = p & g.adj[static_cast<std::size_t>(v)];
        if (next.empty())
            best = std::max(best, r_size + 1);
        else
            clique_bb(g, r_size + 1, next, best);
    }
}

} // namespace

int clique_number(const Graph& g)
{
    if (g.n == 0)
        return 0;
    int best = 1;
    clique_bb(g, 0, g.full_set(), best);
    return best;
}

IntersectionGraph intersection_graph(const CliqueFamily& f)
{
    IntersectionGraph x{Graph(f.size())};
    for (int i = 0; i < f.size(); ++i)
        for (int j = i + 1; j < f.size(); ++j)
            if (f.cliques[static_cast<std::size_t>(i)].intersects(
                    f.cliques[static_cast<std::size_t>(j)]))
                x.adj.add_edge(i, j);
    return x;
}

std::vector<CliqueCore> component_cores(const CliqueFamily& f, const IntersectionGraph& x)
{
    std::vector<CliqueCore> cores;
    std::vector<bool> seen(static_cast<std::size_t>(f.size()), false);
    for (int start = 0; start < f.size(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> queue{start}, members;
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            members.push_back(i);
            const Bitset& nbrs = x.adj.adj[static_cast<std::size_t>(i)];
            for (int j = nbrs.first(); j >= 0; j = nbrs.next(j))
                if (!seen[static_cast<std::size_t>(j)]) {
                    seen[static_cast<std::size_t>(j)] = true;
                    queue.push_back(j);
                }
        }
        std::sort(members.begin(), members.end());
        Bitset core = f.cliques[static_cast<std::size_t>(members.front())];
        for (int i : members)
            core &= f.cliques[static_cast<std::size_t>(i)];
        cores.push_back(CliqueCore{std::move(members), std::move(core)});
    }
    return cores;
}

nlohmann::json HajnalReport::numbers() const
{
    return {{"omega", omega},
            {"subfamily_size", subfamily_size},
            {"intersection_size", intersection_size},
            {"union_size", union_size},
            {"bound", bound}};
}

nlohmann::json HajnalReport::to_json(const nlohmann::json& witness) const
{
    return {{"lemma", "hajnal"},
            {"premise_holds", true},
            {"status", to_string(status)},
            {"witness", witness},
            {"numbers", numbers()}};
}

HajnalReport hajnal_check(const Graph& g, const std::vector<Bitset>& sub)
{
    if (sub.empty())
        throw PreconditionError("hajnal_check requires a nonempty subfamily");
    int omega = clique_number(g);
    for (const auto& q : sub) {
        if (q.count() != omega || !is_clique(g, q))
            throw PreconditionError("hajnal_check subfamily member is not a maximum clique");
    }
    Bitset inter = sub.front(), uni = sub.front();
    for (const auto& q : sub) {
        inter &= q;
        uni |= q;
    }
    HajnalReport rep;
    rep.omega = omega;
    rep.subfamily_size = static_cast<int>(sub.size());
    rep.intersection_size = inter.count();
    rep.union_size = uni.count();
    rep.bound = 2L * omega - rep.union_size;
    rep.holds = rep.intersection_size >= rep.bound;
    rep.status = rep.holds ? CheckStatus::Passed : CheckStatus::Refuted;
    return rep;
}

nlohmann::json Lemma2Report::numbers() const
{
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t i = 0; i < component_sizes.size(); ++i)
        comps.push_back({{"size", component_sizes[i]}, {"complete", bool(component_complete[i])}});
    nlohmann::json j{{"omega", omega},
                     {"delta", delta},
                     {"clique_count", clique_count},
                     {"components", comps}};
    if (violation)
        j["violation"] = {{"component", (*violation)[0]},
                          {"clique_a", (*violation)[1]},
                          {"clique_b", (*violation)[2]}};
    return j;
}

nlohmann::json Lemma2Report::to_json(const nlohmann::json& witness) const
{
    return {{"lemma", "lemma2"},
            {"premise_holds", true},
            {"status", to_string(status)},
            {"witness", witness},
            {"numbers", numbers()}};
}

Lemma2Report transitivity_check(const Graph& g)
{
    int omega = clique_number(g);
    int delta = g.max_degree();
    if (!two_thirds_premise(omega, delta))
        throw PremiseNotMetError("premise 3*omega > 2*(delta+1) fails: omega=" +
                                 std::to_string(omega) + " delta=" + std::to_string(delta));
    CliqueFamily fam = max_cliques(g);
    IntersectionGraph x = intersection_graph(fam);
    std::vector<CliqueCore> cores = component_cores(fam, x);

    Lemma2Report rep;
    rep.omega = omega;
    rep.delta = delta;
    rep.clique_count = fam.size();
    bool all_complete = true;
    for (std::size_t ci = 0; ci < cores.size(); ++ci) {
        const auto& members = cores[ci].component;
        bool complete = true;
        for (std::size_t a = 0; a < members.size() && complete; ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (!x.adj.has_edge(members[a], members[b])) {
                    complete = false;
                    if (!rep.violation)
                        rep.violation = {static_cast<int>(ci), members[a], members[b]};
                    break;
                }
        rep.component_sizes.push_back(static_cast<int>(members.size()));
        rep.component_complete.push_back(complete);
        all_complete = all_complete && complete;
    }
    rep.status = all_complete ? CheckStatus::Passed : CheckStatus::Refuted;
    return rep;
}

nlohmann::json KostochkaReport::numbers() const
{
    return {{"omega", omega},
            {"delta", delta},
            {"core_sizes", core_sizes},
            {"core_lower_bound", core_lower_bound},
            {"all_nonempty", all_nonempty},
            {"all_meet_bound", all_meet_bound}};
}

nlohmann::json KostochkaReport::to_json(const nlohmann::json& witness) const
{
    return {{"lemma", "kostochka"},
            {"premise_holds", true},
            {"status", to_string(status)},
            {"witness", witness},
            {"numbers", numbers()}};
}

KostochkaReport kostochka_check(const Graph& g)
{
    int omega = clique_number(g);
    int delta = g.max_degree();
    if (!two_thirds_premise(omega, delta))
        throw PremiseNotMetError("premise 3*omega > 2*(delta+1) fails: omega=" +
                                 std::to_string(omega) + " delta=" + std::to_string(delta));
    CliqueFamily fam = max_cliques(g);
    IntersectionGraph x = intersection_graph(fam);
    std::vector<CliqueCore> cores = component_cores(fam, x);

    KostochkaReport rep;
    rep.omega = omega;
    rep.delta = delta;
    rep.core_lower_bound = 2L * omega - (delta + 1);
    rep.all_nonempty = true;
    rep.all_meet_bound = true;
    for (const auto& c : cores) {
        long size = c.core.count();
        rep.core_sizes.push_back(size);
        rep.all_nonempty = rep.all_nonempty && size > 0;
        rep.all_meet_bound = rep.all_meet_bound && size >= rep.core_lower_bound;
    }
    rep.status =
        (rep.all_nonempty && rep.all_meet_bound) ? CheckStatus::Passed : CheckStatus::Refuted;
    return rep;
}

} // namespace peel
