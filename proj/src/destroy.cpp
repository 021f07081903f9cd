#include "peel/destroy.hpp"

#include "peel/io.hpp"

namespace peel {

bool is_independent_set(const Graph& g, const Bitset& s)
{
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (g.adj[static_cast<std::size_t>(v)].intersects(s))
            return false;
    return true;
}

bool is_maximal_independent(const Graph& g, const Bitset& s)
{
    if (!is_independent_set(g, s))
        return false;
    for (int v = 0; v < g.n; ++v)
        if (!s.test(v) && !g.adj[static_cast<std::size_t>(v)].intersects(s))
            return false;
    return true;
}

nlohmann::json certificate_to_json(const DestructionCertificate& c)
{
    return {{"I", c.independent_set.to_vector()},
            {"omega_before", c.omega_before},
            {"omega_after", c.omega_after},
            {"maximal", c.maximal},
            {"delta_before", c.delta_before},
            {"delta_after", c.delta_after}};
}

DestructionCertificate certificate_from_json(const nlohmann::json& j, int host_n)
{
    DestructionCertificate c;
    c.independent_set = Bitset::from_vector(host_n, j.at("I").get<std::vector<int>>());
    c.omega_before = j.at("omega_before").get<int>();
    c.omega_after = j.at("omega_after").get<int>();
    c.maximal = j.at("maximal").get<bool>();
    c.delta_before = j.at("delta_before").get<int>();
    c.delta_after = j.at("delta_after").get<int>();
    return c;
}

nlohmann::json HaxellChainReport::numbers() const
{
    return {{"omega", omega},
            {"delta", delta},
            {"aux_max_degree", aux_max_degree},
            {"min_core_size", min_core_size},
            {"core_size_ok", core_size_ok},
            {"half_delta_ok", half_delta_ok},
            {"outside_budget_ok", outside_budget_ok},
            {"aux_degree_ok", aux_degree_ok},
            {"haxell_ok", haxell_ok}};
}

HaxellChainReport haxell_chain_check(int omega, int delta, const TransversalInstance& inst)
{
    HaxellChainReport rep;
    rep.omega = omega;
    rep.delta = delta;
    rep.aux_max_degree = inst.aux.max_degree();
    rep.min_core_size = inst.parts.empty() ? 0 : inst.parts.front().count();
    for (const auto& part : inst.parts)
        rep.min_core_size = std::min(rep.min_core_size, part.count());

    long w = omega, d1 = static_cast<long>(delta) + 1;
    rep.core_size_ok = rep.min_core_size >= 2 * w - d1;
    rep.half_delta_ok = 2 * (2 * w - d1) >= d1;
    rep.outside_budget_ok = d1 >= 4 * (d1 - w);
    rep.aux_degree_ok = rep.aux_max_degree <= d1 - w;
    rep.haxell_ok = rep.min_core_size >= 2L * rep.aux_max_degree;
    return rep;
}

namespace {

// Fixed internal seed for the greedy fast path; destroy_clique takes no
// seed parameter, so determinism requires a constant here.
constexpr uint64_t kDestroySeed = 0x9E3779B97F4A7C15ull;

} // namespace

DestructionCertificate destroy_clique(const Graph& g, DestroyTrace* trace)
{
    if (g.n < 1)
        throw PreconditionError("destroy_clique requires at least one vertex");
    int omega_before = clique_number(g);
    int delta_before = g.max_degree();
    if (4L * omega_before < 3L * (delta_before + 1))
        throw HypothesisError("hypothesis 4*omega >= 3*(delta+1) fails: omega=" +
                              std::to_string(omega_before) +
                              " delta=" + std::to_string(delta_before));

    CliqueFamily family = max_cliques(g);
    IntersectionGraph x = intersection_graph(family);
    std::vector<CliqueCore> cores = component_cores(family, x);
    TransversalInstance inst = build_aux_graph(g, cores);
    HaxellPrecondition pre = haxell_precondition(inst);
    if (!pre.satisfied)
        throw RefutationError("haxell_precondition",
                              "a core is smaller than twice the aux maximum degree",
                              graph_to_json(g).dump());

    std::optional<Transversal> tr = greedy_transversal(inst, kDestroySeed);
    if (tr && !validate_transversal(inst, *tr))
        throw InternalError("greedy_transversal returned an invalid transversal");
    if (!tr)
        tr = find_transversal(inst);
    if (!tr)
        throw RefutationError("haxell",
                              "no independent transversal despite satisfied precondition",
                              graph_to_json(g).dump());
    if (!validate_transversal(inst, *tr))
        throw InternalError("transversal solver returned an invalid transversal");

    DestructionCertificate cert;
    cert.independent_set = Bitset(g.n);
    for (int pick : tr->picks)
        cert.independent_set.set(inst.origin[static_cast<std::size_t>(pick)]);
    if (!is_independent_set(g, cert.independent_set))
        throw InternalError("transversal picks are not independent in the host graph");

    Graph residual = g.remove_vertices(cert.independent_set);
    cert.omega_before = omega_before;
    cert.omega_after = clique_number(residual);
    cert.delta_before = delta_before;
    cert.delta_after = residual.max_degree();
    cert.maximal = is_maximal_independent(g, cert.independent_set);
    if (cert.omega_after >= cert.omega_before)
        throw RefutationError("main_lemma", "clique number did not drop",
                              graph_to_json(g).dump());

    if (trace) {
        trace->precondition = pre;
        trace->chain = haxell_chain_check(omega_before, delta_before, inst);
        trace->family = std::move(family);
        trace->cores = std::move(cores);
        trace->instance = std::move(inst);
    }
    return cert;
}

Bitset extend_to_maximal(const Graph& g, const Bitset& independent)
{
    if (independent.universe() != g.n)
        throw PreconditionError("independent set universe does not match the graph");
    if (!is_independent_set(g, independent))
        throw PreconditionError("extend_to_maximal requires an independent set");
    Bitset out = independent;
    for (int v = 0; v < g.n; ++v)
        if (!out.test(v) && !g.adj[static_cast<std::size_t>(v)].intersects(out))
            out.set(v);
    return out;
}

DestructionVerification verify_destruction(const Graph& g, const DestructionCertificate& c)
{
    if (c.independent_set.universe() != g.n)
        return {false, "independent set universe mismatch"};
    if (!is_independent_set(g, c.independent_set))
        return {false, "independence"};
    if (clique_number(g) != c.omega_before)
        return {false, "omega_before"};
    if (g.max_degree() != c.delta_before)
        return {false, "delta_before"};
    if (c.omega_after >= c.omega_before)
        return {false, "omega drop"};
    Graph residual = g.remove_vertices(c.independent_set);
    if (clique_number(residual) != c.omega_after)
        return {false, "omega_after"};
    if (residual.max_degree() != c.delta_after)
        return {false, "delta_after"};
    if (is_maximal_independent(g, c.independent_set) != c.maximal)
        return {false, "maximal flag"};
    if (c.maximal && residual.n > 0 && c.delta_after >= c.delta_before)
        return {false, "delta drop under maximality"};
    return {true, ""};
}

} // namespace peel
