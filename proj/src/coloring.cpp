#include "peel/coloring.hpp"

#include <algorithm>

#include "peel/destroy.hpp"
#include "peel/io.hpp"

namespace peel {

nlohmann::json ColoringCertificate::to_json() const
{
    nlohmann::json j{{"colors", colors}, {"color_count", color_count}};
    j["bound_claimed"] = bound_claimed ? nlohmann::json(*bound_claimed) : nlohmann::json(nullptr);
    return j;
}

bool verify_coloring(const Graph& g, const ColoringCertificate& c)
{
    if (static_cast<int>(c.colors.size()) != g.n)
        return false;
    std::vector<bool> used(static_cast<std::size_t>(c.color_count), false);
    for (int v = 0; v < g.n; ++v) {
        int col = c.colors[static_cast<std::size_t>(v)];
        if (col < 0 || col >= c.color_count)
            return false;
        used[static_cast<std::size_t>(col)] = true;
        const Bitset& nb = g.adj[static_cast<std::size_t>(v)];
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            if (c.colors[static_cast<std::size_t>(u)] == col)
                return false;
    }
    for (bool b : used)
        if (!b)
            return false;
    return true;
}

namespace {

// DSATUR vertex choice: highest saturation, then highest degree, then
// lowest index.  Returns -1 when everything is colored.
int pick_vertex(const Graph& g, const std::vector<int>& colors,
                const std::vector<Bitset>& neighbor_colors)
{
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.n; ++v) {
        if (colors[static_cast<std::size_t>(v)] >= 0)
            continue;
        int sat = neighbor_colors[static_cast<std::size_t>(v)].count();
        int deg = g.degree(v);
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            best = v;
            best_sat = sat;
            best_deg = deg;
        }
    }
    return best;
}

struct KColoring {
    const Graph& g;
    int k;
    std::vector<int> colors;
    std::vector<Bitset> neighbor_colors; // colors seen in the neighborhood

    KColoring(const Graph& g, int k)
        : g(g), k(k), colors(static_cast<std::size_t>(g.n), -1),
          neighbor_colors(static_cast<std::size_t>(g.n), Bitset(k))
    {
    }

    bool solve(int colored, int max_used)
    {
        if (colored == g.n)
            return true;
        int v = pick_vertex(g, colors, neighbor_colors);
        const Bitset& nb = g.adj[static_cast<std::size_t>(v)];
        // colors beyond max_used+1 are interchangeable; trying one is enough
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (neighbor_colors[static_cast<std::size_t>(v)].test(c))
                continue;
            colors[static_cast<std::size_t>(v)] = c;
            std::vector<int> newly;
            for (int u = nb.first(); u >= 0; u = nb.next(u))
                if (!neighbor_colors[static_cast<std::size_t>(u)].test(c)) {
                    neighbor_colors[static_cast<std::size_t>(u)].set(c);
                    newly.push_back(u);
                }
            if (solve(colored + 1, std::max(max_used, c)))
                return true;
            colors[static_cast<std::size_t>(v)] = -1;
            for (int u : newly)
                neighbor_colors[static_cast<std::size_t>(u)].reset(c);
        }
        return false;
    }
};

} // namespace

ColoringCertificate dsatur_greedy(const Graph& g)
{
    ColoringCertificate cert;
    cert.colors.assign(static_cast<std::size_t>(g.n), -1);
    std::vector<Bitset> neighbor_colors(static_cast<std::size_t>(g.n), Bitset(std::max(g.n, 1)));
    int used = 0;
    for (int step = 0; step < g.n; ++step) {
        int v = pick_vertex(g, cert.colors, neighbor_colors);
        int c = 0;
        while (neighbor_colors[static_cast<std::size_t>(v)].test(c))
            ++c;
        cert.colors[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
        const Bitset& nb = g.adj[static_cast<std::size_t>(v)];
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            neighbor_colors[static_cast<std::size_t>(u)].set(c);
    }
    cert.color_count = used;
    return cert;
}

ColoringCertificate chromatic_number(const Graph& g)
{
    if (g.n == 0)
        return ColoringCertificate{{}, 0, std::nullopt};
    ColoringCertificate best = dsatur_greedy(g);
    int lb = clique_number(g);
    for (int k = lb; k < best.color_count; ++k) {
        KColoring search(g, k);
        if (search.solve(0, -1)) {
            best.colors = std::move(search.colors);
            best.color_count = k;
            break;
        }
    }
    return best;
}

std::vector<Bitset> maximal_independent_sets(const Graph& g, long cap)
{
    return maximal_cliques(g.complement(), cap);
}

nlohmann::json BoundReport::to_json() const
{
    return {{"omega", omega},
            {"delta", delta},
            {"chi", chi},
            {"reed_bound", reed_bound},
            {"seven_sixths", seven_sixths},
            {"hypothesis_3_4", hypothesis_3_4},
            {"reed_ok", reed_ok},
            {"seven_sixths_ok", seven_sixths_ok}};
}

BoundReport reed_bound_report(const Graph& g)
{
    BoundReport rep;
    rep.omega = clique_number(g);
    rep.delta = g.max_degree();
    rep.chi = chromatic_number(g).color_count;
    rep.reed_bound = peel::reed_bound(rep.omega, rep.delta);
    rep.seven_sixths = seven_sixths_bound(rep.omega);
    rep.hypothesis_3_4 = 4L * rep.omega >= 3L * (rep.delta + 1);
    rep.reed_ok = rep.chi <= rep.reed_bound;
    rep.seven_sixths_ok = rep.chi <= rep.seven_sixths;
    return rep;
}

ColoringCertificate exact_chi_base(const Graph& g)
{
    return chromatic_number(g);
}

ColoringCertificate theorem_d_color(const Graph& g, const BaseColorer& base)
{
    if (g.n == 0)
        return ColoringCertificate{{}, 0, 0};
    int omega = clique_number(g);
    int delta = g.max_degree();
    int reed = peel::reed_bound(omega, delta);

    ColoringCertificate result;
    if (4L * omega >= 3L * (delta + 1)) {
        DestructionCertificate cert = destroy_clique(g);
        Bitset peeled = extend_to_maximal(g, cert.independent_set);
        std::vector<int> old_ids;
        Graph rest = g.remove_vertices(peeled, &old_ids);
        ColoringCertificate sub = theorem_d_color(rest, base);
        result.colors.assign(static_cast<std::size_t>(g.n), -1);
        for (int v = peeled.first(); v >= 0; v = peeled.next(v))
            result.colors[static_cast<std::size_t>(v)] = sub.color_count;
        for (std::size_t i = 0; i < old_ids.size(); ++i)
            result.colors[static_cast<std::size_t>(old_ids[i])] = sub.colors[i];
        result.color_count = sub.color_count + 1;
    } else {
        result = base(g);
        int contract = std::max(seven_sixths_bound(omega), reed);
        if (!verify_coloring(g, result))
            throw OracleContractError("base colorer returned an improper coloring",
                                      graph_to_json(g).dump());
        if (result.color_count > contract)
            throw OracleContractError(
                "base colorer used " + std::to_string(result.color_count) +
                    " colors, contract allows " + std::to_string(contract),
                graph_to_json(g).dump());
    }

    result.bound_claimed = reed;
    if (!verify_coloring(g, result))
        throw InternalError("theorem_d_color produced an improper coloring");
    if (result.color_count > reed)
        throw InternalError("theorem_d_color exceeded the Reed bound: " +
                            std::to_string(result.color_count) + " > " + std::to_string(reed));
    return result;
}

int chromatic_index(const Multigraph& h, int edge_cap)
{
    if (static_cast<int>(h.edges.size()) > edge_cap)
        throw ResourceError("multigraph has " + std::to_string(h.edges.size()) +
                            " edges, chromatic index cap is " + std::to_string(edge_cap));
    if (h.edges.empty())
        return 0;
    return chromatic_number(line_graph(h).graph).color_count;
}

nlohmann::json CapraraRizziReport::numbers() const
{
    return {{"delta_h", delta_h},
            {"omega_line", omega_line},
            {"chi_line", chi_line},
            {"floor_bound", floor_bound},
            {"chi_star", chi_star.to_json()},
            {"ceil_chi_star", ceil_chi_star},
            {"main_holds", main_holds},
            {"delta_le_omega", delta_le_omega},
            {"floor_le_seven_sixths", floor_le_seven_sixths}};
}

nlohmann::json CapraraRizziReport::to_json(const nlohmann::json& witness) const
{
    return {{"lemma", "caprara_rizzi"},
            {"premise_holds", true},
            {"status", holds ? "PASSED" : "REFUTED"},
            {"witness", witness},
            {"numbers", numbers()}};
}

CapraraRizziReport caprara_rizzi_check(const Multigraph& h, int edge_cap, int chi_star_cap)
{
    if (static_cast<int>(h.edges.size()) > edge_cap)
        throw ResourceError("multigraph exceeds the edge-coloring cap");
    Graph line = line_graph(h).graph;

    CapraraRizziReport rep;
    rep.delta_h = h.max_degree();
    rep.omega_line = clique_number(line);
    rep.chi_line = chromatic_number(line).color_count;
    rep.floor_bound = caprara_rizzi_floor(rep.delta_h);
    rep.chi_star = fractional_chromatic(line, chi_star_cap);
    rep.ceil_chi_star = static_cast<int>(rep.chi_star.ceil());
    rep.main_holds = rep.chi_line <= std::max(rep.floor_bound, rep.ceil_chi_star);
    rep.delta_le_omega = h.edges.empty() || rep.delta_h <= rep.omega_line;
    rep.floor_le_seven_sixths =
        caprara_rizzi_floor(rep.omega_line) <= seven_sixths_bound(rep.omega_line);
    rep.holds = rep.main_holds && rep.delta_le_omega && rep.floor_le_seven_sixths;
    return rep;
}

nlohmann::json LineGraphReedReport::numbers() const
{
    return {{"chi", chi}, {"omega", omega}, {"delta", delta}, {"bound", bound}};
}

nlohmann::json LineGraphReedReport::to_json(const nlohmann::json& witness) const
{
    return {{"lemma", "line_graph_reed"},
            {"premise_holds", true},
            {"status", holds ? "PASSED" : "REFUTED"},
            {"witness", witness},
            {"numbers", numbers()}};
}

LineGraphReedReport verify_line_graph_reed(const Multigraph& h, int edge_cap)
{
    if (static_cast<int>(h.edges.size()) > edge_cap)
        throw ResourceError("multigraph exceeds the edge-coloring cap");
    Graph line = line_graph(h).graph;

    LineGraphReedReport rep;
    rep.omega = clique_number(line);
    rep.delta = line.max_degree();
    rep.chi = chromatic_number(line).color_count;
    rep.bound = reed_bound(rep.omega, rep.delta);
    rep.holds = rep.chi <= rep.bound;
    return rep;
}

} // namespace peel
