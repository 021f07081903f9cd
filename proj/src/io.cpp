#include "peel/io.hpp"

#include <fstream>
#include <sstream>

namespace peel {

namespace {

bool has_suffix(const std::string& s, const std::string& suf)
{
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

} // namespace

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings)
{
    std::string line;
    long lineno = 0;
    bool have_header = false;
    int n = 0;
    long declared_m = 0, seen_m = 0;
    Graph g;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue; // blank line
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (have_header)
                throw ParseError("duplicate problem line", lineno);
            std::string kind;
            if (!(ls >> kind >> n >> declared_m) || kind != "edge")
                throw ParseError("malformed problem line, expected 'p edge <n> <m>'", lineno);
            if (n < 0 || n > kMaxVertices)
                throw ParseError("vertex count out of supported range", lineno);
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header)
                throw ParseError("edge line before problem line", lineno);
            long u, v;
            if (!(ls >> u >> v))
                throw ParseError("malformed edge line", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex index out of range", lineno);
            if (u == v)
                throw ParseError("loop edge rejected", lineno);
            int a = static_cast<int>(u - 1), b = static_cast<int>(v - 1);
            if (!g.has_edge(a, b)) {
                g.add_edge(a, b);
                ++seen_m;
            }
            continue;
        }
        throw ParseError("unrecognized line tag '" + tag + "'", lineno);
    }
    if (!have_header)
        throw ParseError("missing problem line");
    if (warnings && seen_m != declared_m)
        warnings->push_back("header declares " + std::to_string(declared_m) + " edges, file has " +
                            std::to_string(seen_m));
    return g;
}

Graph parse_dimacs_text(const std::string& text, std::vector<std::string>* warnings)
{
    std::istringstream in(text);
    return parse_dimacs(in, warnings);
}

void write_dimacs(const Graph& g, std::ostream& out)
{
    out << "p edge " << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::string dimacs_string(const Graph& g)
{
    std::ostringstream out;
    write_dimacs(g, out);
    return out.str();
}

nlohmann::json graph_to_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON must be an object with 'n' and 'edges'");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("graph JSON edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

nlohmann::json multigraph_to_json(const Multigraph& h)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : h.edges)
        edges.push_back({u, v});
    return {{"n", h.n}, {"edges", edges}};
}

Multigraph multigraph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("multigraph JSON must be an object with 'n' and 'edges'");
    Multigraph h(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("multigraph JSON edge must be a pair");
        h.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return h;
}

Graph load_graph(const std::string& path, std::vector<std::string>* warnings)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    if (has_suffix(path, ".json")) {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + ": " + e.what());
        }
        return graph_from_json(j);
    }
    return parse_dimacs(in, warnings);
}

Multigraph load_multigraph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return multigraph_from_json(j);
}

void save_graph(const Graph& g, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    if (has_suffix(path, ".json"))
        out << graph_to_json(g).dump(2) << "\n";
    else
        write_dimacs(g, out);
}

} // namespace peel
