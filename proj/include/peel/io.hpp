#ifndef PEEL_IO_HPP
#define PEEL_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "peel/graph.hpp"

namespace peel {

// DIMACS .col dialect: `c` comment lines, one `p edge <n> <m>` header,
// `e <u> <v>` lines with 1-based endpoints.  Duplicate edges are ignored,
// loops rejected, and an edge count that disagrees with the header is a
// warning rather than an error.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
void write_dimacs(const Graph& g, std::ostream& out);
std::string dimacs_string(const Graph& g);

// JSON graph format: { "n": int, "edges": [[u, v], ...] }, 0-based.
// The same shape serves multigraphs, where repeated pairs are meaningful.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json multigraph_to_json(const Multigraph& h);
Multigraph multigraph_from_json(const nlohmann::json& j);

// Reads .col or .json by file extension.
Graph load_graph(const std::string& path, std::vector<std::string>* warnings = nullptr);
Multigraph load_multigraph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

} // namespace peel

#endif
