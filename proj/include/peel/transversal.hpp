#ifndef PEEL_TRANSVERSAL_HPP
#define PEEL_TRANSVERSAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "peel/cliques.hpp"
#include "peel/graph.hpp"

namespace peel {

// The auxiliary graph H together with its partition into parts.  Parts are
// nonempty, pairwise disjoint, cover V(aux), and span no aux edge.  origin
// maps aux vertices back to host-graph vertices when the instance came from
// build_aux_graph (empty otherwise).
struct TransversalInstance {
    Graph aux;
    std::vector<Bitset> parts;
    std::vector<int> origin;

    void check_invariants() const;
};

// One pick per part, indices into aux, forming an independent set.
struct Transversal {
    std::vector<int> picks;
};

// V(H) = union of the cores; edges are exactly the host edges joining
// different cores.  Aux vertex ids run over the cores in order, ascending
// host vertex within each core.
TransversalInstance build_aux_graph(const Graph& g, const std::vector<CliqueCore>& cores);

struct HaxellPrecondition {
    int aux_max_degree = 0;
    int min_part_size = 0;
    bool satisfied = false; // every part has size >= 2 * aux_max_degree
};

HaxellPrecondition haxell_precondition(const TransversalInstance& t);

// Exact backtracking; parts in ascending size order, candidates ascending.
// Returns the first transversal in that order, or nothing when none exists.
std::optional<Transversal> find_transversal(const TransversalInstance& t);

// Randomized min-conflicts repair starting from the all-first-candidates
// assignment; budget 50 * parts iterations.  Failure is inconclusive.
std::optional<Transversal> greedy_transversal(const TransversalInstance& t, uint64_t seed);

// Solver-independent soundness check.
bool validate_transversal(const TransversalInstance& t, const Transversal& tr);

// { "aux": {n, edges}, "parts": [[v, ...], ...] }
nlohmann::json instance_to_json(const TransversalInstance& t);
TransversalInstance instance_from_json(const nlohmann::json& j);

} // namespace peel

#endif
