#ifndef PEEL_DESTROY_HPP
#define PEEL_DESTROY_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "peel/transversal.hpp"

namespace peel {

bool is_independent_set(const Graph& g, const Bitset& s);
bool is_maximal_independent(const Graph& g, const Bitset& s);

// Outcome of one clique-destruction run: the independent set I together
// with the clique numbers and maximum degrees before and after removal.
struct DestructionCertificate {
    Bitset independent_set;
    int omega_before = 0;
    int omega_after = 0;
    bool maximal = false;
    int delta_before = 0;
    int delta_after = 0;
};

// { "I": [...], "omega_before": ..., "omega_after": ..., "maximal": ...,
//   "delta_before": ..., "delta_after": ... }
nlohmann::json certificate_to_json(const DestructionCertificate& c);
DestructionCertificate certificate_from_json(const nlohmann::json& j, int host_n);

// Step-by-step integer form of the inequality chain that feeds Haxell's
// theorem:
//   min|F_i| >= 2w - (d+1) >= (d+1)/2 >= 2(d+1-w) >= 2*Delta(H)
// written without fractions so every comparison is exact.
struct HaxellChainReport {
    int omega = 0;
    int delta = 0;
    int aux_max_degree = 0;
    int min_core_size = 0;
    bool core_size_ok = false;     // min|F_i| >= 2w - (d+1)
    bool half_delta_ok = false;    // 2*(2w - (d+1)) >= d+1
    bool outside_budget_ok = false; // d+1 >= 4*(d+1-w)
    bool aux_degree_ok = false;    // Delta(H) <= d+1-w
    bool haxell_ok = false;        // min part >= 2*Delta(H)

    bool all() const
    {
        return core_size_ok && half_delta_ok && outside_budget_ok && aux_degree_ok && haxell_ok;
    }
    nlohmann::json numbers() const;
};

HaxellChainReport haxell_chain_check(int omega, int delta, const TransversalInstance& inst);

// Intermediate products of destroy_clique, for inspection by tests and the
// campaign harness.
struct DestroyTrace {
    CliqueFamily family;
    std::vector<CliqueCore> cores;
    TransversalInstance instance;
    HaxellPrecondition precondition;
    HaxellChainReport chain;
};

// The central construction.  Requires n >= 1 and 4*omega >= 3*(delta+1)
// (HypothesisError otherwise).  Enumerates all maximum cliques, forms the
// component cores, builds the auxiliary graph, and picks one vertex per
// core via greedy_transversal (seeded deterministically) with exact
// find_transversal as fallback.  A failed Haxell precondition or a missing
// transversal contradicts the theory and raises RefutationError.
DestructionCertificate destroy_clique(const Graph& g, DestroyTrace* trace = nullptr);

// Greedy ascending-index extension to a maximal independent set.
Bitset extend_to_maximal(const Graph& g, const Bitset& independent);

struct DestructionVerification {
    bool pass = false;
    std::string failure; // empty on pass
};

// Recomputes every certificate field with the exact engines.
DestructionVerification verify_destruction(const Graph& g, const DestructionCertificate& c);

} // namespace peel

#endif
