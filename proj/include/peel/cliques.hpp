#ifndef PEEL_CLIQUES_HPP
#define PEEL_CLIQUES_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "peel/graph.hpp"

namespace peel {

// Moon-Moser growth protection for the enumerator.
inline constexpr long kDefaultCliqueCap = 100000;

// The set Q of all maximum cliques of a host graph, canonically ordered
// (lexicographic by ascending vertex list).
struct CliqueFamily {
    int omega = 0;
    std::vector<Bitset> cliques;

    int size() const { return static_cast<int>(cliques.size()); }
};

// X_Q: vertices are clique indices into a family, edges join intersecting
// cliques.
struct IntersectionGraph {
    Graph adj;
};

// One connected component C_i of X_Q together with its core F_i, the
// intersection of the component's cliques.
struct CliqueCore {
    std::vector<int> component; // clique indices, ascending
    Bitset core;
};

bool is_clique(const Graph& g, const Bitset& s);

// All maximal cliques via pivoting Bron-Kerbosch.  Throws ResourceError
// when more than cap maximal cliques exist.
std::vector<Bitset> maximal_cliques(const Graph& g, long cap = kDefaultCliqueCap);

// All maximum cliques (requires n >= 1).
CliqueFamily max_cliques(const Graph& g, long cap = kDefaultCliqueCap);

// omega(G) by branch and bound; 0 for the vertexless graph.
int clique_number(const Graph& g);

IntersectionGraph intersection_graph(const CliqueFamily& f);

// One core per connected component of X_Q, ordered by smallest clique index.
std::vector<CliqueCore> component_cores(const CliqueFamily& f, const IntersectionGraph& x);

enum class CheckStatus { Passed, Refuted };

inline const char* to_string(CheckStatus s)
{
    return s == CheckStatus::Passed ? "PASSED" : "REFUTED";
}

// |∩Q| >= 2*omega - |∪Q| for any family of maximum cliques.
struct HajnalReport {
    int omega = 0;
    int subfamily_size = 0;
    int intersection_size = 0;
    int union_size = 0;
    long bound = 0; // 2*omega - union_size
    bool holds = false;
    CheckStatus status = CheckStatus::Refuted;

    nlohmann::json numbers() const;
    nlohmann::json to_json(const nlohmann::json& witness = nullptr) const;
};

HajnalReport hajnal_check(const Graph& g, const std::vector<Bitset>& sub);

// Under 3*omega > 2*(delta+1), every connected component of X_Q over all
// maximum cliques induces a complete subgraph.
struct Lemma2Report {
    int omega = 0;
    int delta = 0;
    int clique_count = 0;
    std::vector<int> component_sizes;
    std::vector<bool> component_complete;
    // (component index, clique index, clique index) of the first violation.
    std::optional<std::array<int, 3>> violation;
    CheckStatus status = CheckStatus::Refuted;

    nlohmann::json numbers() const;
    nlohmann::json to_json(const nlohmann::json& witness = nullptr) const;
};

Lemma2Report transitivity_check(const Graph& g);

// Under the same premise every component core is nonempty, and the Hajnal
// argument sharpens this to |core| >= 2*omega - (delta+1).
struct KostochkaReport {
    int omega = 0;
    int delta = 0;
    std::vector<long> core_sizes;
    long core_lower_bound = 0; // 2*omega - (delta+1)
    bool all_nonempty = false;
    bool all_meet_bound = false;
    CheckStatus status = CheckStatus::Refuted;

    nlohmann::json numbers() const;
    nlohmann::json to_json(const nlohmann::json& witness = nullptr) const;
};

KostochkaReport kostochka_check(const Graph& g);

// Exact integer form of omega > (2/3)(delta+1).
inline bool two_thirds_premise(int omega, int delta)
{
    return 3L * omega > 2L * (delta + 1);
}

} // namespace peel

#endif
