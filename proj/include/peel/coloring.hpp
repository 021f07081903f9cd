#ifndef PEEL_COLORING_HPP
#define PEEL_COLORING_HPP

#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "peel/cliques.hpp"
#include "peel/graph.hpp"
#include "peel/rational.hpp"

namespace peel {

struct ColoringCertificate {
    std::vector<int> colors; // one per vertex, 0..color_count-1
    int color_count = 0;
    std::optional<int> bound_claimed;

    nlohmann::json to_json() const;
};

// Properness, color range, and that every color 0..count-1 is used.
bool verify_coloring(const Graph& g, const ColoringCertificate& c);

// Deterministic DSATUR: highest saturation, then highest degree, then
// lowest index.  Upper bound only.
ColoringCertificate dsatur_greedy(const Graph& g);

// Exact chi: DSATUR upper bound, clique lower bound, then iterative
// k-colorability backtracking.  Practical up to n around 24 in the worst
// case; the graphs this tool targets stay far below that.
ColoringCertificate chromatic_number(const Graph& g);

// All maximal independent sets (maximal cliques of the complement).
std::vector<Bitset> maximal_independent_sets(const Graph& g, long cap = kDefaultCliqueCap);

inline constexpr int kDefaultChiStarCap = 14;

// Exact fractional chromatic number: optimum of the covering LP over
// maximal independent sets, solved with rational simplex.  ResourceError
// above the vertex cap.
RationalValue fractional_chromatic(const Graph& g, int cap = kDefaultChiStarCap);

struct BoundReport {
    int omega = 0;
    int delta = 0;
    int chi = 0;
    int reed_bound = 0;    // ceil((omega+delta+1)/2)
    int seven_sixths = 0;  // ceil(7*omega/6)
    bool hypothesis_3_4 = false; // 4*omega >= 3*(delta+1)
    bool reed_ok = false;
    bool seven_sixths_ok = false;

    nlohmann::json to_json() const;
};

BoundReport reed_bound_report(const Graph& g);

// Base-colorer oracle for theorem_d_color; contracted to use at most
// max(ceil(7*omega/6), ceil((omega+delta+1)/2)) colors on any input.
using BaseColorer = std::function<ColoringCertificate(const Graph&)>;

ColoringCertificate exact_chi_base(const Graph& g);

// Peels independent sets while 4*omega >= 3*(delta+1) holds, one fresh
// color per peel, and hands the remainder to the base oracle.  The result
// is always a verified proper coloring within the Reed bound.
ColoringCertificate theorem_d_color(const Graph& g, const BaseColorer& base);

inline constexpr int kDefaultEdgeColorCap = 40;

// chi'(H) = chi(L(H)).  ResourceError above the edge cap.
int chromatic_index(const Multigraph& h, int edge_cap = kDefaultEdgeColorCap);

struct CapraraRizziReport {
    int delta_h = 0;        // multigraph max degree, parallel edges counted
    int omega_line = 0;
    int chi_line = 0;
    int floor_bound = 0;    // floor(1.1*delta_h + 0.7)
    RationalValue chi_star; // of the line graph
    int ceil_chi_star = 0;
    bool main_holds = false;          // chi <= max(floor_bound, ceil_chi_star)
    bool delta_le_omega = false;      // delta_h <= omega_line (vacuous with no edges)
    bool floor_le_seven_sixths = false; // floor(1.1w+0.7) <= ceil(7w/6) at w = omega_line
    bool holds = false;

    nlohmann::json numbers() const;
    nlohmann::json to_json(const nlohmann::json& witness = nullptr) const;
};

CapraraRizziReport caprara_rizzi_check(const Multigraph& h, int edge_cap = kDefaultEdgeColorCap,
                                       int chi_star_cap = kDefaultChiStarCap);

struct LineGraphReedReport {
    int chi = 0;
    int omega = 0;
    int delta = 0;
    int bound = 0;
    bool holds = false;

    nlohmann::json numbers() const;
    nlohmann::json to_json(const nlohmann::json& witness = nullptr) const;
};

LineGraphReedReport verify_line_graph_reed(const Multigraph& h,
                                           int edge_cap = kDefaultEdgeColorCap);

} // namespace peel

#endif
