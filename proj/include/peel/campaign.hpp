#ifndef PEEL_CAMPAIGN_HPP
#define PEEL_CAMPAIGN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "peel/coloring.hpp"
#include "peel/gen.hpp"

namespace peel {

enum class CheckKind {
    Hajnal,
    Lemma2,
    Kostochka,
    MainLemma,
    Haxell,
    TheoremD,
    MolloyReed,
    CapraraRizzi,
    LineGraphReed,
};

const char* check_name(CheckKind k);
CheckKind check_from_name(const std::string& name); // ConfigError on unknown

struct IntRange {
    int lo = 0, hi = 0;
};

struct RealRange {
    double lo = 0, hi = 0;
};

// Graph generator spec: "er" draws n and p per sample, "hypothesis" draws
// k, t, q per sample.  Ranges are inclusive.
struct GeneratorSpec {
    std::string kind = "hypothesis";
    IntRange n{4, 10};
    RealRange p{0.1, 0.9};
    IntRange k{2, 5};
    IntRange t{1, 4};
    RealRange q{0.0, 0.25};
};

// Multigraph parameters for the edge-coloring checks; each sample that
// needs one draws it from an independent per-sample stream.
struct MultigraphSpec {
    IntRange n{2, 7};
    IntRange m{1, 12};
};

struct Caps {
    long max_cliques = kDefaultCliqueCap;
    int chi_star_n = kDefaultChiStarCap;
    int edge_color_m = kDefaultEdgeColorCap;
};

struct CampaignConfig {
    GeneratorSpec gen;
    MultigraphSpec mg;
    int samples = 200;
    uint64_t seed = 1;
    std::vector<CheckKind> checks; // defaults to all nine
    Caps caps;
    int hajnal_subfamilies = 20;
    int threads = 0; // 0 = runtime default, 1 = serial
    std::string out_path;

    nlohmann::json to_json() const;
};

CampaignConfig default_config();

// Parses and validates a config document.  Unknown keys are rejected and
// out-of-range values named; absent keys take the documented defaults.
CampaignConfig parse_config(const std::string& json_text);
CampaignConfig parse_config(const nlohmann::json& j);

struct CheckCounters {
    long tested = 0; // premise_not_met + passed + refuted
    long premise_not_met = 0;
    long passed = 0;
    long refuted = 0;
    long resource_capped = 0; // counted separately, outside `tested`

    bool operator==(const CheckCounters& o) const = default;
};

struct CampaignReport {
    std::string tool_version;
    nlohmann::json config_echo;
    std::map<std::string, CheckCounters> counters;
    std::vector<nlohmann::json> refutations; // full {lemma,...,witness} records
    long wall_time_ms = 0;

    long total_refuted() const;
};

// Evaluates every sample and merges the outcomes in sample order, so the
// report is a pure function of (config, seed).  run_campaign parallelizes
// over samples with OpenMP when available and cfg.threads != 1;
// run_campaign_serial is the reference implementation the tests compare
// against.
CampaignReport run_campaign(const CampaignConfig& cfg);
CampaignReport run_campaign_serial(const CampaignConfig& cfg);

nlohmann::json report_to_json(const CampaignReport& r);

// One CSV row per check: check,tested,premise_not_met,passed,refuted,resource_capped.
std::string report_csv(const CampaignReport& r);

// Writes the JSON report, plus a CSV summary when csv_path is nonempty.
void emit_report(const CampaignReport& r, const std::string& json_path,
                 const std::string& csv_path = "");

// 0 when nothing was refuted, 1 otherwise.
int report_exit_code(const CampaignReport& r);

} // namespace peel

#endif
