#include "peel/campaign.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "peel/destroy.hpp"
#include "peel/io.hpp"
#include "peel/rng.hpp"
#include "peel/version.hpp"

namespace peel {

const char* check_name(CheckKind k)
{
    switch (k) {
    case CheckKind::Hajnal: return "hajnal";
    case CheckKind::Lemma2: return "lemma2";
    case CheckKind::Kostochka: return "kostochka";
    case CheckKind::MainLemma: return "main_lemma";
    case CheckKind::Haxell: return "haxell";
    case CheckKind::TheoremD: return "theorem_d";
    case CheckKind::MolloyReed: return "molloy_reed";
    case CheckKind::CapraraRizzi: return "caprara_rizzi";
    case CheckKind::LineGraphReed: return "line_graph_reed";
    }
    return "?";
}

static const CheckKind kAllChecks[] = {
    CheckKind::Hajnal,     CheckKind::Lemma2,       CheckKind::Kostochka,
    CheckKind::MainLemma,  CheckKind::Haxell,       CheckKind::TheoremD,
    CheckKind::MolloyReed, CheckKind::CapraraRizzi, CheckKind::LineGraphReed,
};

CheckKind check_from_name(const std::string& name)
{
    for (CheckKind k : kAllChecks)
        if (name == check_name(k))
            return k;
    throw ConfigError("unknown check '" + name + "'");
}

nlohmann::json CampaignConfig::to_json() const
{
    nlohmann::json gen_j{{"kind", gen.kind}};
    if (gen.kind == "er") {
        gen_j["n"] = {gen.n.lo, gen.n.hi};
        gen_j["p"] = {gen.p.lo, gen.p.hi};
    } else {
        gen_j["k"] = {gen.k.lo, gen.k.hi};
        gen_j["t"] = {gen.t.lo, gen.t.hi};
        gen_j["q"] = {gen.q.lo, gen.q.hi};
    }
    nlohmann::json checks_j = nlohmann::json::array();
    for (CheckKind k : checks)
        checks_j.push_back(check_name(k));
    return {{"generator", gen_j},
            {"multigraph", {{"n", {mg.n.lo, mg.n.hi}}, {"m", {mg.m.lo, mg.m.hi}}}},
            {"samples", samples},
            {"seed", seed},
            {"checks", checks_j},
            {"caps",
             {{"max_cliques", caps.max_cliques},
              {"chi_star_n", caps.chi_star_n},
              {"edge_color_m", caps.edge_color_m}}},
            {"hajnal_subfamilies", hajnal_subfamilies},
            {"threads", threads},
            {"out", out_path}};
}

CampaignConfig default_config()
{
    CampaignConfig cfg;
    cfg.checks.assign(std::begin(kAllChecks), std::end(kAllChecks));
    return cfg;
}

namespace {

void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> known,
                         const std::string& where)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            ok = ok || it.key() == k;
        if (!ok)
            throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
}

IntRange int_range(const nlohmann::json& j, const std::string& key)
{
    IntRange r;
    if (j.is_number_integer()) {
        r.lo = r.hi = j.get<int>();
    } else if (j.is_array() && j.size() == 2) {
        r.lo = j[0].get<int>();
        r.hi = j[1].get<int>();
    } else {
        throw ConfigError("'" + key + "' must be an integer or a [lo, hi] pair");
    }
    if (r.lo > r.hi)
        throw ConfigError("'" + key + "' range has lo > hi");
    return r;
}

RealRange real_range(const nlohmann::json& j, const std::string& key)
{
    RealRange r;
    if (j.is_number()) {
        r.lo = r.hi = j.get<double>();
    } else if (j.is_array() && j.size() == 2) {
        r.lo = j[0].get<double>();
        r.hi = j[1].get<double>();
    } else {
        throw ConfigError("'" + key + "' must be a number or a [lo, hi] pair");
    }
    if (r.lo > r.hi)
        throw ConfigError("'" + key + "' range has lo > hi");
    return r;
}

void check_probability(const RealRange& r, const std::string& key)
{
    if (r.lo < 0.0 || r.hi > 1.0)
        throw ConfigError("'" + key + "' must stay within [0, 1]");
}

} // namespace

CampaignConfig parse_config(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

CampaignConfig parse_config(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ConfigError("config must be a JSON object");
    reject_unknown_keys(j,
                        {"generator", "multigraph", "samples", "seed", "checks", "caps",
                         "hajnal_subfamilies", "threads", "out"},
                        "config");

    CampaignConfig cfg = default_config();

    if (j.contains("generator")) {
        const auto& g = j.at("generator");
        reject_unknown_keys(g, {"kind", "n", "p", "k", "t", "q"}, "generator");
        cfg.gen.kind = g.value("kind", cfg.gen.kind);
        if (cfg.gen.kind != "er" && cfg.gen.kind != "hypothesis")
            throw ConfigError("generator kind must be 'er' or 'hypothesis'");
        if (g.contains("n"))
            cfg.gen.n = int_range(g.at("n"), "n");
        if (g.contains("p"))
            cfg.gen.p = real_range(g.at("p"), "p");
        if (g.contains("k"))
            cfg.gen.k = int_range(g.at("k"), "k");
        if (g.contains("t"))
            cfg.gen.t = int_range(g.at("t"), "t");
        if (g.contains("q"))
            cfg.gen.q = real_range(g.at("q"), "q");
        if (cfg.gen.n.lo < 0 || cfg.gen.n.hi > kMaxVertices)
            throw ConfigError("'n' must stay within 0.." + std::to_string(kMaxVertices));
        if (cfg.gen.k.lo < 1 || cfg.gen.t.lo < 1)
            throw ConfigError("'k' and 't' must be at least 1");
        if (static_cast<long>(cfg.gen.k.hi) * cfg.gen.t.hi > kMaxVertices)
            throw ConfigError("'k'*'t' may not exceed " + std::to_string(kMaxVertices));
        check_probability(cfg.gen.p, "p");
        check_probability(cfg.gen.q, "q");
    }
    if (j.contains("multigraph")) {
        const auto& m = j.at("multigraph");
        reject_unknown_keys(m, {"n", "m"}, "multigraph");
        if (m.contains("n"))
            cfg.mg.n = int_range(m.at("n"), "multigraph.n");
        if (m.contains("m"))
            cfg.mg.m = int_range(m.at("m"), "multigraph.m");
        if (cfg.mg.n.lo < 2)
            throw ConfigError("'multigraph.n' must be at least 2");
        if (cfg.mg.m.lo < 0)
            throw ConfigError("'multigraph.m' must be nonnegative");
    }
    if (j.contains("samples")) {
        cfg.samples = j.at("samples").get<int>();
        if (cfg.samples < 1)
            throw ConfigError("'samples' must be at least 1");
    }
    if (j.contains("seed"))
        cfg.seed = j.at("seed").get<uint64_t>();
    if (j.contains("checks")) {
        cfg.checks.clear();
        for (const auto& name : j.at("checks"))
            cfg.checks.push_back(check_from_name(name.get<std::string>()));
    }
    if (j.contains("caps")) {
        const auto& c = j.at("caps");
        reject_unknown_keys(c, {"max_cliques", "chi_star_n", "edge_color_m"}, "caps");
        cfg.caps.max_cliques = c.value("max_cliques", cfg.caps.max_cliques);
        cfg.caps.chi_star_n = c.value("chi_star_n", cfg.caps.chi_star_n);
        cfg.caps.edge_color_m = c.value("edge_color_m", cfg.caps.edge_color_m);
        if (cfg.caps.max_cliques < 1 || cfg.caps.chi_star_n < 0 || cfg.caps.edge_color_m < 0)
            throw ConfigError("caps must be positive");
    }
    if (j.contains("hajnal_subfamilies")) {
        cfg.hajnal_subfamilies = j.at("hajnal_subfamilies").get<int>();
        if (cfg.hajnal_subfamilies < 1)
            throw ConfigError("'hajnal_subfamilies' must be at least 1");
    }
    if (j.contains("threads")) {
        cfg.threads = j.at("threads").get<int>();
        if (cfg.threads < 0)
            throw ConfigError("'threads' must be nonnegative");
    }
    if (j.contains("out"))
        cfg.out_path = j.at("out").get<std::string>();
    return cfg;
}

namespace {

enum class Outcome { Passed, PremiseNotMet, Refuted, ResourceCapped };

struct CheckResult {
    Outcome outcome = Outcome::Passed;
    nlohmann::json refutation; // null unless refuted
};

struct SampleOutcomes {
    std::vector<CheckResult> results; // parallel to cfg.checks
    std::string hard_error;           // nonempty aborts the campaign
};

// Stream-splitting salts (arbitrary odd constants, fixed forever).
constexpr uint64_t kMultigraphSalt = 0xA3EC647659359ACDull;
constexpr uint64_t kHajnalSalt = 0x5851F42D4C957F2Dull;

// i-th output of SplitMix64 seeded with `seed`, computed directly.
uint64_t sample_seed(uint64_t seed, int i)
{
    return SplitMix64::mix(seed + (static_cast<uint64_t>(i) + 1) * 0x9E3779B97F4A7C15ull);
}

Graph generate_sample_graph(const CampaignConfig& cfg, Xoshiro256& rng)
{
    if (cfg.gen.kind == "er") {
        int n = rng.range(cfg.gen.n.lo, cfg.gen.n.hi);
        double p = rng.real_range(cfg.gen.p.lo, cfg.gen.p.hi);
        return gen_er(n, p, rng.next());
    }
    int k = rng.range(cfg.gen.k.lo, cfg.gen.k.hi);
    int t = rng.range(cfg.gen.t.lo, cfg.gen.t.hi);
    double q = rng.real_range(cfg.gen.q.lo, cfg.gen.q.hi);
    return gen_hypothesis(k, t, q, rng.next());
}

Multigraph generate_sample_multigraph(const CampaignConfig& cfg, uint64_t mg_seed)
{
    Xoshiro256 rng(mg_seed);
    int n = rng.range(cfg.mg.n.lo, cfg.mg.n.hi);
    int m = rng.range(cfg.mg.m.lo, cfg.mg.m.hi);
    return gen_multigraph(n, m, rng.next());
}

nlohmann::json message_record(const char* lemma, const nlohmann::json& witness,
                              const std::string& message)
{
    return {{"lemma", lemma},
            {"premise_holds", true},
            {"status", "REFUTED"},
            {"witness", witness},
            {"numbers", {{"message", message}}}};
}

CheckResult run_hajnal(const CampaignConfig& cfg, const Graph& g, uint64_t seed)
{
    CliqueFamily fam;
    try {
        fam = max_cliques(g, cfg.caps.max_cliques);
    } catch (const ResourceError&) {
        return {Outcome::ResourceCapped, nullptr};
    }
    Xoshiro256 rng(SplitMix64::mix(seed ^ kHajnalSalt));
    for (int trial = 0; trial < cfg.hajnal_subfamilies; ++trial) {
        std::vector<Bitset> sub;
        for (int attempt = 0; attempt < 64 && sub.empty(); ++attempt)
            for (const auto& q : fam.cliques)
                if (rng.next() & 1)
                    sub.push_back(q);
        if (sub.empty())
            sub = fam.cliques;
        HajnalReport rep = hajnal_check(g, sub);
        if (!rep.holds)
            return {Outcome::Refuted, rep.to_json(graph_to_json(g))};
    }
    return {Outcome::Passed, nullptr};
}

CheckResult run_lemma2(const Graph& g)
{
    try {
        Lemma2Report rep = transitivity_check(g);
        if (rep.status != CheckStatus::Passed)
            return {Outcome::Refuted, rep.to_json(graph_to_json(g))};
        return {Outcome::Passed, nullptr};
    } catch (const PremiseNotMetError&) {
        return {Outcome::PremiseNotMet, nullptr};
    } catch (const ResourceError&) {
        return {Outcome::ResourceCapped, nullptr};
    }
}

CheckResult run_kostochka(const Graph& g)
{
    try {
        KostochkaReport rep = kostochka_check(g);
        if (rep.status != CheckStatus::Passed)
            return {Outcome::Refuted, rep.to_json(graph_to_json(g))};
        return {Outcome::Passed, nullptr};
    } catch (const PremiseNotMetError&) {
        return {Outcome::PremiseNotMet, nullptr};
    } catch (const ResourceError&) {
        return {Outcome::ResourceCapped, nullptr};
    }
}

CheckResult run_main_lemma(const Graph& g)
{
    try {
        DestroyTrace trace;
        DestructionCertificate cert = destroy_clique(g, &trace);
        DestructionVerification ver = verify_destruction(g, cert);
        if (!ver.pass)
            return {Outcome::Refuted,
                    message_record("main_lemma", graph_to_json(g),
                                   "verify_destruction failed: " + ver.failure)};
        if (cert.omega_after != cert.omega_before - 1)
            return {Outcome::Refuted,
                    message_record("main_lemma", graph_to_json(g),
                                   "clique number dropped by more than one")};
        if (!trace.chain.all())
            return {Outcome::Refuted,
                    {{"lemma", "main_lemma"},
                     {"premise_holds", true},
                     {"status", "REFUTED"},
                     {"witness", graph_to_json(g)},
                     {"numbers", trace.chain.numbers()}}};
        return {Outcome::Passed, nullptr};
    } catch (const HypothesisError&) {
        return {Outcome::PremiseNotMet, nullptr};
    } catch (const ResourceError&) {
        return {Outcome::ResourceCapped, nullptr};
    } catch (const RefutationError& e) {
        return {Outcome::Refuted,
                message_record("main_lemma", nlohmann::json::parse(e.witness_json), e.what())};
    }
}

CheckResult run_haxell(const Graph& g)
{
    try {
        int omega = clique_number(g);
        int delta = g.max_degree();
        if (4L * omega < 3L * (delta + 1))
            return {Outcome::PremiseNotMet, nullptr};
        CliqueFamily fam = max_cliques(g);
        IntersectionGraph x = intersection_graph(fam);
        std::vector<CliqueCore> cores = component_cores(fam, x);
        TransversalInstance inst = build_aux_graph(g, cores);
        HaxellPrecondition pre = haxell_precondition(inst);
        if (!pre.satisfied)
            return {Outcome::Refuted,
                    message_record("haxell", graph_to_json(g),
                                   "pipeline instance misses the part-size condition")};
        std::optional<Transversal> tr = find_transversal(inst);
        if (!tr || !validate_transversal(inst, *tr))
            return {Outcome::Refuted,
                    message_record("haxell", graph_to_json(g),
                                   "no independent transversal on a satisfying instance")};
        return {Outcome::Passed, nullptr};
    } catch (const ResourceError&) {
        return {Outcome::ResourceCapped, nullptr};
    }
}

CheckResult run_theorem_d(const Graph& g)
{
    try {
        ColoringCertificate cert = theorem_d_color(g, exact_chi_base);
        int omega = clique_number(g);
        int delta = g.max_degree();
        if (!verify_coloring(g, cert) || cert.color_count > reed_bound(omega, delta))
            return {Outcome::Refuted,
                    message_record("theorem_d", graph_to_json(g),
                                   "coloring failed independent verification")};
        return {Outcome::Passed, nullptr};
    } catch (const ResourceError&) {
        return {Outcome::ResourceCapped, nullptr};
    } catch (const OracleContractError& e) {
        return {Outcome::Refuted,
                message_record("theorem_d", nlohmann::json::parse(e.witness_json), e.what())};
    } catch (const RefutationError& e) {
        return {Outcome::Refuted,
                message_record("theorem_d", nlohmann::json::parse(e.witness_json), e.what())};
    }
}

CheckResult run_molloy_reed(const CampaignConfig& cfg, const Graph& g)
{
    if (g.n > cfg.caps.chi_star_n)
        return {Outcome::ResourceCapped, nullptr};
    try {
        RationalValue chi_star = fractional_chromatic(g, cfg.caps.chi_star_n);
        int omega = clique_number(g);
        int delta = g.max_degree();
        if (!molloy_reed_holds(omega, delta, chi_star))
            return {Outcome::Refuted,
                    {{"lemma", "molloy_reed"},
                     {"premise_holds", true},
                     {"status", "REFUTED"},
                     {"witness", graph_to_json(g)},
                     {"numbers",
                      {{"omega", omega}, {"delta", delta}, {"chi_star", chi_star.to_json()}}}}};
        return {Outcome::Passed, nullptr};
    } catch (const ResourceError&) {
        return {Outcome::ResourceCapped, nullptr};
    }
}

CheckResult run_caprara_rizzi(const CampaignConfig& cfg, const Multigraph& h)
{
    try {
        CapraraRizziReport rep = caprara_rizzi_check(h, cfg.caps.edge_color_m, cfg.caps.chi_star_n);
        if (!rep.holds)
            return {Outcome::Refuted, rep.to_json(multigraph_to_json(h))};
        return {Outcome::Passed, nullptr};
    } catch (const ResourceError&) {
        return {Outcome::ResourceCapped, nullptr};
    }
}

CheckResult run_line_graph_reed(const CampaignConfig& cfg, const Multigraph& h)
{
    try {
        LineGraphReedReport rep = verify_line_graph_reed(h, cfg.caps.edge_color_m);
        if (!rep.holds)
            return {Outcome::Refuted, rep.to_json(multigraph_to_json(h))};
        return {Outcome::Passed, nullptr};
    } catch (const ResourceError&) {
        return {Outcome::ResourceCapped, nullptr};
    }
}

bool needs_multigraph(CheckKind k)
{
    return k == CheckKind::CapraraRizzi || k == CheckKind::LineGraphReed;
}

bool needs_graph(CheckKind k)
{
    return !needs_multigraph(k);
}

SampleOutcomes evaluate_sample(const CampaignConfig& cfg, int index)
{
    SampleOutcomes out;
    out.results.resize(cfg.checks.size());
    try {
        uint64_t seed = sample_seed(cfg.seed, index);
        bool want_graph = false, want_mg = false;
        for (CheckKind k : cfg.checks) {
            want_graph = want_graph || needs_graph(k);
            want_mg = want_mg || needs_multigraph(k);
        }

        Graph g;
        bool graph_ok = false;
        if (want_graph) {
            Xoshiro256 rng(seed);
            try {
                g = generate_sample_graph(cfg, rng);
                graph_ok = true;
            } catch (const GenerationError&) {
                // counted as a cap: the sample never produced a graph
            }
        }
        Multigraph h;
        if (want_mg)
            h = generate_sample_multigraph(cfg, SplitMix64::mix(seed ^ kMultigraphSalt));

        for (std::size_t ci = 0; ci < cfg.checks.size(); ++ci) {
            CheckKind k = cfg.checks[ci];
            CheckResult res;
            if (needs_graph(k) && !graph_ok) {
                res = {Outcome::ResourceCapped, nullptr};
            } else {
                switch (k) {
                case CheckKind::Hajnal: res = run_hajnal(cfg, g, seed); break;
                case CheckKind::Lemma2: res = run_lemma2(g); break;
                case CheckKind::Kostochka: res = run_kostochka(g); break;
                case CheckKind::MainLemma: res = run_main_lemma(g); break;
                case CheckKind::Haxell: res = run_haxell(g); break;
                case CheckKind::TheoremD: res = run_theorem_d(g); break;
                case CheckKind::MolloyReed: res = run_molloy_reed(cfg, g); break;
                case CheckKind::CapraraRizzi: res = run_caprara_rizzi(cfg, h); break;
                case CheckKind::LineGraphReed: res = run_line_graph_reed(cfg, h); break;
                }
            }
            if (res.outcome == Outcome::Refuted) {
                res.refutation["sample"] = index;
                res.refutation["check"] = check_name(k);
            }
            out.results[ci] = std::move(res);
        }
    } catch (const std::exception& e) {
        out.hard_error = e.what();
    }
    return out;
}

CampaignReport merge_outcomes(const CampaignConfig& cfg, std::vector<SampleOutcomes> samples)
{
    CampaignReport report;
    report.tool_version = kVersion;
    report.config_echo = cfg.to_json();
    for (CheckKind k : cfg.checks)
        report.counters[check_name(k)]; // materialize selected checks, even if all-zero
    for (auto& sample : samples) {
        if (!sample.hard_error.empty())
            throw InternalError("campaign sample failed: " + sample.hard_error);
        for (std::size_t ci = 0; ci < cfg.checks.size(); ++ci) {
            CheckCounters& c = report.counters[check_name(cfg.checks[ci])];
            CheckResult& res = sample.results[ci];
            switch (res.outcome) {
            case Outcome::Passed:
                ++c.tested;
                ++c.passed;
                break;
            case Outcome::PremiseNotMet:
                ++c.tested;
                ++c.premise_not_met;
                break;
            case Outcome::Refuted:
                ++c.tested;
                ++c.refuted;
                report.refutations.push_back(std::move(res.refutation));
                break;
            case Outcome::ResourceCapped:
                ++c.resource_capped;
                break;
            }
        }
    }
    return report;
}

} // namespace

long CampaignReport::total_refuted() const
{
    long total = 0;
    for (const auto& [name, c] : counters)
        total += c.refuted;
    return total;
}

CampaignReport run_campaign_serial(const CampaignConfig& cfg)
{
    auto start = std::chrono::steady_clock::now();
    std::vector<SampleOutcomes> samples(static_cast<std::size_t>(cfg.samples));
    for (int i = 0; i < cfg.samples; ++i)
        samples[static_cast<std::size_t>(i)] = evaluate_sample(cfg, i);
    CampaignReport report = merge_outcomes(cfg, std::move(samples));
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
}

CampaignReport run_campaign(const CampaignConfig& cfg)
{
    auto start = std::chrono::steady_clock::now();
    std::vector<SampleOutcomes> samples(static_cast<std::size_t>(cfg.samples));
#ifdef _OPENMP
    int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < cfg.samples; ++i)
        samples[static_cast<std::size_t>(i)] = evaluate_sample(cfg, i);
#else
    for (int i = 0; i < cfg.samples; ++i)
        samples[static_cast<std::size_t>(i)] = evaluate_sample(cfg, i);
#endif
    CampaignReport report = merge_outcomes(cfg, std::move(samples));
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
}

nlohmann::json report_to_json(const CampaignReport& r)
{
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, c] : r.counters)
        checks[name] = {{"tested", c.tested},
                        {"premise_not_met", c.premise_not_met},
                        {"passed", c.passed},
                        {"refuted", c.refuted},
                        {"resource_capped", c.resource_capped}};
    return {{"tool", "peel"},
            {"tool_version", r.tool_version},
            {"config", r.config_echo},
            {"checks", checks},
            {"refutations", r.refutations},
            {"wall_time_ms", r.wall_time_ms}};
}

std::string report_csv(const CampaignReport& r)
{
    std::ostringstream out;
    out << "check,tested,premise_not_met,passed,refuted,resource_capped\n";
    for (const auto& [name, c] : r.counters)
        out << name << "," << c.tested << "," << c.premise_not_met << "," << c.passed << ","
            << c.refuted << "," << c.resource_capped << "\n";
    return out.str();
}

void emit_report(const CampaignReport& r, const std::string& json_path,
                 const std::string& csv_path)
{
    std::ofstream out(json_path);
    if (!out)
        throw Error("cannot write " + json_path);
    out << report_to_json(r).dump(2) << "\n";
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv)
            throw Error("cannot write " + csv_path);
        csv << report_csv(r);
    }
}

int report_exit_code(const CampaignReport& r)
{
    return r.total_refuted() == 0 ? 0 : 1;
}

} // namespace peel
