#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "peel/campaign.hpp"
#include "peel/destroy.hpp"
#include "peel/io.hpp"
#include "peel/version.hpp"

namespace {

// PEEL_LOG=quiet silences warnings; anything else keeps them.
bool warnings_enabled()
{
    const char* lvl = std::getenv("PEEL_LOG");
    return lvl == nullptr || std::string(lvl) != "quiet";
}

peel::Graph load_graph_cli(const std::string& path)
{
    std::vector<std::string> warnings;
    peel::Graph g = peel::load_graph(path, &warnings);
    if (warnings_enabled())
        for (const auto& w : warnings)
            std::cerr << "warning: " << path << ": " << w << "\n";
    return g;
}

void write_json_output(const nlohmann::json& j, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw peel::Error("cannot write " + out_path);
    out << j.dump(2) << "\n";
}

int dispatch(CLI::App& app)
{
    using namespace peel;

    if (auto* cmd = app.get_subcommand("gen"); cmd->parsed()) {
        std::string kind = cmd->get_option("--kind")->as<std::string>();
        uint64_t seed = cmd->get_option("--seed")->as<uint64_t>();
        std::string out = cmd->get_option("--out")->as<std::string>();
        Graph g;
        if (kind == "er") {
            g = gen_er(cmd->get_option("--n")->as<int>(), cmd->get_option("--p")->as<double>(),
                       seed);
        } else if (kind == "hypothesis") {
            g = gen_hypothesis(cmd->get_option("--k")->as<int>(), cmd->get_option("--t")->as<int>(),
                               cmd->get_option("--q")->as<double>(), seed);
        } else {
            throw ConfigError("--kind must be er or hypothesis");
        }
        if (out.empty())
            write_dimacs(g, std::cout);
        else
            save_graph(g, out);
        return 0;
    }

    if (auto* cmd = app.get_subcommand("destroy-clique"); cmd->parsed()) {
        Graph g = load_graph_cli(cmd->get_option("--in")->as<std::string>());
        DestructionCertificate cert = destroy_clique(g);
        write_json_output(certificate_to_json(cert), cmd->get_option("--out")->as<std::string>());
        return 0;
    }

    if (auto* cmd = app.get_subcommand("color"); cmd->parsed()) {
        Graph g = load_graph_cli(cmd->get_option("--in")->as<std::string>());
        ColoringCertificate cert;
        if (cmd->count("--theorem-d") > 0)
            cert = theorem_d_color(g, exact_chi_base);
        else
            cert = chromatic_number(g);
        write_json_output(cert.to_json(), cmd->get_option("--out")->as<std::string>());
        return 0;
    }

    if (auto* cmd = app.get_subcommand("chi-star"); cmd->parsed()) {
        Graph g = load_graph_cli(cmd->get_option("--in")->as<std::string>());
        RationalValue v = fractional_chromatic(g, cmd->get_option("--cap")->as<int>());
        write_json_output(v.to_json(), cmd->get_option("--out")->as<std::string>());
        return 0;
    }

    if (auto* cmd = app.get_subcommand("edge-color"); cmd->parsed()) {
        Multigraph h = load_multigraph(cmd->get_option("--in")->as<std::string>());
        int chi_prime = chromatic_index(h);
        nlohmann::json j{{"chromatic_index", chi_prime},
                         {"delta", h.max_degree()},
                         {"edges", h.edges.size()}};
        write_json_output(j, cmd->get_option("--out")->as<std::string>());
        return 0;
    }

    if (auto* cmd = app.get_subcommand("check-bounds"); cmd->parsed()) {
        Graph g = load_graph_cli(cmd->get_option("--in")->as<std::string>());
        BoundReport rep = reed_bound_report(g);
        write_json_output(rep.to_json(), cmd->get_option("--out")->as<std::string>());
        return 0;
    }

    if (auto* cmd = app.get_subcommand("verify"); cmd->parsed()) {
        std::string cfg_path = cmd->get_option("--config")->as<std::string>();
        CampaignConfig cfg;
        if (cfg_path.empty()) {
            cfg = default_config();
        } else {
            std::ifstream in(cfg_path);
            if (!in)
                throw ConfigError("cannot open config " + cfg_path);
            std::stringstream buf;
            buf << in.rdbuf();
            cfg = parse_config(buf.str());
        }
        if (cmd->count("--seed"))
            cfg.seed = cmd->get_option("--seed")->as<uint64_t>();
        if (cmd->count("--out"))
            cfg.out_path = cmd->get_option("--out")->as<std::string>();
        if (cmd->count("--threads"))
            cfg.threads = cmd->get_option("--threads")->as<int>();
        bool serial = cmd->count("--serial") > 0;

        CampaignReport report = serial ? run_campaign_serial(cfg) : run_campaign(cfg);
        std::string csv = cmd->get_option("--csv")->as<std::string>();
        if (!cfg.out_path.empty())
            emit_report(report, cfg.out_path, csv);
        else
            std::cout << report_to_json(report).dump(2) << "\n";
        for (const auto& [name, c] : report.counters)
            std::cerr << name << ": tested=" << c.tested << " passed=" << c.passed
                      << " premise_not_met=" << c.premise_not_met << " refuted=" << c.refuted
                      << " resource_capped=" << c.resource_capped << "\n";
        return report_exit_code(report);
    }

    std::cerr << app.help() << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact clique-destruction and coloring-bound toolkit"};
    app.set_version_flag("--version", std::string("peel ") + peel::kVersion);
    app.require_subcommand(0, 1);

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--kind", "er or hypothesis")->required();
    gen->add_option("--n", "vertex count (er)")->default_val(10);
    gen->add_option("--p", "edge probability (er)")->default_val(0.5);
    gen->add_option("--k", "clique size (hypothesis)")->default_val(4);
    gen->add_option("--t", "cluster count (hypothesis)")->default_val(3);
    gen->add_option("--q", "noise probability (hypothesis)")->default_val(0.1);
    gen->add_option("--seed", "generator seed")->default_val(1);
    gen->add_option("--out", "output path (.col or .json); stdout if absent")->default_val("");

    auto* destroy = app.add_subcommand("destroy-clique", "find an independent set lowering omega");
    destroy->add_option("--in", "input graph (.col or .json)")->required();
    destroy->add_option("--out", "certificate path; stdout if absent")->default_val("");

    auto* color = app.add_subcommand("color", "exact chromatic number with certificate");
    color->add_option("--in", "input graph")->required();
    color->add_option("--out", "certificate path; stdout if absent")->default_val("");
    color->add_flag("--theorem-d", "peel independent sets before the exact base");

    auto* chi_star = app.add_subcommand("chi-star", "exact fractional chromatic number");
    chi_star->add_option("--in", "input graph")->required();
    chi_star->add_option("--out", "output path; stdout if absent")->default_val("");
    chi_star->add_option("--cap", "vertex cap")->default_val(peel::kDefaultChiStarCap);

    auto* edge = app.add_subcommand("edge-color", "chromatic index of a multigraph");
    edge->add_option("--in", "multigraph JSON")->required();
    edge->add_option("--out", "output path; stdout if absent")->default_val("");

    auto* bounds = app.add_subcommand("check-bounds", "evaluate the coloring bounds on a graph");
    bounds->add_option("--in", "input graph")->required();
    bounds->add_option("--out", "output path; stdout if absent")->default_val("");

    auto* verify = app.add_subcommand("verify", "run a randomized verification campaign");
    verify->add_option("--config", "campaign config JSON; defaults if absent")->default_val("");
    verify->add_option("--seed", "override the config seed");
    verify->add_option("--out", "report path; stdout if absent");
    verify->add_option("--csv", "also write a CSV summary here")->default_val("");
    verify->add_option("--threads", "worker threads (0 = all)");
    verify->add_flag("--serial", "use the serial reference runner");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app);
    } catch (const peel::ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const peel::RefutationError& e) {
        std::cerr << "REFUTED: " << e.what() << "\n";
        std::cerr << "witness: " << e.witness_json << "\n";
        return 1;
    } catch (const peel::OracleContractError& e) {
        std::cerr << "oracle contract violation: " << e.what() << "\n";
        return 1;
    } catch (const peel::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const peel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
