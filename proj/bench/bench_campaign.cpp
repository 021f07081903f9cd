// Compares the serial reference campaign runner against the OpenMP one on
// the same config and confirms their reports agree.
#include <chrono>
#include <iostream>

#include "peel/campaign.hpp"

using namespace peel;

namespace {

long run_ms(CampaignReport (*runner)(const CampaignConfig&), const CampaignConfig& cfg,
            CampaignReport& out)
{
    auto start = std::chrono::steady_clock::now();
    out = runner(cfg);
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

} // namespace

int main(int argc, char** argv)
{
    CampaignConfig cfg = default_config();
    cfg.samples = argc > 1 ? std::atoi(argv[1]) : 400;
    cfg.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;

    std::cout << "samples=" << cfg.samples << " seed=" << cfg.seed << "\n";

    CampaignReport serial, parallel;
    long t_serial = run_ms(run_campaign_serial, cfg, serial);
    long t_parallel = run_ms(run_campaign, cfg, parallel);

    serial.wall_time_ms = parallel.wall_time_ms = 0;
    bool match = report_to_json(serial) == report_to_json(parallel);

    std::cout << "serial   " << t_serial << " ms\n";
    std::cout << "parallel " << t_parallel << " ms\n";
    if (t_parallel > 0)
        std::cout << "speedup  " << static_cast<double>(t_serial) / t_parallel << "x\n";
    std::cout << "reports " << (match ? "match" : "DIFFER") << "\n";
    return match ? 0 : 1;
}
