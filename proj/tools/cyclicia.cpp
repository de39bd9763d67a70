// Command-line front end: verify, solve, simulate, prove and sample over
// cyclic interference alignment scenarios.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cyclicia/report.hpp"
#include "cyclicia/scenario.hpp"

namespace {

int emit(const cyclicia::CommandResult& result, const std::string& format,
         const std::string& out_path) {
    const std::string& body = format == "machine" ? result.machine : result.text;
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << body;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic interference alignment simulator and verifier for the 3-user X-network"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string scheme_override;
    std::string format = "text";
    std::string out_path;
    int n = 5;
    int seed_pki = 0;
    std::uint64_t payload_seed = 0;
    bool payload_seed_set = false;
    int jobs = 1;
    int users = 3;
    int count = 10;
    std::uint64_t rng_seed = 1;

    auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
        if (needs_scenario) {
            cmd->add_option("--scenario", scenario_path, "scenario file (JSON)")->required();
            cmd->add_option("--scheme", scheme_override,
                            "override the scenario scheme (ff|iac|in|combined|none)");
            cmd->add_option("--payload-seed", payload_seed, "override the payload seed")
                ->each([&](const std::string&) { payload_seed_set = true; });
        }
        cmd->add_option("--format", format, "text|machine")
            ->check(CLI::IsMember({"text", "machine"}));
        cmd->add_option("--out", out_path, "write the report to a file");
    };

    auto* verify = app.add_subcommand("verify", "check separability, constraints and decoding");
    add_common(verify, true);

    auto* solve = app.add_subcommand("solve", "derive the allocation vector from the channel");
    add_common(solve, true);
    solve->add_option("--seed-pki", seed_pki, "seed value for the top-most allocation p_ki");

    auto* simulate = app.add_subcommand("simulate", "print the transmit/receive signal table");
    add_common(simulate, true);

    auto* prove = app.add_subcommand("prove", "exhaustively certify perfect-IA infeasibility");
    add_common(prove, false);
    prove->add_option("--n", n, "ring size (guarded to n <= 7)");
    prove->add_option("--jobs", jobs, "parallel workers");
    prove->add_option("--users", users, "3 for the full network, 2 for the sub-network oracle");

    auto* sample = app.add_subcommand("sample", "emit channels passing the scheme constraints");
    add_common(sample, false);
    sample->add_option("--n", n, "ring size");
    sample->add_option("--count", count, "how many channels (<= 0: the full scan set at n <= 5)");
    sample->add_option("--rng-seed", rng_seed, "sampler seed (n > 5)");

    CLI11_PARSE(app, argc, argv);

    try {
        cyclicia::CommandResult result;
        if (app.got_subcommand(verify) || app.got_subcommand(solve) ||
            app.got_subcommand(simulate)) {
            cyclicia::Scenario scenario = cyclicia::load_scenario(scenario_path);
            if (!scheme_override.empty()) {
                const auto parsed = cyclicia::parse_scheme(scheme_override);
                if (!parsed) {
                    std::cerr << "unknown scheme '" << scheme_override << "'\n";
                    return 2;
                }
                scenario.scheme = *parsed;
            }
            if (payload_seed_set) scenario.payload_seed = payload_seed;

            if (app.got_subcommand(verify)) {
                result = cyclicia::run_verify(scenario);
            } else if (app.got_subcommand(solve)) {
                result = cyclicia::run_solve(scenario, seed_pki);
            } else {
                result = cyclicia::run_simulate(scenario);
            }
        } else if (app.got_subcommand(prove)) {
            result = cyclicia::run_prove(n, users, jobs);
        } else {
            result = cyclicia::run_sample(n, count, rng_seed);
        }
        return emit(result, format, out_path);
    } catch (const cyclicia::ScenarioError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
