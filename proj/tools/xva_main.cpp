#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "xva/errors.hpp"
#include "xva/report.hpp"
#include "xva/scenario.hpp"

namespace {

// Exit codes: 0 clean run, 1 usage or configuration problem, 2 a completed
// run whose ledger audit failed, 3 an oracle check with a simulated
// frequency more than five standard errors from its quadrature value.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAuditFailed = 2;
constexpr int kExitOracleDeviation = 3;

constexpr double kOracleDeviationLimit = 5.0;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bilateral counterparty and funding valuation over a margin grid"};

    std::string scenario_path;
    std::string format_name = "json";
    std::string out_path = "-";
    std::string ledger_path;
    std::uint64_t paths_override = 0;
    std::uint64_t seed_override = 0;
    unsigned workers = 0;
    bool oracle_mode = false;

    app.add_option("--scenario", scenario_path, "scenario JSON file")->required();
    auto* paths_opt =
        app.add_option("--paths", paths_override, "override the scenario's n_paths")
            ->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", seed_override, "override the scenario's seed");
    app.add_option("--format", format_name, "report format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "report destination, '-' for stdout (default)");
    auto* dump_opt =
        app.add_option("--dump-ledgers", ledger_path,
                       "write every path's collateral-loan ledger to this CSV file "
                       "(default ledgers.csv)")
            ->expected(0, 1);
    app.add_flag("--oracle-check", oracle_mode,
                 "compare simulated default-partition frequencies against quadrature and exit");
    app.add_option("--workers", workers, "worker threads, 0 = hardware concurrency (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        xva::Scenario scenario = xva::load_scenario(scenario_path);
        if (paths_opt->count() > 0) scenario.n_paths = paths_override;
        if (seed_opt->count() > 0) scenario.seed = seed_override;

        if (oracle_mode) {
            const std::vector<xva::OracleCheckRow> rows = xva::oracle_check(scenario, workers);
            std::cout << xva::render_oracle_check(rows);
            double worst = 0.0;
            for (const xva::OracleCheckRow& row : rows) {
                worst = std::max(worst, std::fabs(row.deviation_se));
            }
            return worst > kOracleDeviationLimit ? kExitOracleDeviation : kExitOk;
        }

        const xva::ReportFormat format = xva::report_format_from_string(format_name);
        xva::RunOptions options;
        options.workers = workers;
        std::ofstream ledger_file;
        if (dump_opt->count() > 0) {
            if (ledger_path.empty()) ledger_path = "ledgers.csv";
            ledger_file.open(ledger_path, std::ios::binary);
            if (!ledger_file) {
                throw xva::ConfigError("cannot open ledger dump file '" + ledger_path + "'");
            }
            options.ledger_sink = &ledger_file;
        }

        const auto start = std::chrono::steady_clock::now();
        const xva::XvaReport report = xva::run(scenario, options);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        xva::emit_report(report, format, out_path);
        // Wall-clock feedback stays on stderr: serialized reports must be a
        // pure function of the inputs.
        std::fprintf(stderr, "completed %llu paths in %.3f s\n",
                     static_cast<unsigned long long>(report.n_paths), elapsed);
        for (const std::string& warning : report.warnings) {
            std::fprintf(stderr, "warning: %s\n", warning.c_str());
        }
        return xva::exit_code_for_report(report);
    } catch (const xva::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
}
