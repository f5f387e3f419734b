#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xva/adjustments.hpp"
#include "xva/margin_ledger.hpp"
#include "xva/partition_probability.hpp"
#include "xva/scenario.hpp"

namespace xva {

// Aggregate of the per-path margin-loan audits run alongside the estimators:
// every simulated path is checked in four variants (loan on B's collateral
// and the mirrored loan on A's, each in unilateral and bilateral mode).
struct IdentitySummary {
    std::uint64_t paths_checked = 0;
    double max_residual = 0.0;
    double relative_tolerance = kIdentityRelTol;
    bool passed = false;
};

// Credit charges priced off default legs (CDS hazards) next to the same
// charges priced off funding legs (asset-swap hazards). bva_minus_fbva is
// the exact difference of the two paired estimates.
struct BasisBlock {
    double bva_cds = 0.0;
    double fbva_asw = 0.0;
    double bva_minus_fbva = 0.0;
};

struct RunOptions {
    unsigned workers = 1;  // 0 resolves to the hardware concurrency
    // When set, every path's bilateral collateral-loan ledger is written
    // here in path order after the run.
    std::ostream* ledger_sink = nullptr;
};

struct XvaReport {
    std::uint64_t n_paths = 0;
    std::uint64_t seed = 0;
    double rho = 0.0;

    AdjustmentResult bcva;
    AdjustmentResult bdva;
    AdjustmentResult bva;
    AdjustmentResult fcva;
    AdjustmentResult fbcva;
    AdjustmentResult fbdva;
    AdjustmentResult fbva;

    FairSpreadResult fair_spread_a;
    FairSpreadResult fair_spread_b;

    BasisBlock basis;
    IdentitySummary identity;
    std::vector<std::string> warnings;
};

// Full valuation pass: one exposure sweep, default times under both spread
// sources with common random numbers, all seven adjustments, both fair
// funding spreads, and the path-level ledger audit.
XvaReport run(const Scenario& scenario, const RunOptions& options = {});

// 0 when the ledger audit passed, 2 otherwise.
int exit_code_for_report(const XvaReport& report);

enum class ReportFormat { Json, Csv, Text };
ReportFormat report_format_from_string(const std::string& name);

// Rendering is a pure function of the report contents, so identical runs
// produce identical bytes regardless of worker count or wall clock.
std::string render_report(const XvaReport& report, ReportFormat format);
void emit_report(const XvaReport& report, ReportFormat format, const std::string& out_path);

// Cross-check of simulated first-to-default frequencies against the
// semi-analytic bucket probabilities, per spread source and period.
struct OracleCheckRow {
    SpreadSource source = SpreadSource::Cds;
    std::size_t period = 0;
    FirstToDefault who = FirstToDefault::AFirst;
    double mc_frequency = 0.0;
    double mc_std_error = 0.0;
    double quadrature = 0.0;
    double deviation_se = 0.0;  // (mc - quadrature) / se, 0 when se is 0 and they agree
};

std::vector<OracleCheckRow> oracle_check(const Scenario& scenario, unsigned workers = 1);
std::string render_oracle_check(const std::vector<OracleCheckRow>& rows);

}  // namespace xva
