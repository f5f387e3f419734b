#include "xva/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "xva/default_times.hpp"
#include "xva/errors.hpp"
#include "xva/exposure.hpp"
#include "xva/parallel.hpp"

namespace xva {
namespace {

DefaultScenario swap_roles(const DefaultScenario& s) {
    return DefaultScenario{s.tau_b, s.tau_a, s.path_id};
}

// Audits one path's collateral loan in all four variants. Returns the worst
// residual and whether every variant passed. The mirrored loan funds A's
// side of the mark, so the roles, the recovery rate, and the sign of the
// mark all flip together.
struct PathAudit {
    double max_residual = 0.0;
    bool passed = true;
};

PathAudit audit_path(std::span<const double> row, std::span<const double> mirrored,
                     const DefaultScenario& scenario, const TimeGrid& grid,
                     const DiscountCurve& curve, double recovery_a, double recovery_b) {
    const DefaultScenario swapped = swap_roles(scenario);
    const double lgd_a = 1.0 - recovery_a;
    const double lgd_b = 1.0 - recovery_b;

    PathAudit audit;
    const auto fold = [&audit](const IdentityCheck& check) {
        audit.max_residual = std::max(audit.max_residual, check.residual);
        audit.passed = audit.passed && check.passed;
    };

    const CashflowLedger uni_a = build_unilateral_ledger(row, scenario, grid, curve, recovery_a);
    fold(verify_pathwise_identity(ledger_pv(uni_a, curve), row, scenario, grid, curve, lgd_a,
                                  LoanMode::Unilateral));
    const CashflowLedger bi_a = build_bilateral_ledger(row, scenario, grid, curve, recovery_a);
    fold(verify_pathwise_identity(ledger_pv(bi_a, curve), row, scenario, grid, curve, lgd_a,
                                  LoanMode::Bilateral));
    const CashflowLedger uni_b =
        build_unilateral_ledger(mirrored, swapped, grid, curve, recovery_b);
    fold(verify_pathwise_identity(ledger_pv(uni_b, curve), mirrored, swapped, grid, curve, lgd_b,
                                  LoanMode::Unilateral));
    const CashflowLedger bi_b = build_bilateral_ledger(mirrored, swapped, grid, curve, recovery_b);
    fold(verify_pathwise_identity(ledger_pv(bi_b, curve), mirrored, swapped, grid, curve, lgd_b,
                                  LoanMode::Bilateral));
    return audit;
}

IdentitySummary audit_all_paths(const ExposureMatrix& exposure,
                                std::span<const DefaultScenario> defaults, const TimeGrid& grid,
                                const DiscountCurve& curve, double recovery_a, double recovery_b,
                                unsigned workers) {
    const std::size_t n = exposure.n_paths();
    std::vector<double> residuals(n, 0.0);
    std::vector<unsigned char> ok(n, 1);
    parallel_for(n, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<double> mirrored(grid.nodes());
        for (std::size_t i = begin; i < end; ++i) {
            const std::span<const double> row = exposure.row(i);
            for (std::size_t k = 0; k < mirrored.size(); ++k) mirrored[k] = -row[k];
            const PathAudit audit =
                audit_path(row, mirrored, defaults[i], grid, curve, recovery_a, recovery_b);
            residuals[i] = audit.max_residual;
            ok[i] = audit.passed ? 1 : 0;
        }
    });

    IdentitySummary summary;
    summary.paths_checked = 4 * static_cast<std::uint64_t>(n);
    summary.passed = true;
    for (std::size_t i = 0; i < n; ++i) {
        summary.max_residual = std::max(summary.max_residual, residuals[i]);
        summary.passed = summary.passed && ok[i] != 0;
    }
    return summary;
}

void dump_ledgers(std::ostream& os, const ExposureMatrix& exposure,
                  std::span<const DefaultScenario> defaults, const TimeGrid& grid,
                  const DiscountCurve& curve, double recovery_a) {
    write_ledger_header(os);
    for (std::size_t i = 0; i < exposure.n_paths(); ++i) {
        const CashflowLedger ledger =
            build_bilateral_ledger(exposure.row(i), defaults[i], grid, curve, recovery_a);
        write_ledger_rows(os, ledger);
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::ordered_json adjustment_json(const AdjustmentResult& r) {
    return nlohmann::ordered_json{{"value", r.value}, {"std_error", r.std_error}};
}

nlohmann::ordered_json spread_json(const FairSpreadResult& r) {
    return nlohmann::ordered_json{
        {"party", r.party}, {"spread", r.spread}, {"annuity", r.annuity}};
}

std::string render_json(const XvaReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = "margin-xva-report/1";
    j["n_paths"] = r.n_paths;
    j["seed"] = r.seed;
    j["rho"] = r.rho;
    j["adjustments"] = nlohmann::ordered_json{
        {"bcva", adjustment_json(r.bcva)},   {"bdva", adjustment_json(r.bdva)},
        {"bva", adjustment_json(r.bva)},     {"fcva", adjustment_json(r.fcva)},
        {"fbcva", adjustment_json(r.fbcva)}, {"fbdva", adjustment_json(r.fbdva)},
        {"fbva", adjustment_json(r.fbva)},
    };
    j["fair_spreads"] = nlohmann::ordered_json{{"party_a", spread_json(r.fair_spread_a)},
                                               {"party_b", spread_json(r.fair_spread_b)}};
    j["funding_basis"] = nlohmann::ordered_json{{"bva_cds", r.basis.bva_cds},
                                                {"fbva_asw", r.basis.fbva_asw},
                                                {"bva_minus_fbva", r.basis.bva_minus_fbva}};
    j["ledger_identity"] =
        nlohmann::ordered_json{{"paths_checked", r.identity.paths_checked},
                               {"max_residual", r.identity.max_residual},
                               {"relative_tolerance", r.identity.relative_tolerance},
                               {"passed", r.identity.passed}};
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

void csv_row(std::ostringstream& os, const char* section, const char* metric, double value) {
    os << section << ',' << metric << ',' << format_double(value) << ",\n";
}

void csv_row(std::ostringstream& os, const char* section, const char* metric, double value,
             double std_error) {
    os << section << ',' << metric << ',' << format_double(value) << ','
       << format_double(std_error) << '\n';
}

std::string render_csv(const XvaReport& r) {
    std::ostringstream os;
    os << "section,metric,value,std_error\n";
    csv_row(os, "run", "n_paths", static_cast<double>(r.n_paths));
    csv_row(os, "run", "seed", static_cast<double>(r.seed));
    csv_row(os, "run", "rho", r.rho);
    const AdjustmentResult* all[] = {&r.bcva, &r.bdva, &r.bva, &r.fcva, &r.fbcva, &r.fbdva,
                                     &r.fbva};
    for (const AdjustmentResult* a : all) {
        csv_row(os, "adjustment", adjustment_name(a->kind), a->value, a->std_error);
    }
    csv_row(os, "fair_spread", "spread_a", r.fair_spread_a.spread);
    csv_row(os, "fair_spread", "annuity_a", r.fair_spread_a.annuity);
    csv_row(os, "fair_spread", "spread_b", r.fair_spread_b.spread);
    csv_row(os, "fair_spread", "annuity_b", r.fair_spread_b.annuity);
    csv_row(os, "funding_basis", "bva_cds", r.basis.bva_cds);
    csv_row(os, "funding_basis", "fbva_asw", r.basis.fbva_asw);
    csv_row(os, "funding_basis", "bva_minus_fbva", r.basis.bva_minus_fbva);
    csv_row(os, "ledger_identity", "paths_checked",
            static_cast<double>(r.identity.paths_checked));
    csv_row(os, "ledger_identity", "max_residual", r.identity.max_residual);
    csv_row(os, "ledger_identity", "relative_tolerance", r.identity.relative_tolerance);
    csv_row(os, "ledger_identity", "passed", r.identity.passed ? 1.0 : 0.0);
    return os.str();
}

std::string render_text(const XvaReport& r) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof(line), "bilateral margin valuation  (paths %llu, seed %llu, rho %.6g)\n",
                  static_cast<unsigned long long>(r.n_paths),
                  static_cast<unsigned long long>(r.seed), r.rho);
    os << line;
    os << "\n  adjustment        value        std error\n";
    const AdjustmentResult* all[] = {&r.bcva, &r.bdva, &r.bva, &r.fcva, &r.fbcva, &r.fbdva,
                                     &r.fbva};
    for (const AdjustmentResult* a : all) {
        std::snprintf(line, sizeof(line), "  %-10s %12.8f %12.8f\n", adjustment_name(a->kind),
                      a->value, a->std_error);
        os << line;
    }
    std::snprintf(line, sizeof(line),
                  "\n  fair funding spread %s: %.8f  (annuity %.8f)\n", r.fair_spread_a.party.c_str(),
                  r.fair_spread_a.spread, r.fair_spread_a.annuity);
    os << line;
    std::snprintf(line, sizeof(line), "  fair funding spread %s: %.8f  (annuity %.8f)\n",
                  r.fair_spread_b.party.c_str(), r.fair_spread_b.spread, r.fair_spread_b.annuity);
    os << line;
    std::snprintf(line, sizeof(line),
                  "  funding basis: bva %.8f  fbva %.8f  difference %.8f\n", r.basis.bva_cds,
                  r.basis.fbva_asw, r.basis.bva_minus_fbva);
    os << line;
    std::snprintf(line, sizeof(line),
                  "  ledger audit: %llu ledgers, max residual %.3e (rel tol %.0e) -> %s\n",
                  static_cast<unsigned long long>(r.identity.paths_checked),
                  r.identity.max_residual, r.identity.relative_tolerance,
                  r.identity.passed ? "pass" : "FAIL");
    os << line;
    for (const std::string& w : r.warnings) os << "  warning: " << w << "\n";
    return os.str();
}

}  // namespace

XvaReport run(const Scenario& scenario, const RunOptions& options) {
    const TimeGrid grid = scenario.make_grid();
    const DiscountCurve curve = scenario.make_curve();
    const CreditParty party_a = scenario.make_party_a();
    const CreditParty party_b = scenario.make_party_b();
    const auto n = static_cast<std::size_t>(scenario.n_paths);
    const unsigned workers = resolve_workers(options.workers);

    // Same seed and stream for both spread sources: identical Gaussian draws,
    // so the CDS/ASW comparison is a common-random-numbers pairing by
    // construction.
    const std::vector<DefaultScenario> cds_defaults = simulate_default_times(
        party_a, party_b, SpreadSource::Cds, scenario.rho, n, scenario.seed, workers);
    const std::vector<DefaultScenario> asw_defaults = simulate_default_times(
        party_a, party_b, SpreadSource::Asw, scenario.rho, n, scenario.seed, workers);
    const ExposureMatrix exposure =
        simulate_exposure(scenario.product, curve, grid, n, scenario.seed, workers);

    XvaReport report;
    report.n_paths = scenario.n_paths;
    report.seed = scenario.seed;
    report.rho = scenario.rho;
    report.warnings = scenario.warnings;

    report.bcva = bcva(exposure, cds_defaults, curve, party_a.lgd(), workers);
    report.bdva = bdva(exposure, cds_defaults, curve, party_b.lgd(), workers);
    report.bva = bva(report.bcva, report.bdva);
    report.fcva = fcva(exposure, asw_defaults, curve, party_a.lgd(), workers);
    report.fbcva = fbcva(exposure, asw_defaults, curve, party_a.lgd(), workers);
    report.fbdva = fbdva(exposure, asw_defaults, curve, party_b.lgd(), workers);
    report.fbva = fbva(report.fbcva, report.fbdva);

    const double annuity_a =
        funding_annuity(exposure, asw_defaults, curve, Side::B, AnnuityMode::Bilateral, workers);
    const double annuity_b =
        funding_annuity(exposure, asw_defaults, curve, Side::A, AnnuityMode::Bilateral, workers);
    report.fair_spread_a = fair_spread(report.fbcva, annuity_a, party_a.name());
    report.fair_spread_b = fair_spread(report.fbdva, annuity_b, party_b.name());

    report.basis.bva_cds = report.bva.value;
    report.basis.fbva_asw = report.fbva.value;
    report.basis.bva_minus_fbva = report.bva.value - report.fbva.value;

    report.identity = audit_all_paths(exposure, asw_defaults, grid, curve, party_a.recovery(),
                                      party_b.recovery(), workers);

    if (options.ledger_sink != nullptr) {
        dump_ledgers(*options.ledger_sink, exposure, asw_defaults, grid, curve,
                     party_a.recovery());
    }
    return report;
}

int exit_code_for_report(const XvaReport& report) { return report.identity.passed ? 0 : 2; }

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw ConfigError("unknown report format '" + name + "' (expected json, csv, or text)");
}

std::string render_report(const XvaReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return render_json(report);
        case ReportFormat::Csv: return render_csv(report);
        case ReportFormat::Text: return render_text(report);
    }
    throw ConfigError("unknown report format");
}

void emit_report(const XvaReport& report, ReportFormat format, const std::string& out_path) {
    const std::string body = render_report(report, format);
    if (out_path == "-") {
        std::cout << body;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
    out << body;
    if (!out) throw ConfigError("failed writing output file '" + out_path + "'");
}

std::vector<OracleCheckRow> oracle_check(const Scenario& scenario, unsigned workers) {
    const TimeGrid grid = scenario.make_grid();
    const CreditParty party_a = scenario.make_party_a();
    const CreditParty party_b = scenario.make_party_b();
    const auto n = static_cast<std::size_t>(scenario.n_paths);

    std::vector<OracleCheckRow> rows;
    for (const SpreadSource source : {SpreadSource::Cds, SpreadSource::Asw}) {
        const std::vector<DefaultScenario> defaults = simulate_default_times(
            party_a, party_b, source, scenario.rho, n, scenario.seed, workers);
        for (std::size_t k = 1; k <= grid.periods(); ++k) {
            for (const FirstToDefault who : {FirstToDefault::AFirst, FirstToDefault::BFirst}) {
                std::size_t hits = 0;
                for (const DefaultScenario& s : defaults) {
                    const bool first = who == FirstToDefault::AFirst
                                           ? (a_defaults_first(s) && defaulted_in_period(s.tau_a, grid, k))
                                           : (b_defaults_first(s) && defaulted_in_period(s.tau_b, grid, k));
                    if (first) ++hits;
                }
                OracleCheckRow row;
                row.source = source;
                row.period = k;
                row.who = who;
                row.mc_frequency = static_cast<double>(hits) / static_cast<double>(n);
                row.mc_std_error = std::sqrt(row.mc_frequency * (1.0 - row.mc_frequency) /
                                             static_cast<double>(n));
                row.quadrature =
                    default_partition_probability(party_a, party_b, source, scenario.rho, grid, k, who);
                // Score denominator: the binomial deviation is measured
                // against the semi-analytic probability, which is well
                // defined even when the empirical frequency is 0 or 1.
                const double se0 =
                    std::sqrt(row.quadrature * (1.0 - row.quadrature) / static_cast<double>(n));
                const double diff = row.mc_frequency - row.quadrature;
                if (se0 > 0.0) {
                    row.deviation_se = diff / se0;
                } else {
                    row.deviation_se =
                        diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::string render_oracle_check(const std::vector<OracleCheckRow>& rows) {
    std::ostringstream os;
    os << "default-partition cross-check (simulated frequency vs quadrature)\n";
    os << "  source  period  first  mc_frequency   std_error     quadrature    dev_se\n";
    char line[160];
    double worst = 0.0;
    for (const OracleCheckRow& row : rows) {
        std::snprintf(line, sizeof(line), "  %-6s  %6zu  %-5s  %.10f  %.10f  %.10f  %+8.3f\n",
                      row.source == SpreadSource::Cds ? "cds" : "asw", row.period,
                      row.who == FirstToDefault::AFirst ? "A" : "B", row.mc_frequency,
                      row.mc_std_error, row.quadrature, row.deviation_se);
        os << line;
        worst = std::max(worst, std::fabs(row.deviation_se));
    }
    std::snprintf(line, sizeof(line), "  worst |dev| = %.3f standard errors\n", worst);
    os << line;
    return os.str();
}

}  // namespace xva
