#include "xva/margin_ledger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "xva/errors.hpp"
#include "xva/exposure.hpp"
#include "xva/realized_loss.hpp"

namespace xva {
namespace {

void require_grid_match(std::span<const double> path_values, const TimeGrid& grid) {
    if (path_values.size() != grid.nodes()) {
        throw ContractError("ledger path_values must hold one mark per grid date");
    }
}

void book(CashflowLedger& ledger, const LedgerOptions& options, double time, double amount,
          CashflowTag tag) {
    if (options.elide_zero_amounts && amount == 0.0) return;
    ledger.entries.push_back(CashflowEntry{time, amount, tag});
}

CashflowLedger build_ledger(std::span<const double> path_values, const DefaultScenario& scenario,
                            const TimeGrid& grid, const DiscountCurve& curve, double recovery_a,
                            LoanMode mode, const LedgerOptions& options) {
    require_grid_match(path_values, grid);
    if (!(recovery_a >= 0.0 && recovery_a <= 1.0)) {
        throw DomainError("recovery_a must lie in [0, 1]");
    }

    CashflowLedger ledger;
    ledger.path_id = scenario.path_id;
    ledger.entries.reserve(2 * grid.periods() + 2);

    book(ledger, options, grid.date(0), -positive_part(path_values[0]), CashflowTag::InitialDraw);

    for (std::size_t k = 1; k <= grid.periods(); ++k) {
        const double t_left = grid.date(k - 1);
        const double t_right = grid.date(k);
        const double balance = positive_part(path_values[k - 1]);
        const double accrued = balance * grid.theta(k) * forward_accrual_rate(curve, grid, k);

        const bool a_dies = defaulted_in_period(scenario.tau_a, grid, k);
        const bool b_dies = mode == LoanMode::Bilateral && defaulted_in_period(scenario.tau_b, grid, k);
        if (a_dies || b_dies) {
            const double settle = balance + accrued;
            if (a_dies && (mode == LoanMode::Unilateral || a_defaults_first(scenario))) {
                book(ledger, options, t_right, recovery_a * settle, CashflowTag::RecoveryA);
            } else {
                book(ledger, options, t_right, settle, CashflowTag::EarlyTerminationB);
            }
            return ledger;
        }

        book(ledger, options, t_right, -(positive_part(path_values[k]) - balance),
             CashflowTag::MarginStep);
        book(ledger, options, t_right, accrued, CashflowTag::Interest);
        (void)t_left;
    }

    book(ledger, options, grid.horizon(), positive_part(path_values[grid.periods()]),
         CashflowTag::FinalRepay);
    return ledger;
}

}  // namespace

const char* cashflow_tag_name(CashflowTag tag) noexcept {
    switch (tag) {
        case CashflowTag::InitialDraw: return "initial_draw";
        case CashflowTag::FinalRepay: return "final_repay";
        case CashflowTag::MarginStep: return "margin_step";
        case CashflowTag::Interest: return "interest";
        case CashflowTag::RecoveryA: return "recovery_a";
        case CashflowTag::EarlyTerminationB: return "early_termination_b";
    }
    return "unknown";
}

CashflowLedger build_unilateral_ledger(std::span<const double> path_values,
                                       const DefaultScenario& scenario, const TimeGrid& grid,
                                       const DiscountCurve& curve, double recovery_a,
                                       const LedgerOptions& options) {
    return build_ledger(path_values, scenario, grid, curve, recovery_a, LoanMode::Unilateral,
                        options);
}

CashflowLedger build_bilateral_ledger(std::span<const double> path_values,
                                      const DefaultScenario& scenario, const TimeGrid& grid,
                                      const DiscountCurve& curve, double recovery_a,
                                      const LedgerOptions& options) {
    return build_ledger(path_values, scenario, grid, curve, recovery_a, LoanMode::Bilateral,
                        options);
}

double ledger_pv(const CashflowLedger& ledger, const DiscountCurve& curve) {
    double pv = 0.0;
    for (const CashflowEntry& entry : ledger.entries) {
        pv += entry.amount * curve.df(entry.time);
    }
    return pv;
}

double pathwise_realized_loss(std::span<const double> path_values,
                              const DefaultScenario& scenario, const TimeGrid& grid,
                              const DiscountCurve& curve, double lgd_a, LoanMode mode) {
    require_grid_match(path_values, grid);
    if (!(lgd_a >= 0.0 && lgd_a <= 1.0)) throw DomainError("lgd_a must lie in [0, 1]");

    const std::size_t k = grid.period_containing(scenario.tau_a);
    if (k == 0) return 0.0;
    if (mode == LoanMode::Bilateral && !a_defaults_first(scenario)) return 0.0;
    return realized_default_loss(lgd_a, curve.df(grid.date(k - 1)),
                                 positive_part(path_values[k - 1]));
}

IdentityCheck verify_pathwise_identity(double ledger_pv_value,
                                       std::span<const double> path_values,
                                       const DefaultScenario& scenario, const TimeGrid& grid,
                                       const DiscountCurve& curve, double lgd_a, LoanMode mode) {
    const double loss =
        pathwise_realized_loss(path_values, scenario, grid, curve, lgd_a, mode);

    double scale = 1.0;
    for (double v : path_values) scale = std::max(scale, std::fabs(v));

    IdentityCheck check;
    check.residual = std::fabs(ledger_pv_value + loss);
    check.tolerance = kIdentityRelTol * scale;
    check.passed = check.residual <= check.tolerance;
    return check;
}

void write_ledger_header(std::ostream& os) { os << "time,amount,tag,path_id\n"; }

void write_ledger_rows(std::ostream& os, const CashflowLedger& ledger) {
    char line[128];
    for (const CashflowEntry& entry : ledger.entries) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%s,%llu\n", entry.time, entry.amount,
                      cashflow_tag_name(entry.tag),
                      static_cast<unsigned long long>(ledger.path_id));
        os << line;
    }
}

}  // namespace xva
