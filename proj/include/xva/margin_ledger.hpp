#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "xva/default_times.hpp"
#include "xva/discount_curve.hpp"
#include "xva/time_grid.hpp"

namespace xva {

// One margin loan: party A borrows the collateral it posts against B's
// positive mark [V0_B]^+ and pays interest at the period forward rate. The
// ledger books the lender's cash flows, undiscounted and dated:
//
//   InitialDraw        t_0  -[V]^+(t_0)            advance the opening balance
//   MarginStep         t_k  -([V]^+(t_k)-[V]^+(t_{k-1}))   rebalance while alive
//   Interest           t_k  +[V]^+(t_{k-1}) * theta_k * eps_{k-1}
//   FinalRepay         t_M  +[V]^+(t_M)            balance returned at the horizon
//   RecoveryA          t_k  +R_A * [V]^+(t_{k-1}) * (1 + theta_k * eps_{k-1})
//   EarlyTerminationB  t_k  +[V]^+(t_{k-1}) * (1 + theta_k * eps_{k-1})
//
// A defaulting borrower repays balance plus accrued interest at recovery; a
// defaulting lender (bilateral mode only) terminates the loan at par plus
// accrued interest, with no recovery haircut. At most one of the two terminal
// entries appears and nothing is booked after the default period.
enum class CashflowTag { InitialDraw, FinalRepay, MarginStep, Interest, RecoveryA, EarlyTerminationB };
const char* cashflow_tag_name(CashflowTag tag) noexcept;

struct CashflowEntry {
    double time = 0.0;
    double amount = 0.0;  // undiscounted, signed from the lender's viewpoint
    CashflowTag tag = CashflowTag::InitialDraw;
};

struct CashflowLedger {
    std::uint64_t path_id = 0;
    std::vector<CashflowEntry> entries;
};

// Unilateral mode ignores tau_b entirely; bilateral mode stops the loan at
// whichever default comes first, ties to A.
enum class LoanMode { Unilateral, Bilateral };

struct LedgerOptions {
    // Zero-amount entries are booked by default so the audit trail is
    // complete; set to true to drop them.
    bool elide_zero_amounts = false;
};

// path_values holds V0_B at every grid node for one path; the builders apply
// the positive part themselves.
CashflowLedger build_unilateral_ledger(std::span<const double> path_values,
                                       const DefaultScenario& scenario, const TimeGrid& grid,
                                       const DiscountCurve& curve, double recovery_a,
                                       const LedgerOptions& options = {});
CashflowLedger build_bilateral_ledger(std::span<const double> path_values,
                                      const DefaultScenario& scenario, const TimeGrid& grid,
                                      const DiscountCurve& curve, double recovery_a,
                                      const LedgerOptions& options = {});

// Sum of amount * D(t0, time) over the entries in booked order.
double ledger_pv(const CashflowLedger& ledger, const DiscountCurve& curve);

// The discounted loss the lender realizes on this path in simplified form:
// lgd_a * D(t0, t_{k-1}) * [V]^+(t_{k-1}) on A's default bucket, zero on
// surviving and B-first paths. Shares its arithmetic with the adjustment
// estimators, so sample means agree with them bit for bit.
double pathwise_realized_loss(std::span<const double> path_values,
                              const DefaultScenario& scenario, const TimeGrid& grid,
                              const DiscountCurve& curve, double lgd_a, LoanMode mode);

inline constexpr double kIdentityRelTol = 1e-12;

struct IdentityCheck {
    double residual = 0.0;   // |ledger PV + realized loss|
    double tolerance = 0.0;  // kIdentityRelTol * max(1, max_k |V(t_k)|)
    bool passed = false;
};

// Confirms the ledger cash flows telescope to the negated realized loss:
// every margin loan is worth exactly its default loss, path by path.
IdentityCheck verify_pathwise_identity(double ledger_pv_value,
                                       std::span<const double> path_values,
                                       const DefaultScenario& scenario, const TimeGrid& grid,
                                       const DiscountCurve& curve, double lgd_a, LoanMode mode);

// Delimited audit dump, one row per entry: time, amount, tag, path_id.
void write_ledger_header(std::ostream& os);
void write_ledger_rows(std::ostream& os, const CashflowLedger& ledger);

}  // namespace xva
