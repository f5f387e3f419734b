// Path-level margin-loan ledgers. Every ledger must telescope to the negated
// realized default loss of its path: survival and lender-first paths are
// worth zero, borrower-default paths are worth the discounted loss. The
// cases below pin the individual cash flows first, then hammer the identity
// with randomized paths, and finally tie the ledger mean to the funded
// charge estimator bit for bit.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "xva/adjustments.hpp"
#include "xva/credit.hpp"
#include "xva/default_times.hpp"
#include "xva/errors.hpp"
#include "xva/exposure.hpp"
#include "xva/margin_ledger.hpp"
#include "xva/summation.hpp"

using namespace xva;

namespace {

const CashflowEntry* find_entry(const CashflowLedger& ledger, CashflowTag tag, double time) {
    for (const CashflowEntry& entry : ledger.entries) {
        if (entry.tag == tag && entry.time == time) return &entry;
    }
    return nullptr;
}

std::size_t count_tag(const CashflowLedger& ledger, CashflowTag tag) {
    std::size_t n = 0;
    for (const CashflowEntry& entry : ledger.entries) {
        if (entry.tag == tag) ++n;
    }
    return n;
}

constexpr DefaultScenario kSurvival{kNoDefaultTime, kNoDefaultTime, 0};

}  // namespace

TEST_CASE("surviving path books draw, rebalances, interest, and repayment") {
    const TimeGrid grid = TimeGrid::regular(1.0, 2);
    const DiscountCurve curve = DiscountCurve::flat(0.02);
    const std::vector<double> values{100.0, 80.0, 120.0};

    const CashflowLedger ledger = build_unilateral_ledger(values, kSurvival, grid, curve, 0.4);
    REQUIRE(ledger.entries.size() == 6);
    CHECK(ledger.entries[0].tag == CashflowTag::InitialDraw);
    CHECK(ledger.entries[0].amount == -100.0);
    CHECK(ledger.entries[0].time == 0.0);

    const CashflowEntry* step1 = find_entry(ledger, CashflowTag::MarginStep, 0.5);
    REQUIRE(step1 != nullptr);
    CHECK(step1->amount == 20.0);  // balance drops 100 -> 80, cash comes back

    const CashflowEntry* step2 = find_entry(ledger, CashflowTag::MarginStep, 1.0);
    REQUIRE(step2 != nullptr);
    CHECK(step2->amount == -40.0);  // balance rises 80 -> 120

    const CashflowEntry* interest1 = find_entry(ledger, CashflowTag::Interest, 0.5);
    REQUIRE(interest1 != nullptr);
    CHECK(interest1->amount ==
          doctest::Approx(100.0 * 0.5 * forward_accrual_rate(curve, grid, 1)).epsilon(1e-15));

    CHECK(ledger.entries.back().tag == CashflowTag::FinalRepay);
    CHECK(ledger.entries.back().amount == 120.0);

    // Telescoping: a survival path is worth exactly nothing.
    const double pv = ledger_pv(ledger, curve);
    const IdentityCheck check =
        verify_pathwise_identity(pv, values, kSurvival, grid, curve, 0.6, LoanMode::Unilateral);
    CHECK(check.passed);
    CHECK(std::fabs(pv) <= kIdentityRelTol * 120.0);
}

TEST_CASE("borrower default truncates the ledger at recovery") {
    // Zero rates make the numbers exact: draw 100, recover 40% of the
    // balance, worth -60 = -(lgd * exposure) on the nose.
    const TimeGrid grid = TimeGrid::regular(2.0, 2);
    const DiscountCurve curve = DiscountCurve::flat(0.0);
    const std::vector<double> values{100.0, 40.0, 70.0};
    const DefaultScenario scenario{0.7, kNoDefaultTime, 3};

    const CashflowLedger ledger = build_unilateral_ledger(values, scenario, grid, curve, 0.4);
    REQUIRE(ledger.entries.size() == 2);
    CHECK(ledger.path_id == 3);
    CHECK(ledger.entries[0].amount == -100.0);
    CHECK(ledger.entries[1].tag == CashflowTag::RecoveryA);
    CHECK(ledger.entries[1].time == 1.0);  // settlement at the bucket's right edge
    CHECK(ledger.entries[1].amount == 40.0);

    const double pv = ledger_pv(ledger, curve);
    CHECK(pv == -60.0);
    CHECK(pathwise_realized_loss(values, scenario, grid, curve, 0.6, LoanMode::Unilateral) ==
          60.0);
    CHECK(verify_pathwise_identity(pv, values, scenario, grid, curve, 0.6, LoanMode::Unilateral)
              .passed);
}

TEST_CASE("interest accrues at the period forward rate") {
    const TimeGrid grid = TimeGrid::regular(2.0, 2);
    const DiscountCurve curve = DiscountCurve::flat(0.02);
    const std::vector<double> values{100.0, 100.0, 100.0};
    const CashflowLedger ledger = build_unilateral_ledger(values, kSurvival, grid, curve, 0.4);
    const CashflowEntry* interest = find_entry(ledger, CashflowTag::Interest, 1.0);
    REQUIRE(interest != nullptr);
    CHECK(interest->amount == doctest::Approx(2.0201340026755776).epsilon(1e-12));
}

TEST_CASE("lender default terminates at par plus accrued interest") {
    const TimeGrid grid = TimeGrid::regular(2.0, 2);
    const DiscountCurve curve = DiscountCurve::flat(0.02);
    const std::vector<double> values{100.0, 90.0, 80.0};
    const DefaultScenario scenario{kNoDefaultTime, 0.5, 0};

    const CashflowLedger ledger = build_bilateral_ledger(values, scenario, grid, curve, 0.4);
    REQUIRE(ledger.entries.size() == 2);
    CHECK(ledger.entries[1].tag == CashflowTag::EarlyTerminationB);
    // Full balance plus accrued interest, no recovery haircut.
    CHECK(ledger.entries[1].amount ==
          doctest::Approx(100.0 * (1.0 + forward_accrual_rate(curve, grid, 1))).epsilon(1e-15));

    // Paying back everything owed makes the loan a wash.
    const double pv = ledger_pv(ledger, curve);
    CHECK(std::fabs(pv) <= kIdentityRelTol * 100.0);
    CHECK(pathwise_realized_loss(values, scenario, grid, curve, 0.6, LoanMode::Bilateral) == 0.0);
    CHECK(verify_pathwise_identity(pv, values, scenario, grid, curve, 0.6, LoanMode::Bilateral)
              .passed);

    // The unilateral loan does not know about the lender and runs to term.
    const CashflowLedger uni = build_unilateral_ledger(values, scenario, grid, curve, 0.4);
    CHECK(uni.entries.size() == 6);
    CHECK(uni.entries.back().tag == CashflowTag::FinalRepay);
}

TEST_CASE("a borrower default beats a later lender default") {
    const TimeGrid grid = TimeGrid::regular(2.0, 2);
    const DiscountCurve curve = DiscountCurve::flat(0.02);
    const std::vector<double> values{100.0, 90.0, 80.0};

    // Both die in the same period; the borrower's earlier time wins the tie
    // on ordering, so the ledger books a recovery, not a termination.
    const DefaultScenario both{1.2, 1.7, 0};
    const CashflowLedger ledger = build_bilateral_ledger(values, both, grid, curve, 0.4);
    CHECK(count_tag(ledger, CashflowTag::RecoveryA) == 1);
    CHECK(count_tag(ledger, CashflowTag::EarlyTerminationB) == 0);

    // Reversed order in the same period books the termination instead.
    const DefaultScenario reversed{1.7, 1.2, 0};
    const CashflowLedger ledger2 = build_bilateral_ledger(values, reversed, grid, curve, 0.4);
    CHECK(count_tag(ledger2, CashflowTag::RecoveryA) == 0);
    CHECK(count_tag(ledger2, CashflowTag::EarlyTerminationB) == 1);
}

TEST_CASE("ledger present value discounts entry by entry") {
    CashflowLedger ledger;
    ledger.entries.push_back(CashflowEntry{1.0, 100.0, CashflowTag::FinalRepay});
    const DiscountCurve curve = DiscountCurve::flat(0.02);
    CHECK(ledger_pv(ledger, curve) == doctest::Approx(98.019867330675524).epsilon(1e-15));
}

TEST_CASE("zero-amount entries are booked unless elision is requested") {
    const TimeGrid grid = TimeGrid::regular(1.0, 2);
    const DiscountCurve curve = DiscountCurve::flat(0.02);
    const std::vector<double> values{0.0, 50.0, 50.0};

    const CashflowLedger full = build_unilateral_ledger(values, kSurvival, grid, curve, 0.4);
    CHECK(full.entries.size() == 6);  // complete audit trail, zeros included

    LedgerOptions options;
    options.elide_zero_amounts = true;
    const CashflowLedger thin =
        build_unilateral_ledger(values, kSurvival, grid, curve, 0.4, options);
    CHECK(thin.entries.size() == 3);  // one rebalance, one interest, one repayment
    CHECK(ledger_pv(thin, curve) == ledger_pv(full, curve));
}

TEST_CASE("identity survives randomized paths, curves, and default times") {
    std::mt19937_64 gen(91);
    std::uniform_real_distribution<double> value_dist(-150.0, 150.0);
    std::uniform_real_distribution<double> rate_dist(0.0, 0.05);
    std::uniform_real_distribution<double> tau_dist(0.0, 2.5);
    std::uniform_real_distribution<double> pick(0.0, 1.0);

    const TimeGrid grid = TimeGrid::regular(2.0, 4);
    for (int rep = 0; rep < 300; ++rep) {
        const DiscountCurve curve = DiscountCurve::flat(rate_dist(gen));
        std::vector<double> values(grid.nodes());
        for (double& v : values) v = value_dist(gen);

        const auto draw_tau = [&]() -> double {
            const double roll = pick(gen);
            if (roll < 0.2) return kNoDefaultTime;
            if (roll < 0.4) return grid.date(1 + static_cast<std::size_t>(pick(gen) * 3.99));
            return tau_dist(gen);  // interior, possibly past the horizon
        };
        const DefaultScenario scenario{draw_tau(), draw_tau(),
                                       static_cast<std::uint64_t>(rep)};
        const DefaultScenario mirrored{scenario.tau_b, scenario.tau_a, scenario.path_id};
        std::vector<double> negated(values.size());
        for (std::size_t k = 0; k < values.size(); ++k) negated[k] = -values[k];

        for (const LoanMode mode : {LoanMode::Unilateral, LoanMode::Bilateral}) {
            const CashflowLedger ledger =
                mode == LoanMode::Unilateral
                    ? build_unilateral_ledger(values, scenario, grid, curve, 0.4)
                    : build_bilateral_ledger(values, scenario, grid, curve, 0.4);
            const IdentityCheck check = verify_pathwise_identity(
                ledger_pv(ledger, curve), values, scenario, grid, curve, 0.6, mode);
            CHECK(check.passed);

            // The loan written on the opposite side of the same mark.
            const CashflowLedger mirror =
                mode == LoanMode::Unilateral
                    ? build_unilateral_ledger(negated, mirrored, grid, curve, 0.25)
                    : build_bilateral_ledger(negated, mirrored, grid, curve, 0.25);
            const IdentityCheck mirror_check = verify_pathwise_identity(
                ledger_pv(mirror, curve), negated, mirrored, grid, curve, 0.75, mode);
            CHECK(mirror_check.passed);
        }
    }
}

TEST_CASE("mean ledger loss reproduces the funded charge estimator exactly") {
    const TimeGrid grid = TimeGrid::regular(2.0, 4);
    const DiscountCurve curve = DiscountCurve::flat(0.02);
    const CreditParty a("A", 0.4, 0.012, 0.009);
    const CreditParty b("B", 0.4, 0.008, 0.006);
    const std::size_t n = 5000;
    const auto defaults = simulate_default_times(a, b, SpreadSource::Asw, 0.3, n, 57, 1);
    const DeterministicProfile profile{{80.0, -40.0, 60.0, -30.0, 50.0}};
    const ExposureMatrix exposure = simulate_exposure(profile, curve, grid, n, 0);

    const AdjustmentResult funded = fbcva(exposure, defaults, curve, a.lgd(), 1);
    std::vector<double> losses(n);
    for (std::size_t i = 0; i < n; ++i) {
        losses[i] = pathwise_realized_loss(exposure.row(i), defaults[i], grid, curve, a.lgd(),
                                           LoanMode::Bilateral);
        CHECK(losses[i] == funded.path_values[i]);  // same arithmetic, same bits
    }
    const SampleStats stats = summarize_samples(losses);
    CHECK(stats.mean == funded.value);
    CHECK(stats.std_error == funded.std_error);
}

TEST_CASE("ledger inputs are validated") {
    const TimeGrid grid = TimeGrid::regular(1.0, 2);
    const DiscountCurve curve = DiscountCurve::flat(0.02);
    const std::vector<double> short_values{100.0, 80.0};
    CHECK_THROWS_AS(build_unilateral_ledger(short_values, kSurvival, grid, curve, 0.4),
                    ContractError);
    const std::vector<double> values{100.0, 80.0, 60.0};
    CHECK_THROWS_AS(build_unilateral_ledger(values, kSurvival, grid, curve, 1.5), DomainError);
    CHECK_THROWS_AS(pathwise_realized_loss(values, kSurvival, grid, curve, -0.5,
                                           LoanMode::Unilateral),
                    DomainError);
    CHECK_THROWS_AS(pathwise_realized_loss(short_values, kSurvival, grid, curve, 0.6,
                                           LoanMode::Unilateral),
                    ContractError);
}

TEST_CASE("ledger rows serialize with full precision and stable tags") {
    const TimeGrid grid = TimeGrid::regular(2.0, 2);
    const DiscountCurve curve = DiscountCurve::flat(0.0);
    const std::vector<double> values{100.0, 40.0, 70.0};
    const DefaultScenario scenario{0.7, kNoDefaultTime, 7};
    const CashflowLedger ledger = build_unilateral_ledger(values, scenario, grid, curve, 0.4);

    std::ostringstream os;
    write_ledger_header(os);
    write_ledger_rows(os, ledger);
    const std::string text = os.str();
    CHECK(text == "time,amount,tag,path_id\n"
                  "0,-100,initial_draw,7\n"
                  "1,40,recovery_a,7\n");
    CHECK(std::string(cashflow_tag_name(CashflowTag::MarginStep)) == "margin_step");
    CHECK(std::string(cashflow_tag_name(CashflowTag::EarlyTerminationB)) ==
          "early_termination_b");
}
