// Market building blocks: time grid, discount curve, hazard curves, the
// normal helpers, deterministic summation, and the adaptive quadrature.
// Reference numbers were computed independently with scipy/mpmath-grade
// routines and are frozen here to full double precision.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "xva/credit.hpp"
#include "xva/discount_curve.hpp"
#include "xva/errors.hpp"
#include "xva/hazard_curve.hpp"
#include "xva/normal.hpp"
#include "xva/quadrature.hpp"
#include "xva/summation.hpp"
#include "xva/time_grid.hpp"

using namespace xva;

TEST_CASE("regular grid spans the horizon with equal periods") {
    const TimeGrid grid = TimeGrid::regular(2.0, 8);
    CHECK(grid.periods() == 8);
    CHECK(grid.nodes() == 9);
    CHECK(grid.date(0) == 0.0);
    CHECK(grid.date(8) == 2.0);
    CHECK(grid.horizon() == 2.0);
    for (std::size_t k = 1; k <= 8; ++k) {
        CHECK(grid.theta(k) == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(grid.theta(k) == grid.date(k) - grid.date(k - 1));
    }
}

TEST_CASE("period lookup is right-closed") {
    const TimeGrid grid = TimeGrid::regular(2.0, 8);
    CHECK(grid.period_containing(0.0) == 0);      // valuation date sits in no period
    CHECK(grid.period_containing(0.25) == 1);     // boundary belongs to the left period
    CHECK(grid.period_containing(0.2500001) == 2);
    CHECK(grid.period_containing(1.99) == 8);
    CHECK(grid.period_containing(2.0) == 8);
    CHECK(grid.period_containing(2.0000001) == 0);  // past the horizon
    CHECK(grid.period_containing(kNoDefaultTime) == 0);
    CHECK(grid.period_containing(-1.0) == 0);
}

TEST_CASE("grid construction rejects malformed inputs") {
    CHECK_THROWS_AS(TimeGrid({0.0}), DomainError);
    CHECK_THROWS_AS(TimeGrid({0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(TimeGrid({0.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(TimeGrid({0.0, 2.0, 1.0}), DomainError);
    CHECK_THROWS_AS(TimeGrid::regular(0.0, 4), DomainError);
    CHECK_THROWS_AS(TimeGrid::regular(1.0, 0), DomainError);
}

TEST_CASE("flat discount curve matches continuous compounding") {
    const DiscountCurve curve = DiscountCurve::flat(0.02);
    CHECK(curve.df(0.0) == 1.0);
    CHECK(curve.df(1.0) == doctest::Approx(0.98019867330675525).epsilon(1e-15));
    CHECK(curve.df(2.0) == doctest::Approx(0.96078943915232318).epsilon(1e-15));
    CHECK(curve.discount(1.0, 2.0) ==
          doctest::Approx(0.96078943915232318 / 0.98019867330675525).epsilon(1e-15));
    CHECK_THROWS_AS(curve.discount(2.0, 1.0), DomainError);
}

TEST_CASE("pillar curve interpolates zero rates linearly and extrapolates flat") {
    const DiscountCurve curve({0.0, 1.0, 2.0}, {0.01, 0.02, 0.04});
    CHECK(curve.zero_rate(0.5) == doctest::Approx(0.015).epsilon(1e-15));
    CHECK(curve.zero_rate(1.5) == doctest::Approx(0.03).epsilon(1e-15));
    CHECK(curve.zero_rate(5.0) == 0.04);    // flat beyond the last pillar
    CHECK(curve.zero_rate(0.0) == 0.01);
    CHECK(curve.df(1.5) == doctest::Approx(std::exp(-0.03 * 1.5)).epsilon(1e-15));
    CHECK_THROWS_AS(DiscountCurve({0.0, 1.0}, {0.01}), DomainError);
    CHECK_THROWS_AS(DiscountCurve({1.0, 0.0}, {0.01, 0.02}), DomainError);
}

TEST_CASE("period accrual rate reproduces the discount ratio exactly") {
    // eps_{k-1} is defined so that D(t_k) * (1 + theta_k * eps_{k-1}) gives
    // back D(t_{k-1}); the margin-loan interest leg relies on this identity.
    const TimeGrid grid = TimeGrid::regular(2.0, 8);
    const DiscountCurve flat = DiscountCurve::flat(0.02);
    const DiscountCurve sloped({0.0, 0.7, 2.0}, {0.011, 0.034, 0.027});
    for (const DiscountCurve* curve : {&flat, &sloped}) {
        for (std::size_t k = 1; k <= grid.periods(); ++k) {
            const double eps = forward_accrual_rate(*curve, grid, k);
            const double lhs = curve->df(grid.date(k)) * (1.0 + grid.theta(k) * eps);
            CHECK(lhs == doctest::Approx(curve->df(grid.date(k - 1))).epsilon(5e-16));
        }
    }
    // Frozen spot value: flat 2%, annual period.
    const TimeGrid annual = TimeGrid::regular(1.0, 1);
    CHECK(forward_accrual_rate(flat, annual, 1) ==
          doctest::Approx(0.020201340026755776).epsilon(1e-15));
    CHECK_THROWS_AS(forward_accrual_rate(flat, annual, 0), DomainError);
    CHECK_THROWS_AS(forward_accrual_rate(flat, annual, 2), DomainError);
}

TEST_CASE("flat hazard curve survival and inversion agree") {
    const HazardCurve hazard = HazardCurve::flat(0.05);
    CHECK(hazard.survival(0.0) == 1.0);
    CHECK(1.0 - hazard.survival(1.0) ==
          doctest::Approx(0.048770575499285984).epsilon(1e-15));
    for (const double t : {0.1, 0.5, 1.0, 7.3, 40.0}) {
        CHECK(hazard.inverse_survival(hazard.survival(t)) == doctest::Approx(t).epsilon(1e-12));
    }
}

TEST_CASE("piecewise hazard curve integrates segment by segment") {
    const HazardCurve hazard({0.0, 1.0, 2.0}, {0.10, 0.0, 0.20});
    CHECK(hazard.cumulative(0.5) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(hazard.cumulative(1.5) == doctest::Approx(0.10).epsilon(1e-15));
    CHECK(hazard.cumulative(3.0) == doctest::Approx(0.30).epsilon(1e-15));
    CHECK(hazard.intensity(0.5) == 0.10);
    CHECK(hazard.intensity(1.5) == 0.0);
    CHECK(hazard.intensity(2.5) == 0.20);

    // The survival function is constant on the zero-intensity plateau
    // [1, 2]; its inverse picks the earliest time attaining that level.
    const double plateau = hazard.survival(1.5);
    CHECK(plateau == hazard.survival(1.0));
    CHECK(hazard.inverse_survival(plateau) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hazard inversion handles the boundary draws") {
    const HazardCurve hazard = HazardCurve::flat(0.05);
    CHECK(hazard.inverse_survival(0.0) == kNoDefaultTime);
    CHECK(hazard.inverse_survival(-0.5) == kNoDefaultTime);
    const double at_one = hazard.inverse_survival(1.0);
    CHECK(at_one > 0.0);  // nudged just inside, never exactly the valuation date
    CHECK(at_one < 1e-12);

    const HazardCurve no_risk = HazardCurve::flat(0.0);
    CHECK(no_risk.inverse_survival(0.5) == kNoDefaultTime);
    CHECK(no_risk.survival(100.0) == 1.0);
}

TEST_CASE("hazard curve construction rejects malformed inputs") {
    CHECK_THROWS_AS(HazardCurve({}, {}), DomainError);
    CHECK_THROWS_AS(HazardCurve({0.5}, {0.1}), DomainError);
    CHECK_THROWS_AS(HazardCurve({0.0, 1.0}, {0.1}), DomainError);
    CHECK_THROWS_AS(HazardCurve({0.0, 1.0}, {0.1, -0.1}), DomainError);
    CHECK_THROWS_AS(HazardCurve({0.0, 0.0}, {0.1, 0.1}), DomainError);
}

TEST_CASE("credit triangle maps spreads to intensities") {
    // lambda = spread / (1 - recovery): 120bp at 40% recovery gives 2%.
    const HazardCurve hazard = hazard_from_spread(0.012, 0.4);
    CHECK(hazard.intensity(0.5) == doctest::Approx(0.02).epsilon(1e-15));
    CHECK_THROWS_AS(hazard_from_spread(0.012, 1.0), DomainError);
    CHECK_THROWS_AS(hazard_from_spread(-0.001, 0.4), DomainError);

    const CreditParty party("DealerA", 0.4, 0.012, 0.009);
    CHECK(party.name() == "DealerA");
    CHECK(party.lgd() == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(party.hazard(SpreadSource::Cds).intensity(1.0) ==
          doctest::Approx(0.02).epsilon(1e-15));
    CHECK(party.hazard(SpreadSource::Asw).intensity(1.0) ==
          doctest::Approx(0.015).epsilon(1e-15));
    CHECK_THROWS_AS(CreditParty("X", 1.5, 0.01, 0.01), DomainError);
}

TEST_CASE("normal density, distribution, and quantile match references") {
    CHECK(norm_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
    CHECK(norm_pdf(1.5) == doctest::Approx(0.12951759566589174).epsilon(1e-15));
    CHECK(norm_cdf(1.0) == doctest::Approx(0.84134474606854293).epsilon(1e-15));
    CHECK(norm_cdf(-2.5) == doctest::Approx(0.0062096653257761323).epsilon(1e-14));
    CHECK(norm_cdf(5.0) == doctest::Approx(0.99999971334842808).epsilon(1e-15));
    CHECK(norm_cdf(-8.0) == doctest::Approx(6.2209605742717405e-16).epsilon(1e-13));
    CHECK(norm_cdf_inv(0.025) == doctest::Approx(-1.9599639845400545).epsilon(1e-14));
    CHECK(norm_cdf_inv(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-14));
    CHECK(norm_cdf_inv(0.3) == doctest::Approx(-0.52440051270804089).epsilon(1e-14));
    CHECK(norm_cdf_inv(0.9) == doctest::Approx(1.2815515655446004).epsilon(1e-14));
    CHECK(norm_cdf_inv(1e-10) == doctest::Approx(-6.3613409024040557).epsilon(1e-13));
    CHECK_THROWS_AS(norm_cdf_inv(0.0), DomainError);
    CHECK_THROWS_AS(norm_cdf_inv(1.0), DomainError);
}

TEST_CASE("normal quantile round-trips through the distribution") {
    for (double u = 0.02; u < 1.0; u += 0.035) {
        CHECK(norm_cdf(norm_cdf_inv(u)) == doctest::Approx(u).epsilon(1e-13));
    }
    for (const double z : {-6.0, -3.2, -0.7, 0.0, 1.1, 4.5}) {
        CHECK(norm_cdf_inv(norm_cdf(z)) == doctest::Approx(z).epsilon(1e-11));
    }
}

TEST_CASE("pairwise summation is exact on integers and accurate on drifts") {
    std::vector<double> ints(200000);
    std::iota(ints.begin(), ints.end(), 1.0);
    CHECK(pairwise_sum(ints) == 200000.0 * 200001.0 / 2.0);

    // 10^5 copies of 0.1: naive left-to-right drifts at the 1e-7 level,
    // pairwise stays within 1e-9 of the true value.
    const std::vector<double> tenths(100000, 0.1);
    CHECK(std::fabs(pairwise_sum(tenths) - 10000.0) < 1e-9);

    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
    CHECK(pairwise_sum(std::vector<double>{3.25}) == 3.25);
}

TEST_CASE("sample statistics use the unbiased variance") {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    const SampleStats st = summarize_samples(xs);
    CHECK(st.n == 4);
    CHECK(st.mean == doctest::Approx(2.5).epsilon(1e-15));
    // s^2 = 5/3, SE = sqrt(s^2 / n) = sqrt(5/12).
    CHECK(st.std_error == doctest::Approx(std::sqrt(5.0 / 12.0)).epsilon(1e-15));

    const SampleStats single = summarize_samples(std::vector<double>{7.0});
    CHECK(single.mean == 7.0);
    CHECK(single.std_error == 0.0);
    CHECK(summarize_samples(std::vector<double>{}).n == 0);
}

TEST_CASE("adaptive quadrature reproduces closed-form integrals") {
    const double third = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(third == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const double two = integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                                          3.141592653589793, 1e-12);
    CHECK(two == doctest::Approx(2.0).epsilon(1e-12));

    // Total normal mass over a wide bracket, against the erf closed form.
    const double mass = integrate_adaptive([](double z) { return norm_pdf(z); }, -9.0, 9.0, 1e-12);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));

    // A partial normal mass: integral of phi over [-3, 5].
    const double partial =
        integrate_adaptive([](double z) { return norm_pdf(z); }, -3.0, 5.0, 1e-12);
    CHECK(partial == doctest::Approx(norm_cdf(5.0) - norm_cdf(-3.0)).epsilon(1e-12));

    CHECK(integrate_adaptive([](double x) { return x; }, 2.0, 2.0, 1e-12) == 0.0);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 1.0, 0.0, 1e-12), DomainError);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("adaptive quadrature handles oscillatory and peaked integrands") {
    const double osc = integrate_adaptive([](double x) { return std::cos(10.0 * x); }, 0.0, 1.0,
                                          1e-12);
    CHECK(osc == doctest::Approx(std::sin(10.0) / 10.0).epsilon(1e-11));

    // Narrow Gaussian spike away from the panel centers.
    const double spike = integrate_adaptive(
        [](double x) { return std::exp(-400.0 * (x - 0.37) * (x - 0.37)); }, 0.0, 1.0, 1e-12);
    const double expected = std::sqrt(3.141592653589793 / 400.0);
    CHECK(spike == doctest::Approx(expected).epsilon(1e-10));
}
