#include "xva/partition_probability.hpp"

#include <algorithm>
#include <cmath>

#include "xva/errors.hpp"
#include "xva/normal.hpp"
#include "xva/quadrature.hpp"

namespace xva {

namespace {

// Standard normal mass beyond |z| = 9 is below 1.2e-19, negligible against
// the 1e-10 tolerances used here.
constexpr double kZCut = 9.0;

// Maps a survival level to the z-threshold Phi^{-1}(s), clamped to the cut.
double z_of_survival(double s) {
    if (s >= 1.0) return kZCut;
    if (s <= 0.0) return -kZCut;
    return std::clamp(norm_cdf_inv(s), -kZCut, kZCut);
}

// P(t_lo < tau_first <= t_hi and tau_first <= tau_other) where tau_first is
// driven by hazard_first and z_first, correlation rho between the factors.
double first_in_bucket_probability(const HazardCurve& hazard_first,
                                   const HazardCurve& hazard_other, double rho, double t_lo,
                                   double t_hi, double abs_tol) {
    const double s_lo = hazard_first.survival(t_lo);
    const double s_hi = hazard_first.survival(t_hi);
    if (!(s_lo > s_hi)) return 0.0;  // no marginal default mass in the bucket

    // tau_first <= t  <=>  z_first >= Phi^{-1}(S_first(t))
    const double z_hi = z_of_survival(s_lo);
    const double z_lo = z_of_survival(s_hi);
    if (!(z_lo < z_hi)) return 0.0;

    const double comp = std::sqrt(1.0 - rho * rho);
    auto integrand = [&](double z) {
        const double u = norm_cdf(z);
        const double tau = hazard_first.inverse_survival(u);
        const double s_other = hazard_other.survival(tau);
        double cond;
        if (s_other >= 1.0) {
            cond = 1.0;  // the other party cannot have defaulted yet
        } else if (s_other <= 0.0) {
            cond = 0.0;
        } else {
            cond = norm_cdf((norm_cdf_inv(s_other) - rho * z) / comp);
        }
        return norm_pdf(z) * cond;
    };
    return integrate_adaptive(integrand, z_lo, z_hi, abs_tol);
}

}  // namespace

double default_partition_probability(const CreditParty& party_a, const CreditParty& party_b,
                                     SpreadSource source, double rho, const TimeGrid& grid,
                                     std::size_t k, FirstToDefault who, double abs_tol) {
    if (!(rho > -1.0 && rho < 1.0)) throw DomainError("rho must lie in (-1, 1)");
    if (k < 1 || k > grid.periods())
        throw DomainError("default_partition_probability: period index out of range");
    const double t_lo = grid.date(k - 1);
    const double t_hi = grid.date(k);
    if (who == FirstToDefault::AFirst)
        return first_in_bucket_probability(party_a.hazard(source), party_b.hazard(source), rho,
                                           t_lo, t_hi, abs_tol);
    return first_in_bucket_probability(party_b.hazard(source), party_a.hazard(source), rho, t_lo,
                                       t_hi, abs_tol);
}

double joint_survival_probability(const CreditParty& party_a, const CreditParty& party_b,
                                  SpreadSource source, double rho, double t, double abs_tol) {
    if (!(rho > -1.0 && rho < 1.0)) throw DomainError("rho must lie in (-1, 1)");
    if (t < 0.0) throw DomainError("joint_survival_probability requires t >= 0");
    const double s_a = party_a.hazard(source).survival(t);
    const double s_b = party_b.hazard(source).survival(t);
    if (s_a <= 0.0 || s_b <= 0.0) return 0.0;
    if (s_a >= 1.0 && s_b >= 1.0) return 1.0;

    // tau_X > t  <=>  z_X < Phi^{-1}(S_X(t))
    const double a = z_of_survival(s_a);
    const double b = z_of_survival(s_b);
    const double comp = std::sqrt(1.0 - rho * rho);
    auto integrand = [&](double z) {
        return norm_pdf(z) * norm_cdf((b - rho * z) / comp);
    };
    return integrate_adaptive(integrand, -kZCut, a, abs_tol);
}

}  // namespace xva
