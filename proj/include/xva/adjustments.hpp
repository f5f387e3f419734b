#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "xva/default_times.hpp"
#include "xva/discount_curve.hpp"
#include "xva/exposure.hpp"

namespace xva {

enum class AdjustmentKind { Bcva, Bdva, Bva, Fcva, Fbcva, Fbdva, Fbva };
const char* adjustment_name(AdjustmentKind kind) noexcept;

// Monte Carlo estimate together with the per-path samples it was reduced
// from. Keeping the samples makes paired differences, bit-exact reduction
// checks, and covariance-aware standard errors possible downstream.
struct AdjustmentResult {
    AdjustmentKind kind = AdjustmentKind::Bcva;
    double value = 0.0;
    double std_error = 0.0;
    std::size_t n_paths = 0;
    std::vector<double> path_values;
};

struct FairSpreadResult {
    std::string party;
    double spread = 0.0;
    double annuity = 0.0;
};

// Expected discounted first-to-default loss legs. Defaults are bucketed into
// (t_{k-1}, t_k] and hit the survivor's positive exposure at the left node:
//   bcva:  lgd_a * 1{A defaults in k, no later than B} * D(t0,t_{k-1}) * [V0_B]^+
//   bdva:  lgd_b * 1{B defaults in k, strictly before A} * D(t0,t_{k-1}) * [V0_A]^+
// fbcva/fbdva are the same estimators; only the hazard source behind the
// supplied default scenarios differs (funded legs are driven by asset-swap
// intensities). fcva drops the first-to-default condition: party A's own
// bucket alone decides the loss, whatever B does.
AdjustmentResult bcva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                      const DiscountCurve& curve, double lgd_a, unsigned workers = 1);
AdjustmentResult bdva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                      const DiscountCurve& curve, double lgd_b, unsigned workers = 1);
AdjustmentResult fcva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                      const DiscountCurve& curve, double lgd_a, unsigned workers = 1);
AdjustmentResult fbcva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                       const DiscountCurve& curve, double lgd_a, unsigned workers = 1);
AdjustmentResult fbdva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                       const DiscountCurve& curve, double lgd_b, unsigned workers = 1);

// Paired differences on a common path set: value is the exact difference of
// the two values; the standard error comes from per-path differences, which
// captures the covariance of the two legs.
AdjustmentResult bva(const AdjustmentResult& bcva_result, const AdjustmentResult& bdva_result);
AdjustmentResult fbva(const AdjustmentResult& fbcva_result, const AdjustmentResult& fbdva_result);

enum class AnnuityMode { Unilateral, Bilateral };

// Expected discounted premium leg paid in advance on the funded collateral:
//   mean over paths of sum_k theta_k * 1{alive at t_{k-1}} * D(t0,t_{k-1}) * [V0_side]^+.
// Side B collateral is borrowed by party A and vice versa; unilateral mode
// checks only the borrower's survival, bilateral mode both parties'.
double funding_annuity(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                       const DiscountCurve& curve, Side side, AnnuityMode mode,
                       unsigned workers = 1);

// Flat spread with spread * annuity = adjustment. A zero annuity yields
// spread 0 when the adjustment is zero too and is infeasible otherwise.
FairSpreadResult fair_spread(const AdjustmentResult& adjustment, double annuity,
                             std::string party);

}  // namespace xva
