#pragma once

#include <vector>

namespace xva {

// Finite stand-in for "no default within any horizon of interest". Simulated
// times never exceed it and every period indicator treats it as survival.
inline constexpr double kNoDefaultTime = 1e30;

// Piecewise-constant default intensity. lambdas[i] applies on
// [times[i], times[i+1]); the last intensity extends to infinity.
class HazardCurve {
  public:
    HazardCurve(std::vector<double> times, std::vector<double> lambdas);
    static HazardCurve flat(double lambda);

    double intensity(double t) const noexcept;
    double cumulative(double t) const noexcept;  // H(t) = int_0^t lambda(s) ds
    double survival(double t) const noexcept;    // S(t) = exp(-H(t))

    // Earliest t with S(t) <= u. Returns kNoDefaultTime when the curve cannot
    // accumulate enough hazard. Arguments u >= 1 are nudged just below 1 so
    // the result stays strictly positive.
    double inverse_survival(double u) const noexcept;

  private:
    std::vector<double> times_;
    std::vector<double> lambdas_;
    std::vector<double> cum_;   // cumulative hazard at each knot
    std::vector<double> surv_;  // exp(-cum_) at each knot
};

// Credit-triangle calibration of a flat intensity from a running spread:
// lambda = spread / (1 - recovery).
HazardCurve hazard_from_spread(double spread, double recovery);

}  // namespace xva
