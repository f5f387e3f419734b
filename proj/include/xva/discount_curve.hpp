#pragma once

#include <cstddef>
#include <vector>

#include "xva/time_grid.hpp"

namespace xva {

// Deterministic discounting from continuously compounded zero rates. Rates
// interpolate linearly between pillars and extrapolate flat beyond them, so
// D(t1, t2) = df(t2) / df(t1) is multiplicative by construction.
class DiscountCurve {
  public:
    DiscountCurve(std::vector<double> times, std::vector<double> zero_rates);
    static DiscountCurve flat(double zero_rate);

    double zero_rate(double t) const noexcept;

    // D(0, t) = exp(-z(t) * t); df(0) == 1 exactly.
    double df(double t) const noexcept;

    // D(t1, t2) for t1 <= t2.
    double discount(double t1, double t2) const;

  private:
    std::vector<double> times_;
    std::vector<double> zeros_;
};

// Simple forward rate accruing over period k, defined from the curve itself:
//   eps_{k-1} = (D(t0, t_{k-1}) / D(t0, t_k) - 1) / theta_k
// so D(t0, t_k) * (1 + theta_k * eps_{k-1}) reproduces D(t0, t_{k-1}) up to
// a few ulps. Margin-loan interest accrues at this rate, which is what makes
// the ledger cash flows telescope against the discount curve.
double forward_accrual_rate(const DiscountCurve& curve, const TimeGrid& grid, std::size_t k);

}  // namespace xva
