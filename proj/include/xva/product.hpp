#pragma once

#include <variant>
#include <vector>

namespace xva {

// Mark-to-market profile given directly, one value of V0_B per grid node.
struct DeterministicProfile {
    std::vector<double> values;
};

// Zero-coupon bullet repaying `notional` at maturity, which must coincide
// with the grid horizon: V0_B(t_k) = notional * D(t_k, t_M).
struct BulletLoan {
    double notional = 0.0;
    double maturity = 0.0;
};

// Forward on a lognormal asset struck at `strike`, maturing at the grid
// horizon: V0_B(t_k) = S(t_k) - strike * D(t_k, t_M). The asset grows at the
// curve's forward rate over each period, so discounted values are
// martingales and the zero-volatility path is S(t) = spot / D(0, t).
struct GbmForward {
    double spot = 0.0;
    double strike = 0.0;
    double volatility = 0.0;
    double maturity = 0.0;
};

using Product = std::variant<DeterministicProfile, BulletLoan, GbmForward>;

}  // namespace xva
