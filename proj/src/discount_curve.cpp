#include "xva/discount_curve.hpp"

#include <algorithm>
#include <cmath>

#include "xva/errors.hpp"

namespace xva {

DiscountCurve::DiscountCurve(std::vector<double> times, std::vector<double> zero_rates)
    : times_(std::move(times)), zeros_(std::move(zero_rates)) {
    if (times_.empty() || times_.size() != zeros_.size())
        throw DomainError("discount curve needs matching, nonempty pillar arrays");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!std::isfinite(times_[i]) || times_[i] < 0.0)
            throw DomainError("discount curve pillar times must be finite and nonnegative");
        if (i > 0 && times_[i] <= times_[i - 1])
            throw DomainError("discount curve pillar times must be strictly increasing");
        if (!std::isfinite(zeros_[i])) throw DomainError("discount curve zero rates must be finite");
    }
}

DiscountCurve DiscountCurve::flat(double zero_rate) { return DiscountCurve({0.0}, {zero_rate}); }

double DiscountCurve::zero_rate(double t) const noexcept {
    if (t <= times_.front()) return zeros_.front();
    if (t >= times_.back()) return zeros_.back();
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - times_.begin());
    const double w = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
    return zeros_[i - 1] + w * (zeros_[i] - zeros_[i - 1]);
}

double DiscountCurve::df(double t) const noexcept { return std::exp(-zero_rate(t) * t); }

double DiscountCurve::discount(double t1, double t2) const {
    if (t2 < t1) throw DomainError("discount(t1, t2) requires t1 <= t2");
    return df(t2) / df(t1);
}

double forward_accrual_rate(const DiscountCurve& curve, const TimeGrid& grid, std::size_t k) {
    if (k < 1 || k > grid.periods()) throw DomainError("forward_accrual_rate: period index out of range");
    const double ratio = curve.df(grid.date(k - 1)) / curve.df(grid.date(k));
    return (ratio - 1.0) / grid.theta(k);
}

}  // namespace xva
