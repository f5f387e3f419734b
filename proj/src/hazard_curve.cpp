#include "xva/hazard_curve.hpp"

#include <cmath>
#include <limits>

#include "xva/errors.hpp"

namespace xva {

HazardCurve::HazardCurve(std::vector<double> times, std::vector<double> lambdas)
    : times_(std::move(times)), lambdas_(std::move(lambdas)) {
    if (times_.empty() || times_.size() != lambdas_.size())
        throw DomainError("hazard curve needs matching, nonempty knot arrays");
    if (times_.front() != 0.0) throw DomainError("hazard curve must start at time 0");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (i > 0 && (!std::isfinite(times_[i]) || times_[i] <= times_[i - 1]))
            throw DomainError("hazard curve knot times must be finite and strictly increasing");
        if (!std::isfinite(lambdas_[i]) || lambdas_[i] < 0.0)
            throw DomainError("hazard intensities must be finite and nonnegative");
    }
    cum_.resize(times_.size(), 0.0);
    for (std::size_t i = 1; i < times_.size(); ++i)
        cum_[i] = cum_[i - 1] + lambdas_[i - 1] * (times_[i] - times_[i - 1]);
    surv_.resize(times_.size());
    for (std::size_t i = 0; i < times_.size(); ++i) surv_[i] = std::exp(-cum_[i]);
}

HazardCurve HazardCurve::flat(double lambda) { return HazardCurve({0.0}, {lambda}); }

double HazardCurve::intensity(double t) const noexcept {
    if (t <= times_.front()) return lambdas_.front();
    std::size_t i = times_.size() - 1;
    while (i > 0 && times_[i] > t) --i;
    return lambdas_[i];
}

double HazardCurve::cumulative(double t) const noexcept {
    if (t <= 0.0) return 0.0;
    std::size_t i = times_.size() - 1;
    while (i > 0 && times_[i] > t) --i;
    return cum_[i] + lambdas_[i] * (t - times_[i]);
}

double HazardCurve::survival(double t) const noexcept { return std::exp(-cumulative(t)); }

double HazardCurve::inverse_survival(double u) const noexcept {
    if (u >= 1.0) u = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
    if (u <= 0.0) return kNoDefaultTime;
    const double target = -std::log(u);  // > 0

    // Locate the crossing segment by comparing survival levels at the knots,
    // not cumulative hazards: u values that arrive via exp(-H) can round a
    // hair past a knot's cumulative hazard after the log round trip, which
    // would skip a zero-intensity plateau and surface at its far end.
    const std::size_t n = times_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (surv_[i + 1] <= u) {
            // Crossing inside segment i. At or above the left-knot level the
            // earliest time attaining u is the knot itself; below it the
            // segment loses mass, so lambda > 0 and the division is safe.
            if (u >= surv_[i]) return times_[i];
            const double t = times_[i] + (target - cum_[i]) / lambdas_[i];
            return t < kNoDefaultTime ? t : kNoDefaultTime;
        }
    }
    if (lambdas_.back() <= 0.0) return kNoDefaultTime;
    const double t = times_.back() + (target - cum_.back()) / lambdas_.back();
    return t < kNoDefaultTime ? t : kNoDefaultTime;
}

HazardCurve hazard_from_spread(double spread, double recovery) {
    if (!(recovery >= 0.0 && recovery < 1.0)) throw DomainError("recovery must lie in [0, 1)");
    if (!(spread >= 0.0) || !std::isfinite(spread)) throw DomainError("spread must be finite and nonnegative");
    return HazardCurve::flat(spread / (1.0 - recovery));
}

}  // namespace xva
