#include "xva/time_grid.hpp"

#include <algorithm>
#include <cmath>

#include "xva/errors.hpp"

namespace xva {

TimeGrid::TimeGrid(std::vector<double> dates) : dates_(std::move(dates)) {
    if (dates_.size() < 2) throw DomainError("time grid needs at least two dates");
    if (dates_.front() != 0.0) throw DomainError("time grid must start at the valuation time 0");
    for (std::size_t k = 1; k < dates_.size(); ++k) {
        if (!std::isfinite(dates_[k]) || dates_[k] <= dates_[k - 1])
            throw DomainError("time grid dates must be finite and strictly increasing");
    }
    thetas_.resize(dates_.size() - 1);
    for (std::size_t k = 1; k < dates_.size(); ++k) thetas_[k - 1] = dates_[k] - dates_[k - 1];
}

TimeGrid TimeGrid::regular(double horizon, std::size_t periods) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw DomainError("grid horizon must be positive");
    if (periods == 0) throw DomainError("grid needs at least one period");
    std::vector<double> dates(periods + 1);
    for (std::size_t k = 0; k <= periods; ++k)
        dates[k] = horizon * (static_cast<double>(k) / static_cast<double>(periods));
    dates.back() = horizon;
    return TimeGrid(std::move(dates));
}

std::size_t TimeGrid::period_containing(double t) const noexcept {
    // Buckets are right-closed: t exactly on t_k belongs to period k.
    const auto it = std::lower_bound(dates_.begin(), dates_.end(), t);
    if (it == dates_.begin() || it == dates_.end()) return 0;
    return static_cast<std::size_t>(it - dates_.begin());
}

}  // namespace xva
