#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace xva {

// Valuation grid t_0 < t_1 < ... < t_M with t_0 = 0 (the valuation time).
// Periods are indexed k = 1..M; period k covers the half-open bucket
// (t_{k-1}, t_k] and accrues theta_k = t_k - t_{k-1}.
class TimeGrid {
  public:
    explicit TimeGrid(std::vector<double> dates);
    static TimeGrid regular(double horizon, std::size_t periods);

    std::size_t periods() const noexcept { return thetas_.size(); }  // M
    std::size_t nodes() const noexcept { return dates_.size(); }     // M + 1
    double date(std::size_t k) const noexcept { return dates_[k]; }  // k in [0, M]
    double theta(std::size_t k) const noexcept { return thetas_[k - 1]; }  // k in [1, M]
    double horizon() const noexcept { return dates_.back(); }
    std::span<const double> dates() const noexcept { return dates_; }

    // Index k of the period with t_{k-1} < t <= t_k, or 0 when t falls
    // outside every bucket (t <= 0 or t > t_M).
    std::size_t period_containing(double t) const noexcept;

  private:
    std::vector<double> dates_;
    std::vector<double> thetas_;
};

}  // namespace xva
