#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "xva/discount_curve.hpp"
#include "xva/product.hpp"
#include "xva/time_grid.hpp"

namespace xva {

// Which party's books a value is read from. Only B's mark V0_B is stored;
// A's mark is its negation.
enum class Side { A, B };

inline double positive_part(double v) noexcept { return v > 0.0 ? v : 0.0; }

// n_paths x (M+1) matrix of V0_B(t_k), path-major.
class ExposureMatrix {
  public:
    ExposureMatrix(TimeGrid grid, std::size_t n_paths);

    const TimeGrid& grid() const noexcept { return grid_; }
    std::size_t n_paths() const noexcept { return n_paths_; }

    double at(std::size_t path, std::size_t node) const noexcept {
        return values_[path * grid_.nodes() + node];
    }
    double& at(std::size_t path, std::size_t node) noexcept {
        return values_[path * grid_.nodes() + node];
    }
    std::span<const double> row(std::size_t path) const noexcept {
        return {values_.data() + path * grid_.nodes(), grid_.nodes()};
    }

  private:
    TimeGrid grid_;
    std::size_t n_paths_;
    std::vector<double> values_;
};

// Elementwise [V0_side]^+ = max(V0_side, 0); V0_A = -V0_B, so the two views
// decompose the stored mark as pos(v) - pos(-v) = v.
ExposureMatrix positive_part_view(const ExposureMatrix& m, Side side);

// V0_B(t_k) for every path at every grid node (exposures are read at the
// left end of each period, node k-1 for period k). Deterministic products
// produce identical rows. The GBM forward draws from the exposure RNG
// stream, disjoint from the default-time stream, with path i a pure function
// of (seed, i).
ExposureMatrix simulate_exposure(const Product& product, const DiscountCurve& curve,
                                 const TimeGrid& grid, std::size_t n_paths, std::uint64_t seed,
                                 unsigned workers = 1);

}  // namespace xva
