#include "xva/exposure.hpp"

#include <cmath>
#include <string>

#include "xva/errors.hpp"
#include "xva/normal.hpp"
#include "xva/parallel.hpp"
#include "xva/rng.hpp"

namespace xva {

ExposureMatrix::ExposureMatrix(TimeGrid grid, std::size_t n_paths)
    : grid_(std::move(grid)), n_paths_(n_paths), values_(n_paths * grid_.nodes(), 0.0) {}

ExposureMatrix positive_part_view(const ExposureMatrix& m, Side side) {
    ExposureMatrix out(m.grid(), m.n_paths());
    const std::size_t nodes = m.grid().nodes();
    for (std::size_t p = 0; p < m.n_paths(); ++p)
        for (std::size_t k = 0; k < nodes; ++k) {
            const double v = m.at(p, k);
            out.at(p, k) = side == Side::B ? positive_part(v) : positive_part(-v);
        }
    return out;
}

namespace {

void require_grid_maturity(double maturity, const TimeGrid& grid) {
    if (maturity != grid.horizon())
        throw ConfigError("product.maturity must equal the grid horizon " +
                          std::to_string(grid.horizon()));
}

ExposureMatrix broadcast_row(const std::vector<double>& row, const TimeGrid& grid,
                             std::size_t n_paths) {
    ExposureMatrix out(grid, n_paths);
    for (std::size_t p = 0; p < n_paths; ++p)
        for (std::size_t k = 0; k < row.size(); ++k) out.at(p, k) = row[k];
    return out;
}

ExposureMatrix simulate_profile(const DeterministicProfile& profile, const TimeGrid& grid,
                                std::size_t n_paths) {
    if (profile.values.size() != grid.nodes())
        throw ConfigError("product.values must list one value per grid date (" +
                          std::to_string(grid.nodes()) + " expected)");
    for (double v : profile.values)
        if (!std::isfinite(v)) throw ConfigError("product.values must be finite");
    return broadcast_row(profile.values, grid, n_paths);
}

ExposureMatrix simulate_bullet(const BulletLoan& bullet, const DiscountCurve& curve,
                               const TimeGrid& grid, std::size_t n_paths) {
    require_grid_maturity(bullet.maturity, grid);
    if (!std::isfinite(bullet.notional)) throw ConfigError("product.notional must be finite");
    std::vector<double> row(grid.nodes());
    for (std::size_t k = 0; k < grid.nodes(); ++k)
        row[k] = bullet.notional * curve.discount(grid.date(k), grid.horizon());
    return broadcast_row(row, grid, n_paths);
}

ExposureMatrix simulate_gbm(const GbmForward& fwd, const DiscountCurve& curve,
                            const TimeGrid& grid, std::size_t n_paths, std::uint64_t seed,
                            unsigned workers) {
    require_grid_maturity(fwd.maturity, grid);
    if (!(fwd.spot > 0.0) || !std::isfinite(fwd.spot))
        throw ConfigError("product.spot must be positive");
    if (!(fwd.volatility >= 0.0) || !std::isfinite(fwd.volatility))
        throw ConfigError("product.volatility must be nonnegative");
    if (!std::isfinite(fwd.strike)) throw ConfigError("product.strike must be finite");

    const std::size_t m = grid.periods();
    // Per-period growth at the curve's forward rate and strike leg D(t_k, t_M),
    // precomputed once so every path sees identical factors.
    std::vector<double> growth(m + 1, 1.0), strike_leg(m + 1, 0.0), sqrt_theta(m + 1, 0.0);
    for (std::size_t k = 1; k <= m; ++k) {
        growth[k] = curve.df(grid.date(k - 1)) / curve.df(grid.date(k));
        sqrt_theta[k] = std::sqrt(grid.theta(k));
    }
    for (std::size_t k = 0; k <= m; ++k)
        strike_leg[k] = fwd.strike * curve.discount(grid.date(k), grid.horizon());

    const double vol = fwd.volatility;
    ExposureMatrix out(grid, n_paths);
    parallel_for(n_paths, workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t p = lo; p < hi; ++p) {
            PathRng rng(seed, RngStream::Exposure, p);
            double s = fwd.spot;
            out.at(p, 0) = s - strike_leg[0];
            for (std::size_t k = 1; k <= m; ++k) {
                double shock = 1.0;
                if (vol > 0.0) {
                    const double z = norm_cdf_inv(rng.next_uniform());
                    shock = std::exp(vol * sqrt_theta[k] * z -
                                     0.5 * vol * vol * grid.theta(k));
                }
                s *= growth[k] * shock;
                out.at(p, k) = s - strike_leg[k];
            }
        }
    });
    return out;
}

}  // namespace

ExposureMatrix simulate_exposure(const Product& product, const DiscountCurve& curve,
                                 const TimeGrid& grid, std::size_t n_paths, std::uint64_t seed,
                                 unsigned workers) {
    if (const auto* profile = std::get_if<DeterministicProfile>(&product))
        return simulate_profile(*profile, grid, n_paths);
    if (const auto* bullet = std::get_if<BulletLoan>(&product))
        return simulate_bullet(*bullet, curve, grid, n_paths);
    return simulate_gbm(std::get<GbmForward>(product), curve, grid, n_paths, seed, workers);
}

}  // namespace xva
