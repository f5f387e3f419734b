#include "xva/adjustments.hpp"

#include <cmath>
#include <utility>

#include "xva/errors.hpp"
#include "xva/parallel.hpp"
#include "xva/realized_loss.hpp"
#include "xva/summation.hpp"

namespace xva {

const char* adjustment_name(AdjustmentKind kind) noexcept {
    switch (kind) {
        case AdjustmentKind::Bcva: return "bcva";
        case AdjustmentKind::Bdva: return "bdva";
        case AdjustmentKind::Bva: return "bva";
        case AdjustmentKind::Fcva: return "fcva";
        case AdjustmentKind::Fbcva: return "fbcva";
        case AdjustmentKind::Fbdva: return "fbdva";
        case AdjustmentKind::Fbva: return "fbva";
    }
    return "unknown";
}

namespace {

enum class Trigger { A, B };

void require_common_paths(const ExposureMatrix& exposure,
                          std::span<const DefaultScenario> defaults) {
    if (exposure.n_paths() != defaults.size())
        throw ContractError("exposure and default scenarios disagree on the path count");
}

void require_lgd(double lgd) {
    if (!(lgd >= 0.0 && lgd <= 1.0)) throw DomainError("lgd must lie in [0, 1]");
}

std::vector<double> left_node_discounts(const DiscountCurve& curve, const TimeGrid& grid) {
    std::vector<double> d(grid.nodes());
    for (std::size_t k = 0; k < grid.nodes(); ++k) d[k] = curve.df(grid.date(k));
    return d;
}

// Per-path discounted loss samples for one default leg. At most one period
// bucket fires per path.
std::vector<double> default_leg_paths(const ExposureMatrix& exposure,
                                      std::span<const DefaultScenario> defaults,
                                      const DiscountCurve& curve, Trigger trigger,
                                      bool first_to_default, double lgd, unsigned workers) {
    require_common_paths(exposure, defaults);
    require_lgd(lgd);
    const TimeGrid& grid = exposure.grid();
    const std::vector<double> dfs = left_node_discounts(curve, grid);

    std::vector<double> g(defaults.size(), 0.0);
    parallel_for(defaults.size(), workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const DefaultScenario& s = defaults[i];
            const double tau = trigger == Trigger::A ? s.tau_a : s.tau_b;
            const std::size_t k = grid.period_containing(tau);
            if (k == 0) continue;
            if (first_to_default &&
                !(trigger == Trigger::A ? a_defaults_first(s) : b_defaults_first(s)))
                continue;
            const double v = exposure.at(i, k - 1);
            const double surviving_pos =
                trigger == Trigger::A ? positive_part(v) : positive_part(-v);
            g[i] = realized_default_loss(lgd, dfs[k - 1], surviving_pos);
        }
    });
    return g;
}

AdjustmentResult summarize(AdjustmentKind kind, std::vector<double> samples) {
    const SampleStats st = summarize_samples(samples);
    AdjustmentResult r;
    r.kind = kind;
    r.value = st.mean;
    r.std_error = st.std_error;
    r.n_paths = st.n;
    r.path_values = std::move(samples);
    return r;
}

AdjustmentResult paired_difference(AdjustmentKind kind, const AdjustmentResult& plus,
                                   const AdjustmentResult& minus) {
    if (plus.n_paths != minus.n_paths ||
        plus.path_values.size() != minus.path_values.size())
        throw ContractError("paired difference requires a common path set");
    std::vector<double> d(plus.path_values.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = plus.path_values[i] - minus.path_values[i];
    AdjustmentResult r = summarize(kind, std::move(d));
    // The headline value decomposes exactly; only the error uses the pairing.
    r.value = plus.value - minus.value;
    return r;
}

}  // namespace

AdjustmentResult bcva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                      const DiscountCurve& curve, double lgd_a, unsigned workers) {
    return summarize(AdjustmentKind::Bcva,
                     default_leg_paths(exposure, defaults, curve, Trigger::A, true, lgd_a, workers));
}

AdjustmentResult bdva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                      const DiscountCurve& curve, double lgd_b, unsigned workers) {
    return summarize(AdjustmentKind::Bdva,
                     default_leg_paths(exposure, defaults, curve, Trigger::B, true, lgd_b, workers));
}

AdjustmentResult fcva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                      const DiscountCurve& curve, double lgd_a, unsigned workers) {
    return summarize(AdjustmentKind::Fcva,
                     default_leg_paths(exposure, defaults, curve, Trigger::A, false, lgd_a, workers));
}

AdjustmentResult fbcva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                       const DiscountCurve& curve, double lgd_a, unsigned workers) {
    return summarize(AdjustmentKind::Fbcva,
                     default_leg_paths(exposure, defaults, curve, Trigger::A, true, lgd_a, workers));
}

AdjustmentResult fbdva(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                       const DiscountCurve& curve, double lgd_b, unsigned workers) {
    return summarize(AdjustmentKind::Fbdva,
                     default_leg_paths(exposure, defaults, curve, Trigger::B, true, lgd_b, workers));
}

AdjustmentResult bva(const AdjustmentResult& bcva_result, const AdjustmentResult& bdva_result) {
    return paired_difference(AdjustmentKind::Bva, bcva_result, bdva_result);
}

AdjustmentResult fbva(const AdjustmentResult& fbcva_result, const AdjustmentResult& fbdva_result) {
    return paired_difference(AdjustmentKind::Fbva, fbcva_result, fbdva_result);
}

double funding_annuity(const ExposureMatrix& exposure, std::span<const DefaultScenario> defaults,
                       const DiscountCurve& curve, Side side, AnnuityMode mode,
                       unsigned workers) {
    require_common_paths(exposure, defaults);
    const TimeGrid& grid = exposure.grid();
    const std::vector<double> dfs = left_node_discounts(curve, grid);

    std::vector<double> a(defaults.size(), 0.0);
    parallel_for(defaults.size(), workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const DefaultScenario& s = defaults[i];
            const double tau_borrower = side == Side::B ? s.tau_a : s.tau_b;
            double acc = 0.0;
            for (std::size_t k = 1; k <= grid.periods(); ++k) {
                const double t_prev = grid.date(k - 1);
                const bool alive = mode == AnnuityMode::Bilateral
                                       ? (s.tau_a > t_prev && s.tau_b > t_prev)
                                       : tau_borrower > t_prev;
                if (!alive) break;
                const double v = exposure.at(i, k - 1);
                const double funded_pos =
                    side == Side::B ? positive_part(v) : positive_part(-v);
                acc += grid.theta(k) * dfs[k - 1] * funded_pos;
            }
            a[i] = acc;
        }
    });
    return pairwise_sum(a) / static_cast<double>(a.empty() ? 1 : a.size());
}

FairSpreadResult fair_spread(const AdjustmentResult& adjustment, double annuity,
                             std::string party) {
    if (!(annuity >= 0.0) || !std::isfinite(annuity))
        throw DomainError("annuity must be finite and nonnegative");
    FairSpreadResult r;
    r.party = std::move(party);
    r.annuity = annuity;
    if (annuity == 0.0) {
        if (adjustment.value != 0.0)
            throw NumericalError("fair spread infeasible: zero annuity against nonzero " +
                                 std::string(adjustment_name(adjustment.kind)));
        r.spread = 0.0;  // zero-for-zero convention
    } else {
        r.spread = adjustment.value / annuity;
    }
    return r;
}

}  // namespace xva
