#include "xva/default_times.hpp"

#include <cmath>

#include "xva/errors.hpp"
#include "xva/normal.hpp"
#include "xva/parallel.hpp"
#include "xva/rng.hpp"

namespace xva {

std::vector<DefaultScenario> simulate_default_times(const CreditParty& party_a,
                                                    const CreditParty& party_b,
                                                    SpreadSource source, double rho,
                                                    std::size_t n_paths, std::uint64_t seed,
                                                    unsigned workers) {
    if (!(rho > -1.0 && rho < 1.0)) throw DomainError("rho must lie in (-1, 1)");
    const HazardCurve& hazard_a = party_a.hazard(source);
    const HazardCurve& hazard_b = party_b.hazard(source);
    const double comp = std::sqrt(1.0 - rho * rho);

    std::vector<DefaultScenario> out(n_paths);
    parallel_for(n_paths, workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            PathRng rng(seed, RngStream::DefaultTimes, i);
            const double z1 = norm_cdf_inv(rng.next_uniform());
            const double z2 = norm_cdf_inv(rng.next_uniform());
            const double u_a = norm_cdf(z1);
            const double u_b = norm_cdf(rho * z1 + comp * z2);
            out[i] = DefaultScenario{hazard_a.inverse_survival(u_a),
                                     hazard_b.inverse_survival(u_b), i};
        }
    });
    return out;
}

}  // namespace xva
