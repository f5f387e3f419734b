#pragma once

#include <cstdint>
#include <vector>

#include "xva/credit.hpp"
#include "xva/time_grid.hpp"

namespace xva {

// One simulated joint default outcome. Times are strictly positive; paths
// without a default carry the finite sentinel kNoDefaultTime, which every
// indicator treats as survival.
struct DefaultScenario {
    double tau_a = kNoDefaultTime;
    double tau_b = kNoDefaultTime;
    std::uint64_t path_id = 0;
};

// First-to-default indicators. Ties go to party A, so exactly one of the two
// holds on every path; B counts as first only when strictly earlier.
inline bool a_defaults_first(const DefaultScenario& s) noexcept { return s.tau_a <= s.tau_b; }
inline bool b_defaults_first(const DefaultScenario& s) noexcept { return s.tau_b < s.tau_a; }

// Membership of tau in the right-closed bucket (t_{k-1}, t_k], k in [1..M].
inline bool defaulted_in_period(double tau, const TimeGrid& grid, std::size_t k) noexcept {
    return grid.date(k - 1) < tau && tau <= grid.date(k);
}

// Gaussian-copula joint default times. Per path, two correlated standard
// normals become uniforms and invert each party's survival curve:
// tau_X = S_X^{-1}(Phi(z_X)). Path i is a pure function of (seed, i), so any
// worker partition and any prefix of the path set reproduce identical values,
// and both spread sources consume identical copula uniforms (common random
// numbers across the CDS/ASW bases).
std::vector<DefaultScenario> simulate_default_times(const CreditParty& party_a,
                                                    const CreditParty& party_b,
                                                    SpreadSource source, double rho,
                                                    std::size_t n_paths, std::uint64_t seed,
                                                    unsigned workers = 1);

}  // namespace xva
