#pragma once

#include <cstddef>

#include "xva/credit.hpp"
#include "xva/time_grid.hpp"

namespace xva {

enum class FirstToDefault { AFirst, BFirst };

// Semi-analytic reference probability that the named party defaults inside
// period k, i.e. in (t_{k-1}, t_k], and no later than the other party, under
// the Gaussian copula. Conditioning on the named party's normal factor turns
// the other dimension into a closed-form conditional normal CDF; the
// remaining dimension is integrated adaptively to abs_tol. Ties between the
// two default times carry no probability mass, so AFirst and BFirst partition
// the joint-default event exactly, and swapping the two parties swaps the two
// labels by construction.
double default_partition_probability(const CreditParty& party_a, const CreditParty& party_b,
                                     SpreadSource source, double rho, const TimeGrid& grid,
                                     std::size_t k, FirstToDefault who, double abs_tol = 1e-10);

// P(tau_A > t and tau_B > t) by the same reduction.
double joint_survival_probability(const CreditParty& party_a, const CreditParty& party_b,
                                  SpreadSource source, double rho, double t,
                                  double abs_tol = 1e-10);

}  // namespace xva
