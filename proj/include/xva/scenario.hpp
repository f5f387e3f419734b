#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xva/credit.hpp"
#include "xva/discount_curve.hpp"
#include "xva/product.hpp"
#include "xva/time_grid.hpp"

namespace xva {

struct PartySpec {
    std::string name;
    double recovery = 0.0;
    double cds_spread = 0.0;
    double asw_spread = 0.0;
};

// A fully resolved run configuration. Parsing keeps plain arrays so a
// scenario can be inspected or re-serialized without touching the market
// objects; the make_* helpers construct those on demand and revalidate.
struct Scenario {
    std::vector<double> grid_dates;
    std::vector<double> curve_times;
    std::vector<double> curve_zero_rates;
    PartySpec party_a;
    PartySpec party_b;
    double rho = 0.0;
    Product product;
    std::uint64_t n_paths = 0;
    std::uint64_t seed = 0;
    // Non-fatal observations collected while parsing (e.g. a party quoted
    // with ASW below CDS, which flips the sign of the funding basis).
    std::vector<std::string> warnings;

    TimeGrid make_grid() const;
    DiscountCurve make_curve() const;
    CreditParty make_party_a() const;
    CreditParty make_party_b() const;
};

// Both throw ConfigError with the offending field spelled out.
Scenario scenario_from_json_text(const std::string& text);
Scenario load_scenario(const std::string& path);

}  // namespace xva
