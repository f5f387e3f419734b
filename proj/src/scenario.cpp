#include "xva/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "xva/errors.hpp"

namespace xva {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ConfigError("scenario field '" + field + "': " + what);
}

const json& require_field(const json& parent, const std::string& path, const char* key) {
    auto it = parent.find(key);
    if (it == parent.end()) fail(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

double require_number(const json& parent, const std::string& path, const char* key) {
    const json& node = require_field(parent, path, key);
    if (!node.is_number()) fail(path.empty() ? key : path + "." + key, "must be a number");
    const double v = node.get<double>();
    if (!std::isfinite(v)) fail(path.empty() ? key : path + "." + key, "must be finite");
    return v;
}

std::uint64_t require_count(const json& parent, const std::string& path, const char* key) {
    const json& node = require_field(parent, path, key);
    if (!node.is_number_unsigned() && !node.is_number_integer()) {
        fail(path.empty() ? key : path + "." + key, "must be a non-negative integer");
    }
    if (node.is_number_integer() && node.get<std::int64_t>() < 0) {
        fail(path.empty() ? key : path + "." + key, "must be a non-negative integer");
    }
    return node.get<std::uint64_t>();
}

std::vector<double> number_array(const json& node, const std::string& path) {
    if (!node.is_array() || node.empty()) fail(path, "must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(node.size());
    for (const json& x : node) {
        if (!x.is_number() || !std::isfinite(x.get<double>())) {
            fail(path, "must contain only finite numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

std::vector<double> parse_grid(const json& root) {
    const json& grid = require_field(root, "", "grid");
    if (grid.contains("dates")) {
        return number_array(grid["dates"], "grid.dates");
    }
    const double start = grid.contains("start") ? require_number(grid, "grid", "start") : 0.0;
    const double end = require_number(grid, "grid", "end");
    const double step = require_number(grid, "grid", "step");
    if (start != 0.0) fail("grid.start", "must be 0");
    if (!(end > start)) fail("grid.end", "must exceed grid.start");
    if (!(step > 0.0)) fail("grid.step", "must be positive");
    const double ratio = (end - start) / step;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::fabs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
        fail("grid.step", "must divide the interval into whole periods");
    }
    const auto periods = static_cast<std::size_t>(rounded);
    std::vector<double> dates(periods + 1);
    for (std::size_t k = 0; k <= periods; ++k) {
        dates[k] = end * (static_cast<double>(k) / static_cast<double>(periods));
    }
    dates.back() = end;
    return dates;
}

void parse_curve(const json& root, Scenario& scenario) {
    const json& curve = require_field(root, "", "discount_curve");
    const json& pillars = require_field(curve, "discount_curve", "pillars");
    if (!pillars.is_array() || pillars.empty()) {
        fail("discount_curve.pillars", "must be a non-empty array");
    }
    for (std::size_t i = 0; i < pillars.size(); ++i) {
        const std::string path = "discount_curve.pillars[" + std::to_string(i) + "]";
        const json& p = pillars[i];
        if (!p.is_object()) fail(path, "must be an object");
        scenario.curve_times.push_back(require_number(p, path, "time"));
        scenario.curve_zero_rates.push_back(require_number(p, path, "zero_rate"));
    }
}

PartySpec parse_party(const json& root, const char* key, std::vector<std::string>& warnings) {
    const json& node = require_field(root, "", key);
    if (!node.is_object()) fail(key, "must be an object");
    PartySpec spec;
    const json& name = require_field(node, key, "name");
    if (!name.is_string() || name.get<std::string>().empty()) {
        fail(std::string(key) + ".name", "must be a non-empty string");
    }
    spec.name = name.get<std::string>();
    spec.recovery = require_number(node, key, "recovery");
    spec.cds_spread = require_number(node, key, "cds_spread");
    spec.asw_spread = require_number(node, key, "asw_spread");
    if (spec.asw_spread < spec.cds_spread) {
        warnings.push_back(spec.name +
                           ": asw_spread below cds_spread (negative basis); funded charges will "
                           "sit below their unfunded counterparts");
    }
    return spec;
}

Product parse_product(const json& root) {
    const json& node = require_field(root, "", "product");
    if (!node.is_object()) fail("product", "must be an object");
    const json& type = require_field(node, "product", "type");
    if (!type.is_string()) fail("product.type", "must be a string");
    const std::string kind = type.get<std::string>();
    if (kind == "deterministic_profile") {
        DeterministicProfile profile;
        profile.values = number_array(require_field(node, "product", "values"), "product.values");
        return profile;
    }
    if (kind == "bullet_loan") {
        BulletLoan loan;
        loan.notional = require_number(node, "product", "notional");
        loan.maturity = require_number(node, "product", "maturity");
        return loan;
    }
    if (kind == "gbm_forward") {
        GbmForward fwd;
        fwd.spot = require_number(node, "product", "spot");
        fwd.strike = require_number(node, "product", "strike");
        fwd.volatility = require_number(node, "product", "volatility");
        fwd.maturity = require_number(node, "product", "maturity");
        return fwd;
    }
    fail("product.type",
         "unknown type '" + kind +
             "' (expected deterministic_profile, bullet_loan, or gbm_forward)");
}

}  // namespace

TimeGrid Scenario::make_grid() const { return TimeGrid(grid_dates); }

DiscountCurve Scenario::make_curve() const { return DiscountCurve(curve_times, curve_zero_rates); }

CreditParty Scenario::make_party_a() const {
    return CreditParty(party_a.name, party_a.recovery, party_a.cds_spread, party_a.asw_spread);
}

CreditParty Scenario::make_party_b() const {
    return CreditParty(party_b.name, party_b.recovery, party_b.cds_spread, party_b.asw_spread);
}

Scenario scenario_from_json_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("scenario is not valid JSON: ") + err.what());
    }
    if (!root.is_object()) throw ConfigError("scenario must be a JSON object");

    Scenario scenario;
    scenario.grid_dates = parse_grid(root);
    parse_curve(root, scenario);
    scenario.party_a = parse_party(root, "party_a", scenario.warnings);
    scenario.party_b = parse_party(root, "party_b", scenario.warnings);
    scenario.rho = require_number(root, "", "rho");
    if (!(scenario.rho > -1.0 && scenario.rho < 1.0)) {
        fail("rho", "must lie strictly between -1 and 1");
    }
    scenario.product = parse_product(root);
    scenario.n_paths = require_count(root, "", "n_paths");
    if (scenario.n_paths == 0) fail("n_paths", "must be at least 1");
    scenario.seed = require_count(root, "", "seed");

    // Validate the derived objects eagerly so a bad file fails at load time
    // with a ConfigError instead of deep inside a run.
    try {
        const TimeGrid grid = scenario.make_grid();
        scenario.make_curve();
        scenario.make_party_a();
        scenario.make_party_b();
        if (const auto* profile = std::get_if<DeterministicProfile>(&scenario.product)) {
            if (profile->values.size() != grid.nodes()) {
                fail("product.values", "must list one value per grid date");
            }
        }
        if (const auto* loan = std::get_if<BulletLoan>(&scenario.product)) {
            if (loan->maturity != grid.horizon()) {
                fail("product.maturity", "must equal the grid horizon");
            }
        }
        if (const auto* fwd = std::get_if<GbmForward>(&scenario.product)) {
            if (fwd->maturity != grid.horizon()) {
                fail("product.maturity", "must equal the grid horizon");
            }
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& err) {
        throw ConfigError(std::string("scenario is inconsistent: ") + err.what());
    }
    return scenario;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return scenario_from_json_text(buffer.str());
}

}  // namespace xva
