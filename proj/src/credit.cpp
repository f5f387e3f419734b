#include "xva/credit.hpp"

#include "xva/errors.hpp"

namespace xva {

CreditParty::CreditParty(std::string name, double recovery, double cds_spread, double asw_spread)
    : name_(std::move(name)),
      recovery_(recovery),
      hazard_cds_(hazard_from_spread(cds_spread, recovery)),
      hazard_asw_(hazard_from_spread(asw_spread, recovery)) {}

CreditParty::CreditParty(std::string name, double recovery, HazardCurve cds, HazardCurve asw)
    : name_(std::move(name)),
      recovery_(recovery),
      hazard_cds_(std::move(cds)),
      hazard_asw_(std::move(asw)) {
    if (!(recovery_ >= 0.0 && recovery_ < 1.0)) throw DomainError("recovery must lie in [0, 1)");
}

}  // namespace xva
