#pragma once

#include <string>

#include "xva/hazard_curve.hpp"

namespace xva {

// Which quoted spread feeds a party's default intensity: CDS quotes for the
// classic adjustments, asset-swap quotes for the funded ones. The two curves
// of one party usually differ (the CDS/ASW basis).
enum class SpreadSource { Cds, Asw };

class CreditParty {
  public:
    // Flat intensities calibrated from running spreads via the credit triangle.
    CreditParty(std::string name, double recovery, double cds_spread, double asw_spread);

    // General piecewise-constant curves.
    CreditParty(std::string name, double recovery, HazardCurve cds, HazardCurve asw);

    const std::string& name() const noexcept { return name_; }
    double recovery() const noexcept { return recovery_; }
    double lgd() const noexcept { return 1.0 - recovery_; }

    const HazardCurve& hazard(SpreadSource source) const noexcept {
        return source == SpreadSource::Cds ? hazard_cds_ : hazard_asw_;
    }

  private:
    std::string name_;
    double recovery_;
    HazardCurve hazard_cds_;
    HazardCurve hazard_asw_;
};

}  // namespace xva
