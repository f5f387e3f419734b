#pragma once

namespace xva {

// Discounted loss booked when a default lands in a period: lgd of the
// defaulting party times D(t0, t_{k-1}) times the survivor's positive
// exposure at the left node. The adjustment estimators and the margin-ledger
// identity checks share this one expression so their per-path samples agree
// bit for bit.
inline double realized_default_loss(double lgd, double discount_left,
                                    double exposure_pos) noexcept {
    return lgd * discount_left * exposure_pos;
}

}  // namespace xva
