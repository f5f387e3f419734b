#pragma once

namespace xva {

double norm_pdf(double x) noexcept;

// Standard normal CDF via erfc; accurate over the full double range.
double norm_cdf(double x) noexcept;

// Inverse standard normal CDF (Wichura's PPND16 rational minimax fits,
// accurate to roughly 1e-16 relative). Requires p in (0, 1).
double norm_cdf_inv(double p);

}  // namespace xva
