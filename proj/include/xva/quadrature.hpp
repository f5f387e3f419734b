#pragma once

#include <functional>

namespace xva {

// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b] to an absolute
// tolerance. Throws NumericalError if bisection cannot reach the tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

}  // namespace xva
