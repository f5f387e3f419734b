#include "xva/quadrature.hpp"

#include <cmath>

#include "xva/errors.hpp"

namespace xva {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kronrod = kWeightsK[7] * f(c);
    double gauss = kWeightsG[3] * f(c);
    for (int j = 0; j < 7; ++j) {
        const double x = h * kNodes[j];
        const double pair = f(c - x) + f(c + x);
        kronrod += kWeightsK[j] * pair;
        if (j % 2 == 1) gauss += kWeightsG[j / 2] * pair;
    }
    return {kronrod * h, std::fabs((kronrod - gauss) * h)};
}

double integrate_panel(const std::function<double(double)>& f, double a, double b,
                       double abs_tol, int depth) {
    const PanelResult r = gauss_kronrod(f, a, b);
    if (r.error <= abs_tol) return r.integral;
    if (depth >= 48) throw NumericalError("adaptive quadrature failed to converge");
    const double c = 0.5 * (a + b);
    return integrate_panel(f, a, c, 0.5 * abs_tol, depth + 1) +
           integrate_panel(f, c, b, 0.5 * abs_tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol) {
    if (!(abs_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
    if (!(a <= b)) throw DomainError("quadrature interval must satisfy a <= b");
    if (a == b) return 0.0;
    return integrate_panel(f, a, b, abs_tol, 0);
}

}  // namespace xva
