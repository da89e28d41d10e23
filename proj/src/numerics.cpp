#include "sensecore/numerics.hpp"

#include <cmath>

namespace sensecore {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

// Inverse standard normal CDF (Acklam approximation, ~1.15e-9 relative
// error). Serves as the initial guess; Newton steps on q() finish the job.
double inv_norm_cdf(double p) {
    static const double a1 = -39.69683028665376, a2 = 220.9460984245205, a3 = -275.9285104469687,
                        a4 = 138.3577518672690, a5 = -30.66479806614716, a6 = 2.506628277459239;
    static const double b1 = -54.47609879822406, b2 = 161.5858368580409, b3 = -155.6989798598866,
                        b4 = 66.80131188771972, b5 = -13.28068155288572;
    static const double c1 = -7.784894002430293e-03, c2 = -3.223964580411365e-01,
                        c3 = -2.400758277161838, c4 = -2.549732539343734, c5 = 4.374664141464968,
                        c6 = 2.938163982698783;
    static const double d1 = 7.784695709041462e-03, d2 = 3.224671290700398e-01,
                        d3 = 2.445134137142996, d4 = 3.754408661907416;
    const double plow = 0.02425, phigh = 1 - plow;
    double r, x;
    if (p < plow) {
        r = std::sqrt(-2 * std::log(p));
        x = (((((c1 * r + c2) * r + c3) * r + c4) * r + c5) * r + c6) /
            ((((d1 * r + d2) * r + d3) * r + d4) * r + 1);
    } else if (p > phigh) {
        r = std::sqrt(-2 * std::log(1 - p));
        x = -(((((c1 * r + c2) * r + c3) * r + c4) * r + c5) * r + c6) /
            ((((d1 * r + d2) * r + d3) * r + d4) * r + 1);
    } else {
        r = p - 0.5;
        double s = r * r;
        x = (((((a1 * s + a2) * s + a3) * s + a4) * s + a5) * s + a6) * r /
            (((((b1 * s + b2) * s + b3) * s + b4) * s + b5) * s + 1);
    }
    return x;
}

} // namespace

Probability q(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("q: argument must be finite");
    return Probability(0.5 * std::erfc(x * kInvSqrt2));
}

double q_inv(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("q_inv: p must lie strictly inside (0, 1)");
    // Q(x) = 1 - Phi(x), so Q^{-1}(p) = -Phi^{-1}(p).
    double x = -inv_norm_cdf(p);
    // Newton on f(x) = q(x) - p with f'(x) = -pdf(x).
    for (int i = 0; i < 2; ++i) {
        const double pdf = norm_pdf(x);
        if (pdf <= 0.0)
            break; // pdf underflow far in the tails; Acklam estimate stands
        x += (q(x).value() - p) / pdf;
    }
    return x;
}

} // namespace sensecore
