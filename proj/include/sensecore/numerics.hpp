#pragma once

#include <stdexcept>
#include <string>

namespace sensecore {

// A probability, kept inside [0, 1] by construction.
class Probability {
public:
    explicit Probability(double v) : value_(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::domain_error("Probability outside [0, 1]: " + std::to_string(v));
    }
    double value() const noexcept { return value_; }

private:
    double value_;
};

// Standard normal upper-tail probability Q(x) = P(Z > x).
// Strictly decreasing; throws std::domain_error for non-finite x.
Probability q(double x);

// Inverse of q on (0, 1): |q(q_inv(p)) - p| <= 1e-10 over [1e-6, 1 - 1e-6].
// Throws std::domain_error for p <= 0 or p >= 1.
double q_inv(double p);

} // namespace sensecore
