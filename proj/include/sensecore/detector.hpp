#pragma once

#include "sensecore/signals.hpp"

namespace sensecore {

struct DetectorConfig {
    double p = 2.0;         // statistic exponent; p = 2 is the conventional energy detector
    double threshold = 0.0; // lambda, statistic units
};

enum class Occupancy { Occupied, Vacant };

struct Decision {
    Occupancy tag = Occupancy::Vacant;
    double statistic = 0.0;
};

// Generalized energy statistic (1/N) sum |y(n)|^p. Compensated summation
// keeps large-N Monte Carlo accumulations from drifting.
double energy_statistic(const SampleBlock& block, double p);

// Occupied iff statistic > threshold; a tie resolves to Vacant.
Decision decide(double statistic, double threshold);

} // namespace sensecore
