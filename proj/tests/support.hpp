// Shared helpers for the test suites.

#pragma once

#include <numbers>
#include <random>

#include "biphoton/optics.hpp"

namespace biphoton::testing {

// A random convention that still satisfies the splitter unitarity constraint:
// transmission phase free, reflection phase a quarter turn away (either way),
// mirror phase free.
inline PhaseConvention random_unitary_convention(std::mt19937& gen) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::bernoulli_distribution flip;
    const double tau = angle(gen);
    const double rho = tau + (flip(gen) ? 1.0 : -1.0) * std::numbers::pi / 2.0;
    return {rho, tau, angle(gen)};
}

}  // namespace biphoton::testing
