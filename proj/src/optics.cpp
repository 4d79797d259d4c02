#include "biphoton/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biphoton {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::size_t port_index(Mode m) {
    return static_cast<std::size_t>(mode_index(m) - 1);
}

}  // namespace

PhaseConvention PhaseConvention::standard() {
    return {std::numbers::pi / 2.0, 0.0, std::numbers::pi};
}

bool PhaseConvention::is_unitary(double tol) const {
    // Unitarity of the symmetric splitter forces the reflected and
    // transmitted amplitudes to be orthogonal in phase.
    return std::abs(std::cos(bs_transmission_phase - bs_reflection_phase)) < tol;
}

OpticalElement beam_splitter() {
    return {ElementKind::BeamSplitter5050, 0.0, Mode::One, false};
}

OpticalElement mirror(bool swap_ports) {
    return {ElementKind::Mirror, 0.0, Mode::One, swap_ports};
}

OpticalElement phase_shifter(double shift, Mode target) {
    if (target == Mode::Ready) {
        throw std::invalid_argument("phase shifter must target a path mode");
    }
    return {ElementKind::PhaseShifter, shift, target, false};
}

Mode other_mode(Mode m) {
    return mode_from_index(3 - mode_index(m));
}

ComplexMatrix element_unitary(const OpticalElement& e, const PhaseConvention& c) {
    ComplexMatrix u(2);
    switch (e.kind) {
        case ElementKind::BeamSplitter5050: {
            const Amplitude t = kInvSqrt2 * std::polar(1.0, c.bs_transmission_phase);
            const Amplitude r = kInvSqrt2 * std::polar(1.0, c.bs_reflection_phase);
            u(0, 0) = t;
            u(1, 1) = t;
            u(0, 1) = r;
            u(1, 0) = r;
            return u;
        }
        case ElementKind::Mirror: {
            const Amplitude m = std::polar(1.0, c.mirror_phase);
            if (e.swap_ports) {
                u(0, 1) = m;
                u(1, 0) = m;
            } else {
                u(0, 0) = m;
                u(1, 1) = m;
            }
            return u;
        }
        case ElementKind::PhaseShifter: {
            u(0, 0) = 1.0;
            u(1, 1) = 1.0;
            const std::size_t i = port_index(e.target);
            u(i, i) = std::polar(1.0, e.shift);
            return u;
        }
    }
    throw std::invalid_argument("unknown element kind");
}

PathStep through_step(const OpticalElement& e, Mode m) { return {e, m, m}; }

PathStep cross_step(const OpticalElement& e, Mode in_mode) {
    return {e, in_mode, other_mode(in_mode)};
}

Amplitude step_amplitude(const PathStep& step, const PhaseConvention& c) {
    // Validates the traversal; the index calls reject Ready modes.
    const std::size_t in = port_index(step.in);
    const std::size_t out = port_index(step.out);
    switch (step.element.kind) {
        case ElementKind::BeamSplitter5050:
            return kInvSqrt2 * std::polar(1.0, in == out ? c.bs_transmission_phase
                                                         : c.bs_reflection_phase);
        case ElementKind::Mirror:
            if ((in != out) != step.element.swap_ports) {
                throw std::invalid_argument("traversal inconsistent with mirror ports");
            }
            return std::polar(1.0, c.mirror_phase);
        case ElementKind::PhaseShifter:
            if (in != out) {
                throw std::invalid_argument("phase shifter cannot change path mode");
            }
            return step.in == step.element.target ? std::polar(1.0, step.element.shift)
                                                  : Amplitude{1.0};
    }
    throw std::invalid_argument("unknown element kind");
}

Amplitude accumulate_path_phase(const std::vector<PathStep>& path,
                                const PhaseConvention& c) {
    if (path.empty()) {
        throw std::invalid_argument("path must contain at least one element");
    }
    Amplitude product{1.0};
    for (const PathStep& step : path) {
        product *= step_amplitude(step, c);
    }
    return product;
}

}  // namespace biphoton
