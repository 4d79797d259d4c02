#include "biphoton/circuits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace biphoton {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

void require_detector(int index) {
    if (index != 1 && index != 2) {
        throw std::invalid_argument("detector index must be 1 or 2");
    }
}

PathStep splitter_port(Mode in, Mode out) {
    return in == out ? through_step(beam_splitter(), in)
                     : cross_step(beam_splitter(), in);
}

// Elements of one interferometer arm, before the splitter. The source branch
// fixes which arm each photon occupies: solid = first arms, dashed = second.
std::vector<PathStep> arm_steps(const RtoCircuit& c, Subsystem s, Branch branch) {
    const Mode arm = branch == Branch::Solid ? Mode::One : Mode::Two;
    std::vector<PathStep> steps{through_step(mirror(), arm)};
    if (s == Subsystem::A && branch == Branch::Dashed) {
        steps.push_back(through_step(phase_shifter(c.phi_a, Mode::Two), arm));
    }
    if (s == Subsystem::B && branch == Branch::Solid) {
        steps.push_back(through_step(phase_shifter(c.phi_b, Mode::One), arm));
    }
    if (s == Subsystem::B && branch == Branch::Dashed) {
        steps.push_back(through_step(phase_shifter(std::numbers::pi, Mode::Two), arm));
    }
    return steps;
}

}  // namespace

std::vector<DetectorPair> all_detector_pairs() {
    return {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
}

std::pair<double, double> mzi_probabilities(const MziCircuit& c,
                                            const PhaseConvention& convention) {
    require_finite(c.phi1, "phi1");
    require_finite(c.phi2, "phi2");

    // The photon enters the first splitter on its second port, so the
    // zero-phase interferometer recombines fully onto detector B1 (two
    // cascaded splitters transfer everything to the cross port).
    auto arm_path = [&](Mode arm, Mode out) {
        std::vector<PathStep> path{splitter_port(Mode::Two, arm),
                                   through_step(mirror(), arm)};
        const double shift = arm == Mode::One ? c.phi1 : c.phi2;
        path.push_back(through_step(phase_shifter(shift, arm), arm));
        if (c.bs2_present) {
            path.push_back(splitter_port(arm, out));
        }
        return path;
    };

    double p_b1 = 0.0;
    if (c.bs2_present) {
        Amplitude amp{};
        for (Mode arm : {Mode::One, Mode::Two}) {
            amp += accumulate_path_phase(arm_path(arm, Mode::One), convention);
        }
        p_b1 = modulus_squared(amp);
    } else {
        // No recombination: the detector reads the arm directly, so the two
        // contributions add in probability, not amplitude.
        p_b1 = modulus_squared(
            accumulate_path_phase(arm_path(Mode::One, Mode::One), convention));
    }
    return {p_b1, 1.0 - p_b1};
}

std::vector<OpticalPath> enumerate_paths(const RtoCircuit& c, DetectorPair pair) {
    require_finite(c.phi_a, "phi_A");
    require_finite(c.phi_b, "phi_B");
    require_detector(pair.a);
    require_detector(pair.b);

    std::vector<OpticalPath> paths;
    for (Branch branch : {Branch::Solid, Branch::Dashed}) {
        const Mode arm = branch == Branch::Solid ? Mode::One : Mode::Two;
        OpticalPath path{pair, branch, {}};
        for (Subsystem s : {Subsystem::A, Subsystem::B}) {
            for (const PathStep& step : arm_steps(c, s, branch)) {
                path.steps.push_back(step);
            }
            const int detector = s == Subsystem::A ? pair.a : pair.b;
            path.steps.push_back(splitter_port(arm, mode_from_index(detector)));
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

Amplitude coincidence_amplitude(const RtoCircuit& c, DetectorPair pair) {
    Amplitude amp{};
    for (const OpticalPath& path : enumerate_paths(c, pair)) {
        amp += kInvSqrt2 * accumulate_path_phase(path.steps, c.convention);
    }
    return amp;
}

std::vector<OpticalElement> rto_arm_elements(const RtoCircuit& c, Subsystem s) {
    require_finite(c.phi_a, "phi_A");
    require_finite(c.phi_b, "phi_B");
    if (s == Subsystem::A) {
        return {mirror(), phase_shifter(c.phi_a, Mode::Two), beam_splitter()};
    }
    return {mirror(), phase_shifter(c.phi_b, Mode::One),
            phase_shifter(std::numbers::pi, Mode::Two), beam_splitter()};
}

}  // namespace biphoton
