// Lossless optical elements acting on the two path modes of one photon.
//
// Every element is a 2x2 unitary once a phase convention is fixed. The
// convention assigns the constant phases picked up on reflection and
// transmission at a 50/50 beam splitter and on reflection at a mirror; the
// interference predictions must not depend on which unitary convention is
// chosen, and the tests exercise that claim rather than assuming it.

#pragma once

#include <vector>

#include "biphoton/linalg.hpp"

namespace biphoton {

// Constant phases for reflection/transmission at beam splitters and mirrors.
// A symmetric 50/50 splitter is unitary exactly when the reflected and
// transmitted phases differ by an odd multiple of pi/2.
struct PhaseConvention {
    double bs_reflection_phase;
    double bs_transmission_phase;
    double mirror_phase;

    // Reflection pi/2, transmission 0, mirror pi: the textbook symmetric
    // convention, giving the beam-splitter matrix (1/sqrt2)[[1, i], [i, 1]].
    static PhaseConvention standard();

    bool is_unitary(double tol = kAnalyticTol) const;
};

enum class ElementKind { BeamSplitter5050, Mirror, PhaseShifter };

struct OpticalElement {
    ElementKind kind = ElementKind::Mirror;
    double shift = 0.0;       // PhaseShifter: applied phase in radians
    Mode target = Mode::One;  // PhaseShifter: which path mode is shifted
    bool swap_ports = false;  // Mirror: whether it exchanges the path labels
};

OpticalElement beam_splitter();
OpticalElement mirror(bool swap_ports = false);
OpticalElement phase_shifter(double shift, Mode target);

// The other path mode (One <-> Two).
Mode other_mode(Mode m);

// 2x2 unitary of one element over the (mode1, mode2) amplitudes, row = output
// mode, column = input mode. For the beam splitter, equal-index entries are
// transmissions and cross entries reflections.
ComplexMatrix element_unitary(const OpticalElement& e, const PhaseConvention& c);

// One traversal of an element along a photon's path: entering on mode `in`,
// leaving on mode `out`.
struct PathStep {
    OpticalElement element;
    Mode in = Mode::One;
    Mode out = Mode::One;
};

PathStep through_step(const OpticalElement& e, Mode m);       // in == out
PathStep cross_step(const OpticalElement& e, Mode in_mode);   // out = other(in)

// Amplitude factor contributed by one traversal: 1/sqrt2 times the
// transmission or reflection phase at a beam splitter, the mirror phase at a
// mirror, the applied shift at a phase shifter (1 if the shifter sits on the
// other mode). Rejects traversals the element cannot perform.
Amplitude step_amplitude(const PathStep& step, const PhaseConvention& c);

// Product of the per-step factors along a path, source to detector.
// Rejects an empty path.
Amplitude accumulate_path_phase(const std::vector<PathStep>& path,
                                const PhaseConvention& c);

}  // namespace biphoton
