// The ideal von Neumann measurement chain and the matrix-propagation route.
//
// A detector is modeled as a second two-mode system: calibration sends
// |Aj>|ready> to |Aj>|Bj>, and linearity extends that map to superpositions,
// turning a coherent single-photon superposition into an entangled pair whose
// subsystems are individually phase-free. propagate() applies lifted 2x2
// unitaries to a composite state; it is the route used to cross-check the
// path-sum engine, sharing only the circuit geometry and per-element
// unitaries with it.

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "biphoton/analysis.hpp"
#include "biphoton/circuits.hpp"

namespace biphoton {

// Calibration |Aj>|ready> -> |Aj>|Bj>; extended to superpositions by
// linearity in apply_measurement.
struct MeasurementMap {
    std::array<std::pair<Ket, Ket>, 2> calibration{
        std::pair<Ket, Ket>{Ket{Mode::One, Mode::Ready}, Ket{Mode::One, Mode::One}},
        std::pair<Ket, Ket>{Ket{Mode::Two, Mode::Ready}, Ket{Mode::Two, Mode::Two}}};
};

// Applies the calibration linearly: alpha|A1>|ready> + beta|A2>|ready> maps
// to alpha|A1>|B1> + beta|A2>|B2> over the full composite basis. Rejects
// states outside the calibrated subspace.
StateVector apply_measurement(const StateVector& input, const MeasurementMap& m = {});

// One propagation step: a 2x2 unitary acting on one photon's path modes.
struct SubsystemUnitary {
    Subsystem subsystem;
    ComplexMatrix matrix;
};

// Applies each step in order as U (x) I or I (x) U on a composite state, or
// directly on a single-subsystem state. Rejects dimension or subsystem
// mismatches and non-unitary matrices.
StateVector propagate(const StateVector& state,
                      const std::vector<SubsystemUnitary>& steps);

// How much phase coherence one photon retains: the off-diagonal magnitude
// and purity of its reduced density matrix.
struct CoherenceReport {
    Subsystem subsystem;
    double offdiag_magnitude = 0.0;
    double purity = 0.0;  // in [1/2, 1] for a two-mode reduced state
};

CoherenceReport coherence_report(const StateVector& state, Subsystem s);

// Joint detection statistics read directly off a composite state:
// p[i][j] = |<AiBj|state>|^2.
CoincidenceTable outcome_distribution(const StateVector& state);

// Coincidence probabilities of the two-photon circuit by matrix propagation
// of the source state, in lexicographic pair order (A1B1, A1B2, A2B1, A2B2).
// This is the independent check on the path-sum engine.
std::array<double, 4> oracle_coincidence_probabilities(const RtoCircuit& c);

}  // namespace biphoton
