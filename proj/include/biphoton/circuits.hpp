// The two experiment topologies.
//
// MziCircuit: a single photon enters a 50/50 splitter on its second input
// port, travels two mirrored arms carrying phase shifters phi1/phi2, and is
// recombined (or not) on a second splitter feeding detectors B1/B2.
//
// RtoCircuit: a source emits a photon pair in the path-entangled state
// (|A1 B1> + |A2 B2>)/sqrt2. Photon A's first arm holds a mirror; its second
// arm a mirror and the shifter phi_A. Photon B's first arm holds a mirror and
// the shifter phi_B; its second arm a mirror and a fixed half-turn trim that
// calibrates the pair to perfect positive correlation at zero applied phase.
// Each photon then meets its own 50/50 splitter whose output ports feed
// detectors 1 and 2. Coincidence amplitudes are sums over the two source
// branches (solid = first arms, dashed = second arms).

#pragma once

#include <utility>
#include <vector>

#include "biphoton/optics.hpp"

namespace biphoton {

struct MziCircuit {
    double phi1 = 0.0;
    double phi2 = 0.0;
    bool bs2_present = true;
};

struct RtoCircuit {
    double phi_a = 0.0;
    double phi_b = 0.0;
    PhaseConvention convention = PhaseConvention::standard();
};

// Which detector fired on each side; indices are 1 or 2.
struct DetectorPair {
    int a = 1;
    int b = 1;

    friend bool operator==(const DetectorPair&, const DetectorPair&) = default;
};

// The four pairs in lexicographic order (1,1), (1,2), (2,1), (2,2), matching
// the composite basis ordering.
std::vector<DetectorPair> all_detector_pairs();

enum class Branch { Solid, Dashed };

// One two-photon path from the source to a detector pair: photon A's element
// traversals followed by photon B's.
struct OpticalPath {
    DetectorPair detectors;
    Branch branch = Branch::Solid;
    std::vector<PathStep> steps;
};

// Detection probabilities (P_B1, P_B2). With the second splitter present the
// arms recombine and P_B1 = [1 + cos(phi2 - phi1)]/2 for any unitary
// convention; without it the configuration reveals the path and both
// probabilities are 1/2. The pair always sums to exactly 1.
std::pair<double, double> mzi_probabilities(
    const MziCircuit& c, const PhaseConvention& convention = PhaseConvention::standard());

// The two paths (solid branch then dashed branch) feeding a detector pair.
// Rejects detector indices outside {1, 2} and non-finite phases.
std::vector<OpticalPath> enumerate_paths(const RtoCircuit& c, DetectorPair pair);

// Sum over the two enumerated paths of their accumulated phase factors,
// weighted by the source's 1/sqrt2 branch amplitude.
Amplitude coincidence_amplitude(const RtoCircuit& c, DetectorPair pair);

// Single-photon element chain one photon of the pair traverses, in order
// (mirror, arm shifters, splitter). This is the geometry the state-vector
// route lifts to the composite space; it shares nothing else with the
// path-sum route.
std::vector<OpticalElement> rto_arm_elements(const RtoCircuit& c, Subsystem s);

}  // namespace biphoton
