// Analytic prediction layer over the path-sum engine: coincidence tables,
// marginals, correlation sweeps, phase-offset extraction, CHSH values, and
// the side-by-side single-photon vs two-photon comparison table.

#pragma once

#include <array>
#include <vector>

#include "biphoton/circuits.hpp"

namespace biphoton {

// Joint detection statistics at one setting. "Same" means both stations saw
// the same detector index; "different" means one saw 1 while the other saw 2.
struct CoincidenceTable {
    double phi_a = 0.0;  // applied shifter phases (zero when derived from a
    double phi_b = 0.0;  // bare state rather than a circuit)
    std::array<std::array<double, 2>, 2> p{};  // p[i][j] = P(A_{i+1}, B_{j+1})
    double p_a1 = 0.0;
    double p_a2 = 0.0;
    double p_b1 = 0.0;
    double p_b2 = 0.0;
    double p_same = 0.0;
    double p_diff = 0.0;
    double correlation = 0.0;  // p_same - p_diff, in [-1, 1]
};

// Builds a table from the four joint probabilities, deriving marginals by
// row/column sums. Rejects probabilities that fail to sum to 1 or lie
// outside [0, 1] beyond kAnalyticTol.
CoincidenceTable table_from_probabilities(double phi_a, double phi_b,
                                          const std::array<std::array<double, 2>, 2>& p);

// Table for one two-photon circuit, probabilities from the path-sum engine.
CoincidenceTable coincidence_table(const RtoCircuit& c);

struct SweepResult {
    std::vector<double> grid;  // phase differences, strictly increasing
    std::vector<CoincidenceTable> rows;
};

// 101 evenly spaced phase differences covering [0, pi] inclusive.
std::vector<double> default_phase_grid();

// Constant phase offsets of the two interference fringes: u from P(A1,B1) =
// [1 + cos(delta + u)]/4 and v from P(A1,B2), extracted by evaluating the
// engine at delta = 0 and pi/2 (two samples fix a unit-amplitude sinusoid's
// offset). Unitarity forces the fringes to be exactly out of step:
// difference = pi for every unitary convention.
struct PhaseOffsets {
    double u = 0.0;          // wrapped to [0, 2*pi)
    double v = 0.0;          // wrapped to [0, 2*pi)
    double difference = 0.0; // v - u wrapped to [0, 2*pi)
};

// Rejects conventions whose beam splitter is not unitary.
PhaseOffsets phase_offset_check(const PhaseConvention& conv);

// Engine-computed tables over a grid of phase differences (phi_A = 0,
// phi_B = grid point). Rejects an empty, unsorted, or out-of-range grid.
SweepResult correlation_curve(const std::vector<double>& grid,
                              const PhaseConvention& conv = PhaseConvention::standard());

// CHSH combination S = |E(a,b) - E(a,b2) + E(a2,b) + E(a2,b2)|, with each
// correlation E(x,y) computed by the engine at phi_A = x, phi_B = y — not
// from the closed form, so a Bell violation here exercises the simulation.
double chsh_value(double a, double a2, double b, double b2,
                  const PhaseConvention& conv = PhaseConvention::standard());

// One row of the comparison table: a single photon interferes with itself
// (probabilities swing 100%..0%) while each photon of an entangled pair
// stays 50/50 and only the correlation carries the fringe.
struct Table1Row {
    double phase = 0.0;
    double mzi_p1 = 0.0;
    double mzi_p2 = 0.0;
    double rto_marginal = 0.0;
    double p_same = 0.0;
    double p_diff = 0.0;
    double correlation = 0.0;
};

// Rows at phases {0, pi/4, pi/2, 3pi/4, pi}, all values computed from the
// engines.
std::vector<Table1Row> table1();

}  // namespace biphoton
