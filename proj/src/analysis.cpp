#include "biphoton/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biphoton {

namespace {

constexpr double kPi = std::numbers::pi;

double engine_probability(const RtoCircuit& c, DetectorPair pair) {
    return modulus_squared(coincidence_amplitude(c, pair));
}

// Offset of a fringe p(delta) = [1 + cos(delta + offset)]/4 from its values
// at delta = 0 and delta = pi/2.
double fringe_offset(double p_at_zero, double p_at_quarter) {
    const double cos_offset = 4.0 * p_at_zero - 1.0;
    const double sin_offset = 1.0 - 4.0 * p_at_quarter;
    return wrap_two_pi(std::atan2(sin_offset, cos_offset));
}

}  // namespace

CoincidenceTable table_from_probabilities(
    double phi_a, double phi_b, const std::array<std::array<double, 2>, 2>& p) {
    double total = 0.0;
    for (const auto& row : p) {
        for (double value : row) {
            if (value < -kAnalyticTol || value > 1.0 + kAnalyticTol) {
                throw std::invalid_argument("probability outside [0, 1]");
            }
            total += value;
        }
    }
    if (std::abs(total - 1.0) > kAnalyticTol) {
        throw std::invalid_argument("joint probabilities must sum to 1");
    }

    CoincidenceTable t;
    t.phi_a = phi_a;
    t.phi_b = phi_b;
    t.p = p;
    t.p_a1 = p[0][0] + p[0][1];
    t.p_a2 = p[1][0] + p[1][1];
    t.p_b1 = p[0][0] + p[1][0];
    t.p_b2 = p[0][1] + p[1][1];
    t.p_same = p[0][0] + p[1][1];
    t.p_diff = p[0][1] + p[1][0];
    t.correlation = t.p_same - t.p_diff;
    return t;
}

CoincidenceTable coincidence_table(const RtoCircuit& c) {
    std::array<std::array<double, 2>, 2> p{};
    for (DetectorPair pair : all_detector_pairs()) {
        p[pair.a - 1][pair.b - 1] = engine_probability(c, pair);
    }
    return table_from_probabilities(c.phi_a, c.phi_b, p);
}

std::vector<double> default_phase_grid() {
    std::vector<double> grid(101);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        grid[k] = kPi * static_cast<double>(k) / 100.0;
    }
    return grid;
}

PhaseOffsets phase_offset_check(const PhaseConvention& conv) {
    if (!conv.is_unitary()) {
        throw std::invalid_argument("phase convention must give a unitary splitter");
    }
    const RtoCircuit at_zero{0.0, 0.0, conv};
    const RtoCircuit at_quarter{0.0, kPi / 2.0, conv};

    PhaseOffsets offsets;
    offsets.u = fringe_offset(engine_probability(at_zero, {1, 1}),
                              engine_probability(at_quarter, {1, 1}));
    offsets.v = fringe_offset(engine_probability(at_zero, {1, 2}),
                              engine_probability(at_quarter, {1, 2}));
    offsets.difference = wrap_two_pi(offsets.v - offsets.u);
    return offsets;
}

SweepResult correlation_curve(const std::vector<double>& grid,
                              const PhaseConvention& conv) {
    if (grid.empty()) {
        throw std::invalid_argument("phase grid must be nonempty");
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (grid[k] < 0.0 || grid[k] > kPi) {
            throw std::invalid_argument("phase grid must lie within [0, pi]");
        }
        if (k > 0 && grid[k] <= grid[k - 1]) {
            throw std::invalid_argument("phase grid must be strictly increasing");
        }
    }
    SweepResult sweep;
    sweep.grid = grid;
    sweep.rows.reserve(grid.size());
    for (double delta : grid) {
        sweep.rows.push_back(coincidence_table({0.0, delta, conv}));
    }
    return sweep;
}

double chsh_value(double a, double a2, double b, double b2,
                  const PhaseConvention& conv) {
    const auto correlation = [&conv](double x, double y) {
        return coincidence_table({x, y, conv}).correlation;
    };
    return std::abs(correlation(a, b) - correlation(a, b2) + correlation(a2, b) +
                    correlation(a2, b2));
}

std::vector<Table1Row> table1() {
    std::vector<Table1Row> rows;
    for (int k = 0; k <= 4; ++k) {
        const double phase = kPi * k / 4.0;
        Table1Row row;
        row.phase = phase;
        const auto [p1, p2] = mzi_probabilities({0.0, phase, true});
        row.mzi_p1 = p1;
        row.mzi_p2 = p2;
        const auto table = coincidence_table({0.0, phase});
        row.rto_marginal = table.p_b1;
        row.p_same = table.p_same;
        row.p_diff = table.p_diff;
        row.correlation = table.correlation;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace biphoton
