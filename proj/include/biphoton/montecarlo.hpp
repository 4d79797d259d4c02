// Seeded stochastic realization of the analytic coincidence distributions.
//
// Each trial is a single categorical draw over the four joint outcomes
// (Ai, Bj) — not two independent per-station draws — so the exact
// correlations at phase difference 0 and pi survive sampling. Everything is
// keyed by (seed, stream, trial index) through a counter-based generator,
// making runs reproducible and partitionable.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "biphoton/analysis.hpp"

namespace biphoton {

struct TrialRecord {
    std::uint64_t trial_index = 0;
    int a_click = 1;  // detector index, 1 or 2
    int b_click = 1;
    double phi_a = 0.0;
    double phi_b = 0.0;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct SampleStats {
    std::uint64_t n = 0;
    std::array<std::array<std::uint64_t, 2>, 2> counts{};  // [a-1][b-1]
    double c_hat = 0.0;    // empirical correlation (same minus different)
    double std_err = 0.0;  // sqrt((1 - c_hat^2)/n), the +/-1 product estimator
};

// Draws n trials from the joint distribution of coincidence_table(c).
// Deterministic in (c, n, seed, stream); rejects n = 0.
std::vector<TrialRecord> sample_trials(const RtoCircuit& c, std::uint64_t n,
                                       std::uint64_t seed, std::uint64_t stream = 0);

// Counts and the correlation estimate for a list of trials; rejects an empty
// list.
SampleStats tally(const std::vector<TrialRecord>& trials);

struct ChshEstimate {
    double s_hat = 0.0;
    double std_err = 0.0;
    std::array<SampleStats, 4> per_setting{};  // (a,b), (a,b2), (a2,b), (a2,b2)
};

// Samples n_per_setting trials at each of the four setting pairs (streams
// 0..3 of the same seed) and combines the correlation estimates into
// S_hat = |E1 - E2 + E3 + E4| with errors added in quadrature. Rejects
// n_per_setting < 100 (too few trials for the normal-error estimate).
ChshEstimate estimate_chsh(double a, double a2, double b, double b2,
                           std::uint64_t n_per_setting, std::uint64_t seed,
                           const PhaseConvention& conv = PhaseConvention::standard());

}  // namespace biphoton
