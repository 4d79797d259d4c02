#include "biphoton/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "biphoton/philox.hpp"

namespace biphoton {

std::vector<TrialRecord> sample_trials(const RtoCircuit& c, std::uint64_t n,
                                       std::uint64_t seed, std::uint64_t stream) {
    if (n == 0) {
        throw std::invalid_argument("need at least one trial");
    }
    const auto table = coincidence_table(c);
    // Cumulative thresholds over the outcomes in lexicographic order.
    std::array<double, 4> cumulative{};
    double running = 0.0;
    const auto pairs = all_detector_pairs();
    for (std::size_t k = 0; k < 4; ++k) {
        running += table.p[pairs[k].a - 1][pairs[k].b - 1];
        cumulative[k] = running;
    }

    const Philox4x64 rng(seed, stream);
    std::vector<TrialRecord> trials;
    trials.reserve(n);
    for (std::uint64_t t = 0; t < n; ++t) {
        const double u = rng.uniform(t);
        std::size_t outcome = 3;  // rounding in the cumulative sum lands here
        for (std::size_t k = 0; k < 4; ++k) {
            if (u < cumulative[k]) {
                outcome = k;
                break;
            }
        }
        trials.push_back(
            {t, pairs[outcome].a, pairs[outcome].b, c.phi_a, c.phi_b});
    }
    return trials;
}

SampleStats tally(const std::vector<TrialRecord>& trials) {
    if (trials.empty()) {
        throw std::invalid_argument("need at least one trial");
    }
    SampleStats stats;
    stats.n = trials.size();
    for (const TrialRecord& trial : trials) {
        ++stats.counts[trial.a_click - 1][trial.b_click - 1];
    }
    const auto same = stats.counts[0][0] + stats.counts[1][1];
    const auto diff = stats.counts[0][1] + stats.counts[1][0];
    stats.c_hat = (static_cast<double>(same) - static_cast<double>(diff)) /
                  static_cast<double>(stats.n);
    stats.std_err = std::sqrt((1.0 - stats.c_hat * stats.c_hat) /
                              static_cast<double>(stats.n));
    return stats;
}

ChshEstimate estimate_chsh(double a, double a2, double b, double b2,
                           std::uint64_t n_per_setting, std::uint64_t seed,
                           const PhaseConvention& conv) {
    if (n_per_setting < 100) {
        throw std::invalid_argument("need at least 100 trials per setting");
    }
    const std::array<std::pair<double, double>, 4> settings{
        std::pair{a, b}, {a, b2}, {a2, b}, {a2, b2}};

    ChshEstimate estimate;
    std::array<double, 4> correlations{};
    double variance = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        const RtoCircuit circuit{settings[k].first, settings[k].second, conv};
        const auto stats =
            tally(sample_trials(circuit, n_per_setting, seed, k));
        estimate.per_setting[k] = stats;
        correlations[k] = stats.c_hat;
        variance += stats.std_err * stats.std_err;
    }
    estimate.s_hat = std::abs(correlations[0] - correlations[1] + correlations[2] +
                              correlations[3]);
    estimate.std_err = std::sqrt(variance);
    return estimate;
}

}  // namespace biphoton
