// Deterministic CSV serialization for the command-line front end.
//
// Every file starts with a `#` comment recording version, seed (or "none"
// for non-stochastic outputs), and the phase convention, followed by a
// header row. Values are written with 15 significant digits, '.' decimal
// separator, '\n' newlines — byte-identical across runs of the same
// configuration.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biphoton/analysis.hpp"
#include "biphoton/montecarlo.hpp"

namespace biphoton::csv {

// Shortest representation with up to 15 significant digits ("%.15g").
std::string format_double(double value);

// The leading comment line.
std::string meta_line(std::optional<std::uint64_t> seed, const PhaseConvention& conv);

// Schema: phase_diff, p11, p12, p21, p22, pA1, pB1, p_same, p_diff, correlation.
std::string sweep_csv(const SweepResult& sweep, const PhaseConvention& conv);

// Schema: trial_index, phi_A, phi_B, a_click, b_click.
std::string sample_csv(const std::vector<TrialRecord>& trials, std::uint64_t seed,
                       const PhaseConvention& conv);

// Schema: phase, mzi_p1, mzi_p2, rto_marginal, p_same, p_diff, correlation.
// Includes a comment noting that percentage summaries of the quarter-turn
// rows sometimes quote the correlation (0.707) where the same/different
// probabilities are (1 +/- cos)/2 = 0.854/0.146.
std::string table1_csv(const std::vector<Table1Row>& rows, const PhaseConvention& conv);

// Schema: phase_diff, p_b1, p_b2 for the single-photon interferometer.
struct MziSweepRow {
    double phase_diff = 0.0;
    double p_b1 = 0.0;
    double p_b2 = 0.0;
};
std::string mzi_csv(const std::vector<MziSweepRow>& rows, const PhaseConvention& conv);

// Schema: setting, phi_a, phi_b, n, n11, n12, n21, n22, c_hat, std_err; one
// row per CHSH setting pair, with S_hat and its error in a trailing comment.
std::string bell_csv(const ChshEstimate& estimate,
                     const std::array<std::pair<double, double>, 4>& settings,
                     std::uint64_t seed, const PhaseConvention& conv);

// Schema: u, v, difference (single row).
std::string offsets_csv(const PhaseOffsets& offsets, const PhaseConvention& conv);

}  // namespace biphoton::csv
