#include "biphoton/csv.hpp"

#include <cstdio>
#include <sstream>

#include "biphoton/version.hpp"

namespace biphoton::csv {

namespace {

void append_row(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += cells[i];
    }
    out += '\n';
}

std::string fd(double value) { return format_double(value); }

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

std::string meta_line(std::optional<std::uint64_t> seed, const PhaseConvention& conv) {
    std::string line = "# biphoton ";
    line += kVersion;
    line += " seed=";
    line += seed ? std::to_string(*seed) : std::string("none");
    line += " convention: reflection=" + fd(conv.bs_reflection_phase);
    line += " transmission=" + fd(conv.bs_transmission_phase);
    line += " mirror=" + fd(conv.mirror_phase);
    line += '\n';
    return line;
}

std::string sweep_csv(const SweepResult& sweep, const PhaseConvention& conv) {
    std::string out = meta_line(std::nullopt, conv);
    out += "phase_diff,p11,p12,p21,p22,pA1,pB1,p_same,p_diff,correlation\n";
    for (std::size_t k = 0; k < sweep.rows.size(); ++k) {
        const CoincidenceTable& t = sweep.rows[k];
        append_row(out, {fd(sweep.grid[k]), fd(t.p[0][0]), fd(t.p[0][1]),
                         fd(t.p[1][0]), fd(t.p[1][1]), fd(t.p_a1), fd(t.p_b1),
                         fd(t.p_same), fd(t.p_diff), fd(t.correlation)});
    }
    return out;
}

std::string sample_csv(const std::vector<TrialRecord>& trials, std::uint64_t seed,
                       const PhaseConvention& conv) {
    std::string out = meta_line(seed, conv);
    out += "trial_index,phi_A,phi_B,a_click,b_click\n";
    for (const TrialRecord& trial : trials) {
        append_row(out, {std::to_string(trial.trial_index), fd(trial.phi_a),
                         fd(trial.phi_b), std::to_string(trial.a_click),
                         std::to_string(trial.b_click)});
    }
    return out;
}

std::string table1_csv(const std::vector<Table1Row>& rows,
                       const PhaseConvention& conv) {
    std::string out = meta_line(std::nullopt, conv);
    out +=
        "# note: at the quarter-turn rows the same/different probabilities are "
        "(1 +/- cos(phase))/2 = 0.854/0.146 while the correlation is cos(phase) "
        "= 0.707; percentage summaries sometimes quote the correlation in place "
        "of the probabilities\n";
    out += "phase,mzi_p1,mzi_p2,rto_marginal,p_same,p_diff,correlation\n";
    for (const Table1Row& row : rows) {
        append_row(out, {fd(row.phase), fd(row.mzi_p1), fd(row.mzi_p2),
                         fd(row.rto_marginal), fd(row.p_same), fd(row.p_diff),
                         fd(row.correlation)});
    }
    return out;
}

std::string mzi_csv(const std::vector<MziSweepRow>& rows,
                    const PhaseConvention& conv) {
    std::string out = meta_line(std::nullopt, conv);
    out += "phase_diff,p_b1,p_b2\n";
    for (const MziSweepRow& row : rows) {
        append_row(out, {fd(row.phase_diff), fd(row.p_b1), fd(row.p_b2)});
    }
    return out;
}

std::string bell_csv(const ChshEstimate& estimate,
                     const std::array<std::pair<double, double>, 4>& settings,
                     std::uint64_t seed, const PhaseConvention& conv) {
    std::string out = meta_line(seed, conv);
    out += "setting,phi_a,phi_b,n,n11,n12,n21,n22,c_hat,std_err\n";
    for (std::size_t k = 0; k < settings.size(); ++k) {
        const SampleStats& stats = estimate.per_setting[k];
        append_row(out,
                   {std::to_string(k + 1), fd(settings[k].first),
                    fd(settings[k].second), std::to_string(stats.n),
                    std::to_string(stats.counts[0][0]),
                    std::to_string(stats.counts[0][1]),
                    std::to_string(stats.counts[1][0]),
                    std::to_string(stats.counts[1][1]), fd(stats.c_hat),
                    fd(stats.std_err)});
    }
    out += "# S_hat=" + fd(estimate.s_hat) + " std_err=" + fd(estimate.std_err) + '\n';
    return out;
}

std::string offsets_csv(const PhaseOffsets& offsets, const PhaseConvention& conv) {
    std::string out = meta_line(std::nullopt, conv);
    out += "u,v,difference\n";
    append_row(out, {fd(offsets.u), fd(offsets.v), fd(offsets.difference)});
    return out;
}

}  // namespace biphoton::csv
