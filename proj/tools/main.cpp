// Command-line front end: deterministic CSV sweeps, Monte Carlo samples, and
// Bell-test runs over the simulation engines.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "biphoton/csv.hpp"
#include "biphoton/measurement.hpp"
#include "biphoton/version.hpp"

namespace {

using namespace biphoton;

constexpr double kPi = std::numbers::pi;

struct RunConfig {
    std::uint64_t grid_points = 101;
    std::uint64_t seed = 42;
    std::uint64_t n_trials = 10000;
    std::string out;
    double phi_a = 0.0;
    double phi_b = 0.0;
    PhaseConvention convention = PhaseConvention::standard();
    bool no_bs2 = false;
};

std::vector<double> make_grid(std::uint64_t points) {
    std::vector<double> grid(points);
    for (std::uint64_t k = 0; k < points; ++k) {
        grid[k] = kPi * static_cast<double>(k) / static_cast<double>(points - 1);
    }
    return grid;
}

int write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return 2;
    }
    file << content;
    file.flush();
    if (!file.good()) {
        std::cerr << "error: failed while writing '" << path << "'\n";
        return 2;
    }
    return 0;
}

int run_mzi(const RunConfig& config) {
    std::vector<csv::MziSweepRow> rows;
    for (double delta : make_grid(config.grid_points)) {
        const auto [p1, p2] =
            mzi_probabilities({0.0, delta, !config.no_bs2}, config.convention);
        rows.push_back({delta, p1, p2});
    }
    const int status = write_file(config.out, csv::mzi_csv(rows, config.convention));
    if (status != 0) return status;
    std::cout << "mzi: " << rows.size() << " points, P_B1 from "
              << csv::format_double(rows.front().p_b1) << " to "
              << csv::format_double(rows.back().p_b1)
              << (config.no_bs2 ? " (second splitter removed)" : "") << "\n";
    return 0;
}

int run_rto_sweep(const RunConfig& config) {
    const auto sweep = correlation_curve(make_grid(config.grid_points),
                                         config.convention);
    const int status =
        write_file(config.out, csv::sweep_csv(sweep, config.convention));
    if (status != 0) return status;
    std::cout << "rto-sweep: " << sweep.rows.size() << " points, correlation from "
              << csv::format_double(sweep.rows.front().correlation) << " to "
              << csv::format_double(sweep.rows.back().correlation) << "\n";
    return 0;
}

int run_bell(const RunConfig& config) {
    const double a = 0.0;
    const double a2 = kPi / 2.0;
    const double b = kPi / 4.0;
    const double b2 = 3.0 * kPi / 4.0;
    const auto estimate =
        estimate_chsh(a, a2, b, b2, config.n_trials, config.seed, config.convention);
    const double analytic = chsh_value(a, a2, b, b2, config.convention);
    const std::array<std::pair<double, double>, 4> settings{
        std::pair{a, b}, {a, b2}, {a2, b}, {a2, b2}};
    const int status = write_file(
        config.out, csv::bell_csv(estimate, settings, config.seed, config.convention));
    if (status != 0) return status;
    const double sigma = estimate.std_err > 0.0
                             ? (estimate.s_hat - 2.0) / estimate.std_err
                             : std::numeric_limits<double>::infinity();
    std::cout << "bell: S_hat=" << csv::format_double(estimate.s_hat)
              << " std_err=" << csv::format_double(estimate.std_err) << " ("
              << csv::format_double(sigma) << " sigma above 2; analytic S="
              << csv::format_double(analytic) << ")\n";
    return 0;
}

int run_sample(const RunConfig& config) {
    const RtoCircuit circuit{config.phi_a, config.phi_b, config.convention};
    const auto trials = sample_trials(circuit, config.n_trials, config.seed);
    const auto stats = tally(trials);
    const int status = write_file(
        config.out, csv::sample_csv(trials, config.seed, config.convention));
    if (status != 0) return status;
    std::cout << "sample: n=" << stats.n
              << " phi_a=" << csv::format_double(config.phi_a)
              << " phi_b=" << csv::format_double(config.phi_b)
              << " c_hat=" << csv::format_double(stats.c_hat) << "\n";
    return 0;
}

int run_table1(const RunConfig& config) {
    const auto rows = table1();
    const int status =
        write_file(config.out, csv::table1_csv(rows, config.convention));
    if (status != 0) return status;
    std::cout << "table1: " << rows.size() << " rows, correlation from "
              << csv::format_double(rows.front().correlation) << " to "
              << csv::format_double(rows.back().correlation) << "\n";
    return 0;
}

int run_offsets(const RunConfig& config) {
    const auto offsets = phase_offset_check(config.convention);
    const int status =
        write_file(config.out, csv::offsets_csv(offsets, config.convention));
    if (status != 0) return status;
    std::cout << "offsets: u=" << csv::format_double(offsets.u)
              << " v=" << csv::format_double(offsets.v)
              << " difference=" << csv::format_double(offsets.difference) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig config;
    CLI::App app{"Two-photon interferometry simulator"};
    app.set_version_flag("--version", std::string("biphoton ") + kVersion);
    app.require_subcommand(1);

    const auto add_convention_flags = [&config](CLI::App* cmd) {
        cmd->add_option("--bs-reflection-phase", config.convention.bs_reflection_phase,
                        "Splitter reflection phase in radians");
        cmd->add_option("--bs-transmission-phase",
                        config.convention.bs_transmission_phase,
                        "Splitter transmission phase in radians");
        cmd->add_option("--mirror-phase", config.convention.mirror_phase,
                        "Mirror phase in radians");
    };
    const auto add_out_flag = [&config](CLI::App* cmd, const std::string& name) {
        cmd->add_option("--out", config.out,
                        "Output CSV path (default " + name + ".csv)");
    };

    CLI::App* mzi = app.add_subcommand(
        "mzi", "Single-photon interferometer sweep over [0, pi]");
    mzi->add_option("--grid-points", config.grid_points, "Sweep points")
        ->default_val(101)
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1000000}));
    mzi->add_flag("--no-bs2", config.no_bs2, "Remove the recombining splitter");
    add_out_flag(mzi, "mzi");
    add_convention_flags(mzi);

    CLI::App* rto = app.add_subcommand(
        "rto-sweep", "Two-photon coincidence sweep over [0, pi]");
    rto->add_option("--grid-points", config.grid_points, "Sweep points")
        ->default_val(101)
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1000000}));
    add_out_flag(rto, "rto-sweep");
    add_convention_flags(rto);

    CLI::App* bell = app.add_subcommand(
        "bell", "Monte Carlo CHSH run at the optimal settings");
    bell->add_option("--n-trials", config.n_trials, "Trials per setting pair")
        ->default_val(10000)
        ->check(CLI::Range(std::uint64_t{100}, std::uint64_t{100000000}));
    bell->add_option("--seed", config.seed, "RNG seed")->default_val(42);
    add_out_flag(bell, "bell");
    add_convention_flags(bell);

    CLI::App* sample = app.add_subcommand(
        "sample", "Monte Carlo coincidence trials at fixed phases");
    sample->add_option("--n-trials", config.n_trials, "Trial count")
        ->default_val(10000)
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
    sample->add_option("--seed", config.seed, "RNG seed")->default_val(42);
    sample->add_option("--phi-a", config.phi_a, "Phase at station A (radians)")
        ->default_val(0.0);
    sample->add_option("--phi-b", config.phi_b, "Phase at station B (radians)")
        ->default_val(0.0);
    add_out_flag(sample, "sample");
    add_convention_flags(sample);

    CLI::App* tbl = app.add_subcommand(
        "table1", "Single-photon vs entangled-pair comparison rows");
    add_out_flag(tbl, "table1");
    add_convention_flags(tbl);

    CLI::App* offsets = app.add_subcommand(
        "offsets", "Extract the two fringe offsets and their difference");
    add_out_flag(offsets, "offsets");
    add_convention_flags(offsets);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (config.out.empty()) {
            config.out = app.get_subcommands().front()->get_name() + ".csv";
        }
        if (mzi->parsed()) return run_mzi(config);
        if (rto->parsed()) return run_rto_sweep(config);
        if (bell->parsed()) return run_bell(config);
        if (sample->parsed()) return run_sample(config);
        if (tbl->parsed()) return run_table1(config);
        if (offsets->parsed()) return run_offsets(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
