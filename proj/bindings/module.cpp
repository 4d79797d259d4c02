// Python bindings for the simulator core. The surface mirrors the C++ API:
// analytic tables and sweeps, fringe-offset and CHSH checks, seeded Monte
// Carlo sampling, and the labeled-state measurement chain.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "biphoton/csv.hpp"
#include "biphoton/measurement.hpp"
#include "biphoton/montecarlo.hpp"
#include "biphoton/version.hpp"

namespace py = pybind11;
using namespace biphoton;

namespace {

using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;

std::string mode_label(Mode m) {
    switch (m) {
        case Mode::One:
            return "1";
        case Mode::Two:
            return "2";
        default:
            return "ready";
    }
}

std::string ket_label(const Ket& k) {
    std::string out;
    if (k.a) out += "A" + mode_label(*k.a);
    if (k.b) out += "B" + mode_label(*k.b);
    return out;
}

Matrix2 to_rows(const ComplexMatrix& m) {
    Matrix2 rows{};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            rows[r][c] = m(r, c);
        }
    }
    return rows;
}

ComplexMatrix from_rows(const Matrix2& rows) {
    ComplexMatrix m(2);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Two-photon interferometry simulator: single-photon and entangled-pair "
        "interference, fringe offsets, CHSH statistics, and seeded sampling.";
    m.attr("__version__") = kVersion;

    py::enum_<Subsystem>(m, "Subsystem", "Which photon a label or operation refers to.")
        .value("A", Subsystem::A)
        .value("B", Subsystem::B);

    py::class_<PhaseConvention>(m, "PhaseConvention",
                                "Reflection/transmission/mirror phases of the optical "
                                "elements; unitarity requires the beam-splitter phases "
                                "to differ by an odd multiple of pi/2.")
        .def(py::init<double, double, double>(), py::arg("bs_reflection_phase"),
             py::arg("bs_transmission_phase"), py::arg("mirror_phase"))
        .def_static("standard", &PhaseConvention::standard)
        .def_readwrite("bs_reflection_phase", &PhaseConvention::bs_reflection_phase)
        .def_readwrite("bs_transmission_phase", &PhaseConvention::bs_transmission_phase)
        .def_readwrite("mirror_phase", &PhaseConvention::mirror_phase)
        .def("is_unitary", &PhaseConvention::is_unitary, py::arg("tol") = kAnalyticTol)
        .def("__repr__", [](const PhaseConvention& c) {
            return "PhaseConvention(reflection=" + csv::format_double(c.bs_reflection_phase) +
                   ", transmission=" + csv::format_double(c.bs_transmission_phase) +
                   ", mirror=" + csv::format_double(c.mirror_phase) + ")";
        });

    py::class_<CoincidenceTable>(m, "CoincidenceTable",
                                 "Joint detection statistics at one phase setting.")
        .def_readonly("phi_a", &CoincidenceTable::phi_a)
        .def_readonly("phi_b", &CoincidenceTable::phi_b)
        .def_readonly("p", &CoincidenceTable::p)
        .def_readonly("p_a1", &CoincidenceTable::p_a1)
        .def_readonly("p_a2", &CoincidenceTable::p_a2)
        .def_readonly("p_b1", &CoincidenceTable::p_b1)
        .def_readonly("p_b2", &CoincidenceTable::p_b2)
        .def_readonly("p_same", &CoincidenceTable::p_same)
        .def_readonly("p_diff", &CoincidenceTable::p_diff)
        .def_readonly("correlation", &CoincidenceTable::correlation)
        .def("__repr__", [](const CoincidenceTable& t) {
            return "CoincidenceTable(phi_a=" + csv::format_double(t.phi_a) +
                   ", phi_b=" + csv::format_double(t.phi_b) +
                   ", correlation=" + csv::format_double(t.correlation) + ")";
        });

    py::class_<SweepResult>(m, "SweepResult", "Coincidence tables over a phase grid.")
        .def_readonly("grid", &SweepResult::grid)
        .def_readonly("rows", &SweepResult::rows);

    py::class_<PhaseOffsets>(m, "PhaseOffsets",
                             "Constant offsets of the two coincidence fringes; "
                             "unitarity forces difference = pi.")
        .def_readonly("u", &PhaseOffsets::u)
        .def_readonly("v", &PhaseOffsets::v)
        .def_readonly("difference", &PhaseOffsets::difference);

    py::class_<Table1Row>(m, "Table1Row",
                          "Side-by-side single-photon vs entangled-pair row.")
        .def_readonly("phase", &Table1Row::phase)
        .def_readonly("mzi_p1", &Table1Row::mzi_p1)
        .def_readonly("mzi_p2", &Table1Row::mzi_p2)
        .def_readonly("rto_marginal", &Table1Row::rto_marginal)
        .def_readonly("p_same", &Table1Row::p_same)
        .def_readonly("p_diff", &Table1Row::p_diff)
        .def_readonly("correlation", &Table1Row::correlation);

    py::class_<TrialRecord>(m, "TrialRecord", "One sampled coincidence event.")
        .def_readonly("trial_index", &TrialRecord::trial_index)
        .def_readonly("a_click", &TrialRecord::a_click)
        .def_readonly("b_click", &TrialRecord::b_click)
        .def_readonly("phi_a", &TrialRecord::phi_a)
        .def_readonly("phi_b", &TrialRecord::phi_b)
        .def(py::self == py::self)
        .def("__repr__", [](const TrialRecord& t) {
            return "TrialRecord(trial_index=" + std::to_string(t.trial_index) +
                   ", a_click=" + std::to_string(t.a_click) +
                   ", b_click=" + std::to_string(t.b_click) + ")";
        });

    py::class_<SampleStats>(m, "SampleStats", "Counts and correlation estimate.")
        .def_readonly("n", &SampleStats::n)
        .def_readonly("counts", &SampleStats::counts)
        .def_readonly("c_hat", &SampleStats::c_hat)
        .def_readonly("std_err", &SampleStats::std_err);

    py::class_<ChshEstimate>(m, "ChshEstimate", "Sampled CHSH statistic.")
        .def_readonly("s_hat", &ChshEstimate::s_hat)
        .def_readonly("std_err", &ChshEstimate::std_err)
        .def_readonly("per_setting", &ChshEstimate::per_setting);

    py::class_<CoherenceReport>(m, "CoherenceReport",
                                "Off-diagonal magnitude and purity of one photon's "
                                "reduced density matrix.")
        .def_readonly("subsystem", &CoherenceReport::subsystem)
        .def_readonly("offdiag_magnitude", &CoherenceReport::offdiag_magnitude)
        .def_readonly("purity", &CoherenceReport::purity);

    py::class_<StateVector>(m, "StateVector",
                            "Normalized state over a labeled basis. Build one with "
                            "path_entangled_pair, equal_path_superposition, "
                            "detector_ready_state, or tensor.")
        .def_property_readonly("dim", &StateVector::dim)
        .def("labels",
             [](const StateVector& s) {
                 std::vector<std::string> out;
                 out.reserve(s.dim());
                 for (const Ket& k : s.basis()) out.push_back(ket_label(k));
                 return out;
             })
        .def("amplitudes",
             [](const StateVector& s) { return s.amplitudes(); })
        .def("__repr__", [](const StateVector& s) {
            return "StateVector(dim=" + std::to_string(s.dim()) + ")";
        });

    // Single-photon interferometer.
    m.def(
        "mzi_probabilities",
        [](double phi1, double phi2, bool bs2_present, const PhaseConvention& conv) {
            return mzi_probabilities({phi1, phi2, bs2_present}, conv);
        },
        py::arg("phi1"), py::arg("phi2"), py::arg("bs2_present") = true,
        py::arg("convention") = PhaseConvention::standard(),
        "Detection probabilities (p1, p2) of the two-splitter single-photon "
        "interferometer; without the second splitter both are 1/2.");

    // Two-photon analysis.
    m.def(
        "coincidence_table",
        [](double phi_a, double phi_b, const PhaseConvention& conv) {
            return coincidence_table({phi_a, phi_b, conv});
        },
        py::arg("phi_a"), py::arg("phi_b"),
        py::arg("convention") = PhaseConvention::standard(),
        "Joint statistics of the two-photon circuit from the path-sum engine.");
    m.def("default_phase_grid", &default_phase_grid,
          "101 evenly spaced phase differences covering [0, pi].");
    m.def("correlation_curve", &correlation_curve, py::arg("grid"),
          py::arg("convention") = PhaseConvention::standard(),
          "Coincidence tables over a grid of phase differences (phi_a = 0).");
    m.def("phase_offset_check", &phase_offset_check,
          py::arg("convention") = PhaseConvention::standard(),
          "Fringe offsets u, v and their difference (pi for every unitary "
          "convention).");
    m.def("chsh_value", &chsh_value, py::arg("a"), py::arg("a2"), py::arg("b"),
          py::arg("b2"), py::arg("convention") = PhaseConvention::standard(),
          "S = |E(a,b) - E(a,b2) + E(a2,b) + E(a2,b2)| with engine-computed "
          "correlations; 2*sqrt(2) at (0, pi/2, pi/4, 3*pi/4).");
    m.def("table1", &table1,
          "Rows at phases {0, pi/4, pi/2, 3*pi/4, pi} comparing single-photon "
          "fringes with entangled-pair marginals and correlations.");

    // Monte Carlo sampling.
    m.def(
        "sample_trials",
        [](double phi_a, double phi_b, std::uint64_t n, std::uint64_t seed,
           std::uint64_t stream, const PhaseConvention& conv) {
            return sample_trials({phi_a, phi_b, conv}, n, seed, stream);
        },
        py::arg("phi_a"), py::arg("phi_b"), py::arg("n"), py::arg("seed"),
        py::arg("stream") = 0, py::arg("convention") = PhaseConvention::standard(),
        "Seeded coincidence trials; deterministic in (phases, n, seed, stream).");
    m.def("tally", &tally, py::arg("trials"),
          "Counts and the correlation estimate for a list of trials.");
    m.def("estimate_chsh", &estimate_chsh, py::arg("a"), py::arg("a2"),
          py::arg("b"), py::arg("b2"), py::arg("n_per_setting"), py::arg("seed"),
          py::arg("convention") = PhaseConvention::standard(),
          "Sampled CHSH statistic over the four setting pairs (streams 0..3).");

    // Measurement chain and the matrix-propagation route.
    m.def("path_entangled_pair", &path_entangled_pair,
          py::arg("relative_phase") = 0.0,
          "(|A1 B1> + e^{i phase} |A2 B2>)/sqrt(2).");
    m.def("equal_path_superposition", &equal_path_superposition, py::arg("subsystem"),
          "(|1> + |2>)/sqrt(2) on one photon's path modes.");
    m.def("detector_ready_state", &detector_ready_state,
          "The detector register before it has registered anything.");
    m.def("tensor", &tensor, py::arg("lhs"), py::arg("rhs"),
          "Product of two single-subsystem states on disjoint subsystems.");
    m.def(
        "apply_measurement",
        [](const StateVector& input) { return apply_measurement(input); },
        py::arg("state"),
        "Calibration |Aj>|ready> -> |Aj>|Bj| extended linearly; turns a path "
        "superposition times |ready> into an entangled pair.");
    m.def("outcome_distribution", &outcome_distribution, py::arg("state"),
          "Joint detection statistics read directly off a composite state.");
    m.def("coherence_report", &coherence_report, py::arg("state"),
          py::arg("subsystem"),
          "Off-diagonal magnitude and purity of the reduced density matrix.");
    m.def(
        "propagate",
        [](const StateVector& state,
           const std::vector<std::pair<Subsystem, Matrix2>>& steps) {
            std::vector<SubsystemUnitary> chain;
            chain.reserve(steps.size());
            for (const auto& [subsystem, rows] : steps) {
                chain.push_back({subsystem, from_rows(rows)});
            }
            return propagate(state, chain);
        },
        py::arg("state"), py::arg("steps"),
        "Applies 2x2 unitaries (subsystem, rows) in order to a labeled state.");
    m.def(
        "beam_splitter_matrix",
        [](const PhaseConvention& conv) {
            return to_rows(element_unitary(beam_splitter(), conv));
        },
        py::arg("convention") = PhaseConvention::standard(),
        "The 2x2 balanced beam-splitter unitary under a phase convention.");
    m.def(
        "oracle_coincidence_probabilities",
        [](double phi_a, double phi_b, const PhaseConvention& conv) {
            return oracle_coincidence_probabilities({phi_a, phi_b, conv});
        },
        py::arg("phi_a"), py::arg("phi_b"),
        py::arg("convention") = PhaseConvention::standard(),
        "Coincidence probabilities by matrix propagation (lexicographic pair "
        "order); the independent check on the path-sum engine.");
}
