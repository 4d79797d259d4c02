#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "biphoton/measurement.hpp"
#include "support.hpp"

using namespace biphoton;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool close(const Amplitude& a, const Amplitude& b, double tol = kAnalyticTol) {
    return std::abs(a - b) < tol;
}

StateVector ready_input(const Amplitude& alpha, const Amplitude& beta) {
    return StateVector(basis_a_ready(), {alpha, beta});
}

}  // namespace

TEST_CASE("calibration sends |Aj>|ready> to |Aj>|Bj> exactly") {
    const auto one = apply_measurement(ready_input(1.0, 0.0));
    CHECK(one.amplitude(ket_ab(Mode::One, Mode::One)) == Amplitude{1.0});
    CHECK(one.amplitude(ket_ab(Mode::One, Mode::Two)) == Amplitude{0.0});
    CHECK(one.amplitude(ket_ab(Mode::Two, Mode::Two)) == Amplitude{0.0});

    const auto two = apply_measurement(ready_input(0.0, 1.0));
    CHECK(two.amplitude(ket_ab(Mode::Two, Mode::Two)) == Amplitude{1.0});
}

TEST_CASE("linearity turns a superposition into the entangled pair") {
    const auto out = apply_measurement(
        tensor(equal_path_superposition(Subsystem::A), detector_ready_state()));
    const auto expected = path_entangled_pair();
    REQUIRE(out.basis() == expected.basis());
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(out.amplitudes()[i] == expected.amplitudes()[i]);
    }
}

TEST_CASE("the relative phase rides along under measurement") {
    for (int k = 0; k <= 100; ++k) {
        const double phi = kPi * k / 100.0;
        const auto out = apply_measurement(
            ready_input(kInvSqrt2, kInvSqrt2 * std::polar(1.0, phi)));
        CHECK(close(out.amplitude(ket_ab(Mode::One, Mode::One)), kInvSqrt2));
        CHECK(out.amplitude(ket_ab(Mode::One, Mode::Two)) == Amplitude{0.0});
        CHECK(out.amplitude(ket_ab(Mode::Two, Mode::One)) == Amplitude{0.0});
        CHECK(close(out.amplitude(ket_ab(Mode::Two, Mode::Two)),
                    kInvSqrt2 * std::polar(1.0, phi)));
    }
}

TEST_CASE("measurement is an isometry on the calibrated subspace") {
    std::mt19937 gen(41);
    std::normal_distribution<double> gauss;
    std::vector<StateVector> inputs{ready_input(1.0, 0.0), ready_input(0.0, 1.0)};
    for (int extra = 0; extra < 6; ++extra) {
        Amplitude alpha{gauss(gen), gauss(gen)};
        Amplitude beta{gauss(gen), gauss(gen)};
        const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
        inputs.push_back(ready_input(alpha / norm, beta / norm));
    }
    std::vector<StateVector> outputs;
    for (const auto& in : inputs) {
        outputs.push_back(apply_measurement(in));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            CHECK(close(inner(inputs[i], inputs[j]), inner(outputs[i], outputs[j])));
        }
    }
}

TEST_CASE("states outside the calibrated subspace are rejected") {
    CHECK_THROWS_AS(apply_measurement(path_entangled_pair()), std::invalid_argument);
    CHECK_THROWS_AS(apply_measurement(equal_path_superposition(Subsystem::A)),
                    std::invalid_argument);
}

TEST_CASE("propagation applies lifted unitaries in order") {
    const auto c = PhaseConvention::standard();
    const auto bs = element_unitary(beam_splitter(), c);

    const auto unchanged = propagate(path_entangled_pair(1.1), {});
    CHECK(close(unchanged.amplitudes()[3], kInvSqrt2 * std::polar(1.0, 1.1)));

    // A single splitter on a one-photon state.
    const auto split =
        propagate(basis_state(basis_a(), ket_a(Mode::One)), {{Subsystem::A, bs}});
    CHECK(close(split.amplitudes()[0], kInvSqrt2));
    CHECK(close(split.amplitudes()[1], Amplitude{0.0, kInvSqrt2}));

    // A then B on the composite state commute (disjoint subsystems).
    const auto ab = propagate(path_entangled_pair(),
                              {{Subsystem::A, bs}, {Subsystem::B, bs}});
    const auto ba = propagate(path_entangled_pair(),
                              {{Subsystem::B, bs}, {Subsystem::A, bs}});
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(close(ab.amplitudes()[i], ba.amplitudes()[i]));
    }
}

TEST_CASE("propagation rejects mismatched or non-unitary steps") {
    const auto bs = element_unitary(beam_splitter(), PhaseConvention::standard());
    CHECK_THROWS_AS(propagate(equal_path_superposition(Subsystem::A),
                              {{Subsystem::B, bs}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(propagate(path_entangled_pair(),
                              {{Subsystem::A, ComplexMatrix::identity(4)}}),
                    std::invalid_argument);
    ComplexMatrix shrink(2);
    shrink(0, 0) = 0.5;
    shrink(1, 1) = 0.5;
    CHECK_THROWS_AS(propagate(path_entangled_pair(), {{Subsystem::A, shrink}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(propagate(detector_ready_state(), {{Subsystem::B, bs}}),
                    std::invalid_argument);
}

TEST_CASE("propagation preserves the norm for random unitary chains") {
    std::mt19937 gen(42);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const auto conv = testing::random_unitary_convention(gen);
        std::vector<SubsystemUnitary> steps;
        steps.push_back({Subsystem::A, element_unitary(beam_splitter(), conv)});
        steps.push_back(
            {Subsystem::B, element_unitary(phase_shifter(angle(gen), Mode::Two), conv)});
        steps.push_back({Subsystem::B, element_unitary(beam_splitter(), conv)});
        steps.push_back({Subsystem::A, element_unitary(mirror(true), conv)});
        const auto out = propagate(path_entangled_pair(angle(gen)), steps);
        double norm_sq = 0.0;
        for (const auto& a : out.amplitudes()) norm_sq += std::norm(a);
        CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("coherence lives on the pair, not on either photon") {
    // Entangled pair: no single-photon phase anywhere.
    for (Subsystem s : {Subsystem::A, Subsystem::B}) {
        const auto report = coherence_report(path_entangled_pair(), s);
        CHECK(report.offdiag_magnitude == 0.0);
        CHECK(report.purity == doctest::Approx(0.5).epsilon(1e-12));
    }

    // Unentangled superposition next to a ready detector: fully coherent.
    const auto product = tensor(equal_path_superposition(Subsystem::A),
                                detector_ready_state());
    const auto report = coherence_report(product, Subsystem::A);
    CHECK(report.offdiag_magnitude == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.purity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unequal weights show up as Schmidt purity") {
    const double alpha = std::sqrt(0.9);
    const double beta = std::sqrt(0.1);
    const StateVector lopsided(basis_ab(), {alpha, 0.0, 0.0, beta});
    const auto report = coherence_report(lopsided, Subsystem::A);
    CHECK(report.offdiag_magnitude == 0.0);
    CHECK(report.purity == doctest::Approx(0.82).epsilon(1e-12));
}

TEST_CASE("zero-phase outcomes are definite and perfectly correlated") {
    const auto table = outcome_distribution(path_entangled_pair());
    CHECK(table.p[0][0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(table.p[1][1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(table.p[0][1] == 0.0);  // exactly, not approximately
    CHECK(table.p[1][0] == 0.0);
    CHECK(table.p_same == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(table.correlation == doctest::Approx(1.0).epsilon(1e-12));

    const auto basis = outcome_distribution(
        basis_state(basis_ab(), ket_ab(Mode::One, Mode::Two)));
    CHECK(basis.p[0][1] == 1.0);
    CHECK(basis.p[0][0] == 0.0);
    CHECK(basis.p_same == 0.0);

    // A relative phase is invisible without recombination.
    const auto flipped = outcome_distribution(path_entangled_pair(kPi));
    CHECK(flipped.p[0][0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(flipped.p[0][1] == 0.0);

    CHECK_THROWS_AS(outcome_distribution(equal_path_superposition(Subsystem::A)),
                    std::invalid_argument);
}

TEST_CASE("reduced matrices stay fixed while the fringe moves") {
    const auto conv = PhaseConvention::standard();
    const std::vector<SubsystemUnitary> recombine{
        {Subsystem::B, element_unitary(phase_shifter(kPi, Mode::Two), conv)},
        {Subsystem::A, element_unitary(beam_splitter(), conv)},
        {Subsystem::B, element_unitary(beam_splitter(), conv)},
    };
    for (int k = 0; k <= 100; ++k) {
        const double phi = kPi * k / 100.0;
        const auto pair = path_entangled_pair(phi);
        for (Subsystem s : {Subsystem::A, Subsystem::B}) {
            const auto report = coherence_report(pair, s);
            CHECK(report.offdiag_magnitude == 0.0);
            CHECK(report.purity == doctest::Approx(0.5).epsilon(1e-12));
        }
        const auto table = outcome_distribution(propagate(pair, recombine));
        CHECK(table.correlation == doctest::Approx(std::cos(phi)).epsilon(1e-12));
    }
}

TEST_CASE("matrix route and path-sum route agree everywhere") {
    std::mt19937 gen(43);
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    for (int trial = 0; trial < 21; ++trial) {
        const auto conv = trial == 0 ? PhaseConvention::standard()
                                     : testing::random_unitary_convention(gen);
        for (double delta : default_phase_grid()) {
            const double phi_a = angle(gen);
            const RtoCircuit c{phi_a, phi_a + delta, conv};
            const auto oracle = oracle_coincidence_probabilities(c);
            const auto pairs = all_detector_pairs();
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const double engine = modulus_squared(coincidence_amplitude(c, pairs[k]));
                CHECK(engine == doctest::Approx(oracle[k]).epsilon(1e-12));
            }
        }
    }
}
