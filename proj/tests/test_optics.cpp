#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "biphoton/optics.hpp"
#include "support.hpp"

using namespace biphoton;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool close(const Amplitude& a, const Amplitude& b, double tol = kAnalyticTol) {
    return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("the standard convention is the textbook symmetric splitter") {
    const auto c = PhaseConvention::standard();
    CHECK(c.bs_reflection_phase == kPi / 2);
    CHECK(c.bs_transmission_phase == 0.0);
    CHECK(c.mirror_phase == kPi);
    CHECK(c.is_unitary());

    const PhaseConvention broken{0.3, 0.3, 0.0};
    CHECK_FALSE(broken.is_unitary());
    const PhaseConvention tilted{1.0 + kPi / 2, 1.0, 2.0};
    CHECK(tilted.is_unitary());
}

TEST_CASE("beam splitter under the default convention is (1/sqrt2)[[1,i],[i,1]]") {
    const auto u = element_unitary(beam_splitter(), PhaseConvention::standard());
    CHECK(close(u(0, 0), kInvSqrt2));
    CHECK(close(u(1, 1), kInvSqrt2));
    CHECK(close(u(0, 1), {0.0, kInvSqrt2}));
    CHECK(close(u(1, 0), {0.0, kInvSqrt2}));
    CHECK(u.is_unitary());
}

TEST_CASE("phase shifter acts only on its designated mode") {
    const auto c = PhaseConvention::standard();
    const auto flip = element_unitary(phase_shifter(kPi, Mode::One), c);
    CHECK(close(flip(0, 0), {-1.0, 0.0}));
    CHECK(close(flip(1, 1), {1.0, 0.0}));
    CHECK(flip(0, 1) == Amplitude{0.0});

    const auto quarter = element_unitary(phase_shifter(kPi / 2, Mode::Two), c);
    CHECK(close(quarter(0, 0), {1.0, 0.0}));
    CHECK(close(quarter(1, 1), {0.0, 1.0}));
    CHECK(quarter.is_unitary());

    CHECK_THROWS_AS(phase_shifter(1.0, Mode::Ready), std::invalid_argument);
}

TEST_CASE("mirror is a pure phase, with or without port exchange") {
    const auto c = PhaseConvention::standard();
    const auto plain = element_unitary(mirror(), c);
    CHECK(close(plain(0, 0), {-1.0, 0.0}));
    CHECK(close(plain(1, 1), {-1.0, 0.0}));
    CHECK(plain(0, 1) == Amplitude{0.0});

    const auto swap = element_unitary(mirror(true), c);
    CHECK(swap(0, 0) == Amplitude{0.0});
    CHECK(close(swap(0, 1), {-1.0, 0.0}));
    CHECK(close(swap(1, 0), {-1.0, 0.0}));
    CHECK(swap.is_unitary());
}

TEST_CASE("every element is unitary under every unitary convention") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = testing::random_unitary_convention(gen);
        REQUIRE(c.is_unitary());
        CHECK(element_unitary(beam_splitter(), c).is_unitary());
        CHECK(element_unitary(mirror(), c).is_unitary());
        CHECK(element_unitary(mirror(true), c).is_unitary());
        CHECK(element_unitary(phase_shifter(1.7, Mode::Two), c).is_unitary());
    }
}

TEST_CASE("two cascaded splitters transfer everything to the cross port") {
    std::mt19937 gen(12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto c = trial == 0 ? PhaseConvention::standard()
                                  : testing::random_unitary_convention(gen);
        const auto u = element_unitary(beam_splitter(), c);
        const auto uu = u * u;
        CHECK(modulus_squared(uu(0, 0)) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(modulus_squared(uu(1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(modulus_squared(uu(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("path accumulation multiplies the per-element factors") {
    const auto c = PhaseConvention::standard();
    const double phi_b = 0.9;

    // Mirror, then a shifter in this arm, then transmission at the splitter.
    const std::vector<PathStep> path{
        through_step(mirror(), Mode::One),
        through_step(phase_shifter(phi_b, Mode::One), Mode::One),
        through_step(beam_splitter(), Mode::One),
    };
    const auto amp = accumulate_path_phase(path, c);
    const auto expected =
        kInvSqrt2 * std::polar(1.0, c.mirror_phase + phi_b + c.bs_transmission_phase);
    CHECK(close(amp, expected));

    // Two splitter ports -> modulus exactly 1/2.
    const std::vector<PathStep> two_ports{
        cross_step(beam_splitter(), Mode::One),
        through_step(beam_splitter(), Mode::Two),
    };
    CHECK(std::abs(accumulate_path_phase(two_ports, c)) ==
          doctest::Approx(0.5).epsilon(1e-12));

    // A shifter sitting on the other arm contributes a factor of 1.
    const std::vector<PathStep> off_arm{
        through_step(phase_shifter(2.2, Mode::Two), Mode::One),
    };
    CHECK(close(accumulate_path_phase(off_arm, c), {1.0, 0.0}));
}

TEST_CASE("shifter-free paths have modulus (1/sqrt2)^(splitter ports)") {
    std::mt19937 gen(13);
    std::uniform_int_distribution<int> n_bs(0, 3);
    std::bernoulli_distribution coin;
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = testing::random_unitary_convention(gen);
        std::vector<PathStep> path{through_step(mirror(), Mode::One)};
        const int ports = n_bs(gen);
        Mode m = Mode::One;
        for (int i = 0; i < ports; ++i) {
            if (coin(gen)) {
                path.push_back(through_step(beam_splitter(), m));
            } else {
                path.push_back(cross_step(beam_splitter(), m));
                m = other_mode(m);
            }
        }
        CHECK(std::abs(accumulate_path_phase(path, c)) ==
              doctest::Approx(std::pow(kInvSqrt2, ports)).epsilon(1e-12));
    }
}

TEST_CASE("each step factor equals the matching element-unitary entry") {
    std::mt19937 gen(14);
    const std::vector<OpticalElement> elements{
        beam_splitter(), mirror(), mirror(true),
        phase_shifter(0.4, Mode::One), phase_shifter(2.6, Mode::Two)};
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = testing::random_unitary_convention(gen);
        for (const auto& e : elements) {
            const auto u = element_unitary(e, c);
            for (Mode in : {Mode::One, Mode::Two}) {
                for (Mode out : {Mode::One, Mode::Two}) {
                    const PathStep step{e, in, out};
                    const auto row = static_cast<std::size_t>(mode_index(out) - 1);
                    const auto col = static_cast<std::size_t>(mode_index(in) - 1);
                    Amplitude factor;
                    try {
                        factor = step_amplitude(step, c);
                    } catch (const std::invalid_argument&) {
                        // Traversals an element cannot perform correspond to
                        // zero entries of its unitary.
                        CHECK(u(row, col) == Amplitude{0.0});
                        continue;
                    }
                    CHECK(close(factor, u(row, col)));
                }
            }
        }
    }
}

TEST_CASE("malformed traversals are rejected") {
    const auto c = PhaseConvention::standard();
    CHECK_THROWS_AS(accumulate_path_phase({}, c), std::invalid_argument);
    CHECK_THROWS_AS(step_amplitude(cross_step(mirror(), Mode::One), c),
                    std::invalid_argument);
    CHECK_THROWS_AS(step_amplitude(through_step(mirror(true), Mode::One), c),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        step_amplitude(cross_step(phase_shifter(1.0, Mode::One), Mode::One), c),
        std::invalid_argument);
    CHECK_THROWS_AS(
        step_amplitude(through_step(beam_splitter(), Mode::Ready), c),
        std::invalid_argument);
}
