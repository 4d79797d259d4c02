#include "biphoton/measurement.hpp"

#include <algorithm>
#include <stdexcept>

namespace biphoton {

namespace {

std::vector<Amplitude> apply_matrix(const ComplexMatrix& m,
                                    const std::vector<Amplitude>& v) {
    std::vector<Amplitude> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

}  // namespace

StateVector apply_measurement(const StateVector& input, const MeasurementMap& m) {
    const auto out_basis = basis_ab();
    std::vector<Amplitude> out_amps(out_basis.size());
    for (std::size_t i = 0; i < input.dim(); ++i) {
        const Ket& in_ket = input.basis()[i];
        const auto entry = std::find_if(
            m.calibration.begin(), m.calibration.end(),
            [&in_ket](const auto& pair) { return pair.first == in_ket; });
        if (entry == m.calibration.end()) {
            throw std::invalid_argument("state outside the calibrated subspace");
        }
        const auto slot = std::find(out_basis.begin(), out_basis.end(), entry->second);
        out_amps[static_cast<std::size_t>(slot - out_basis.begin())] +=
            input.amplitudes()[i];
    }
    return StateVector(out_basis, std::move(out_amps));
}

StateVector propagate(const StateVector& state,
                      const std::vector<SubsystemUnitary>& steps) {
    const bool composite = state.basis() == basis_ab();
    Subsystem single{};
    if (!composite) {
        if (state.basis() == basis_a()) {
            single = Subsystem::A;
        } else if (state.basis() == basis_b()) {
            single = Subsystem::B;
        } else {
            throw std::invalid_argument("propagate expects path-mode bases");
        }
    }

    std::vector<Amplitude> amps = state.amplitudes();
    for (const SubsystemUnitary& step : steps) {
        if (step.matrix.dim() != 2) {
            throw std::invalid_argument("propagation steps must be 2x2");
        }
        if (!step.matrix.is_unitary()) {
            throw std::invalid_argument("propagation steps must be unitary");
        }
        if (composite) {
            const auto eye = ComplexMatrix::identity(2);
            const auto lifted = step.subsystem == Subsystem::A
                                    ? kron(step.matrix, eye)
                                    : kron(eye, step.matrix);
            amps = apply_matrix(lifted, amps);
        } else {
            if (step.subsystem != single) {
                throw std::invalid_argument("unitary subsystem does not match state");
            }
            amps = apply_matrix(step.matrix, amps);
        }
    }
    return StateVector(state.basis(), std::move(amps));
}

CoherenceReport coherence_report(const StateVector& state, Subsystem s) {
    const auto reduced = partial_trace(outer(state), s);
    CoherenceReport report;
    report.subsystem = s;
    report.offdiag_magnitude =
        reduced.dim() == 2 ? std::abs(reduced.entries()(0, 1)) : 0.0;
    report.purity = purity(reduced);
    return report;
}

CoincidenceTable outcome_distribution(const StateVector& state) {
    if (state.basis() != basis_ab()) {
        throw std::invalid_argument("outcome distribution needs the composite basis");
    }
    std::array<std::array<double, 2>, 2> p{};
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            p[i - 1][j - 1] = modulus_squared(
                state.amplitude(ket_ab(mode_from_index(i), mode_from_index(j))));
        }
    }
    return table_from_probabilities(0.0, 0.0, p);
}

std::array<double, 4> oracle_coincidence_probabilities(const RtoCircuit& c) {
    std::vector<SubsystemUnitary> steps;
    for (Subsystem s : {Subsystem::A, Subsystem::B}) {
        for (const OpticalElement& e : rto_arm_elements(c, s)) {
            steps.push_back({s, element_unitary(e, c.convention)});
        }
    }
    const auto out = propagate(path_entangled_pair(), steps);
    std::array<double, 4> p{};
    for (std::size_t k = 0; k < 4; ++k) {
        p[k] = modulus_squared(out.amplitudes()[k]);
    }
    return p;
}

}  // namespace biphoton
