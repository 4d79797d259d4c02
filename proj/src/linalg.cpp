#include "biphoton/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biphoton {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// All kets of a basis must address the same set of subsystems, be pairwise
// distinct, and use Ready only as a B label.
void validate_basis(const std::vector<Ket>& basis) {
    if (basis.empty()) {
        throw std::invalid_argument("basis must be nonempty");
    }
    const bool has_a = basis.front().a.has_value();
    const bool has_b = basis.front().b.has_value();
    if (!has_a && !has_b) {
        throw std::invalid_argument("ket addresses no subsystem");
    }
    for (const Ket& k : basis) {
        if (k.a.has_value() != has_a || k.b.has_value() != has_b) {
            throw std::invalid_argument("basis kets address inconsistent subsystems");
        }
        if (k.a.has_value() && *k.a == Mode::Ready) {
            throw std::invalid_argument("Ready is a detector (B) label only");
        }
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t k = j + 1; k < basis.size(); ++k) {
            if (basis[j] == basis[k]) {
                throw std::invalid_argument("basis kets must be distinct");
            }
        }
    }
}

bool is_single_subsystem(const std::vector<Ket>& basis, Subsystem& which) {
    const bool has_a = basis.front().a.has_value();
    const bool has_b = basis.front().b.has_value();
    if (has_a == has_b) {
        return false;
    }
    which = has_a ? Subsystem::A : Subsystem::B;
    return true;
}

}  // namespace

double modulus_squared(const Amplitude& a) { return std::norm(a); }

double phase(const Amplitude& a) {
    if (std::norm(a) == 0.0) {
        throw std::domain_error("phase undefined for zero amplitude");
    }
    return wrap_two_pi(std::arg(a));
}

double wrap_two_pi(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r -= kTwoPi;
    }
    return r;
}

int mode_index(Mode m) {
    switch (m) {
        case Mode::One: return 1;
        case Mode::Two: return 2;
        case Mode::Ready: break;
    }
    throw std::invalid_argument("Ready has no detector index");
}

Mode mode_from_index(int i) {
    if (i == 1) return Mode::One;
    if (i == 2) return Mode::Two;
    throw std::invalid_argument("detector index must be 1 or 2");
}

Ket ket_a(Mode m) { return Ket{m, std::nullopt}; }
Ket ket_b(Mode m) { return Ket{std::nullopt, m}; }
Ket ket_ab(Mode a, Mode b) { return Ket{a, b}; }

std::vector<Ket> basis_a() { return {ket_a(Mode::One), ket_a(Mode::Two)}; }
std::vector<Ket> basis_b() { return {ket_b(Mode::One), ket_b(Mode::Two)}; }

std::vector<Ket> basis_ab() {
    return {ket_ab(Mode::One, Mode::One), ket_ab(Mode::One, Mode::Two),
            ket_ab(Mode::Two, Mode::One), ket_ab(Mode::Two, Mode::Two)};
}

std::vector<Ket> basis_a_ready() {
    return {ket_ab(Mode::One, Mode::Ready), ket_ab(Mode::Two, Mode::Ready)};
}

std::vector<Ket> basis_ready() { return {ket_b(Mode::Ready)}; }

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("matrix dimension must be positive");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Amplitude& ComplexMatrix::operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
}

const Amplitude& ComplexMatrix::operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Amplitude aik = (*this)(i, k);
            if (aik == Amplitude{}) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(i, j) = std::conj((*this)(j, i));
        }
    }
    return out;
}

Amplitude ComplexMatrix::trace() const {
    Amplitude t{};
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - rhs.entries_[i]));
    }
    return worst;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(identity(dim_)) < tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) < tol;
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    const std::size_t nl = lhs.dim();
    const std::size_t nr = rhs.dim();
    ComplexMatrix out(nl * nr);
    for (std::size_t i = 0; i < nl; ++i) {
        for (std::size_t j = 0; j < nl; ++j) {
            for (std::size_t k = 0; k < nr; ++k) {
                for (std::size_t l = 0; l < nr; ++l) {
                    out(i * nr + k, j * nr + l) = lhs(i, j) * rhs(k, l);
                }
            }
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 1) {
        return {m(0, 0).real()};
    }
    if (n == 2) {
        const double mean = (m(0, 0).real() + m(1, 1).real()) / 2.0;
        const double half_gap = (m(0, 0).real() - m(1, 1).real()) / 2.0;
        const double radius = std::hypot(half_gap, std::abs(m(0, 1)));
        return {mean - radius, mean + radius};
    }

    // Cyclic Jacobi with complex Givens rotations; fine for fixed dim 4.
    ComplexMatrix a = m;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Amplitude apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Amplitude unit = apq / r;
                ComplexMatrix g = ComplexMatrix::identity(n);
                g(p, p) = c;
                g(p, q) = s * unit;
                g(q, p) = -s * std::conj(unit);
                g(q, q) = c;
                a = g.adjoint() * a * g;
            }
        }
    }
    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) {
        eigs[i] = a(i, i).real();
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

StateVector::StateVector(std::vector<Ket> basis, std::vector<Amplitude> amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    validate_basis(basis_);
    if (basis_.size() != amplitudes_.size()) {
        throw std::invalid_argument("amplitude count must match basis size");
    }
    double norm_sq = 0.0;
    for (const Amplitude& amp : amplitudes_) {
        norm_sq += std::norm(amp);
    }
    if (std::abs(norm_sq - 1.0) > kAnalyticTol) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

Amplitude StateVector::amplitude(const Ket& k) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i] == k) {
            return amplitudes_[i];
        }
    }
    return Amplitude{};
}

Amplitude inner(const StateVector& bra, const StateVector& ket) {
    if (bra.basis_ != ket.basis_) {
        throw std::invalid_argument("inner product requires identical bases");
    }
    Amplitude acc{};
    for (std::size_t i = 0; i < bra.amplitudes_.size(); ++i) {
        acc += std::conj(bra.amplitudes_[i]) * ket.amplitudes_[i];
    }
    return acc;
}

DensityMatrix::DensityMatrix(std::vector<Ket> basis, ComplexMatrix entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
    validate_basis(basis_);
    if (entries_.dim() != basis_.size()) {
        throw std::invalid_argument("matrix dimension must match basis size");
    }
    if (!entries_.is_hermitian(kAnalyticTol)) {
        throw std::invalid_argument("density matrix must be Hermitian");
    }
    if (std::abs(entries_.trace() - Amplitude{1.0}) > kAnalyticTol) {
        throw std::invalid_argument("density matrix must have unit trace");
    }
    for (double eig : hermitian_eigenvalues(entries_)) {
        if (eig < kEigenvalueFloor) {
            throw std::invalid_argument("density matrix must be positive semidefinite");
        }
    }
}

double purity(const DensityMatrix& rho) {
    return (rho.entries() * rho.entries()).trace().real();
}

StateVector tensor(const StateVector& lhs, const StateVector& rhs) {
    Subsystem ls{};
    Subsystem rs{};
    if (!is_single_subsystem(lhs.basis(), ls) || !is_single_subsystem(rhs.basis(), rs)) {
        throw std::invalid_argument("tensor expects single-subsystem factors");
    }
    if (ls == rs) {
        throw std::invalid_argument("tensor factors must be over disjoint subsystems");
    }
    const StateVector& a_state = (ls == Subsystem::A) ? lhs : rhs;
    const StateVector& b_state = (ls == Subsystem::A) ? rhs : lhs;

    std::vector<Ket> basis;
    std::vector<Amplitude> amps;
    basis.reserve(a_state.dim() * b_state.dim());
    amps.reserve(a_state.dim() * b_state.dim());
    for (std::size_t i = 0; i < a_state.dim(); ++i) {
        for (std::size_t j = 0; j < b_state.dim(); ++j) {
            basis.push_back(ket_ab(*a_state.basis()[i].a, *b_state.basis()[j].b));
            amps.push_back(a_state.amplitudes()[i] * b_state.amplitudes()[j]);
        }
    }
    return StateVector(std::move(basis), std::move(amps));
}

DensityMatrix outer(const StateVector& s) {
    ComplexMatrix m(s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        for (std::size_t k = 0; k < s.dim(); ++k) {
            m(j, k) = s.amplitudes()[j] * std::conj(s.amplitudes()[k]);
        }
    }
    return DensityMatrix(s.basis(), std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    const std::vector<Ket>& basis = rho.basis();
    if (!basis.front().a.has_value() || !basis.front().b.has_value()) {
        throw std::invalid_argument("partial trace requires a composite basis");
    }
    auto kept_label = [keep](const Ket& k) { return keep == Subsystem::A ? *k.a : *k.b; };
    auto traced_label = [keep](const Ket& k) { return keep == Subsystem::A ? *k.b : *k.a; };

    std::vector<Mode> kept;
    for (const Ket& k : basis) {
        if (std::find(kept.begin(), kept.end(), kept_label(k)) == kept.end()) {
            kept.push_back(kept_label(k));
        }
    }

    ComplexMatrix reduced(kept.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (traced_label(basis[j]) != traced_label(basis[k])) continue;
            const auto row = static_cast<std::size_t>(
                std::find(kept.begin(), kept.end(), kept_label(basis[j])) - kept.begin());
            const auto col = static_cast<std::size_t>(
                std::find(kept.begin(), kept.end(), kept_label(basis[k])) - kept.begin());
            reduced(row, col) += rho.entries()(j, k);
        }
    }

    std::vector<Ket> reduced_basis;
    reduced_basis.reserve(kept.size());
    for (Mode m : kept) {
        reduced_basis.push_back(keep == Subsystem::A ? ket_a(m) : ket_b(m));
    }
    return DensityMatrix(std::move(reduced_basis), std::move(reduced));
}

StateVector equal_path_superposition(Subsystem s) {
    const double w = 1.0 / std::sqrt(2.0);
    return StateVector(s == Subsystem::A ? basis_a() : basis_b(), {w, w});
}

StateVector path_entangled_pair(double relative_phase) {
    const double w = 1.0 / std::sqrt(2.0);
    return StateVector(basis_ab(),
                       {w, 0.0, 0.0, w * std::polar(1.0, relative_phase)});
}

StateVector basis_state(const std::vector<Ket>& basis, const Ket& which) {
    std::vector<Amplitude> amps(basis.size());
    const auto it = std::find(basis.begin(), basis.end(), which);
    if (it == basis.end()) {
        throw std::invalid_argument("ket not in basis");
    }
    amps[static_cast<std::size_t>(it - basis.begin())] = 1.0;
    return StateVector(basis, std::move(amps));
}

StateVector detector_ready_state() {
    return StateVector(basis_ready(), {1.0});
}

}  // namespace biphoton
