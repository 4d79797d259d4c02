// Complex linear algebra over small labeled tensor-product spaces.
//
// Everything in this simulator lives in a 2- or 4-dimensional Hilbert space:
// each photon has two path modes, and the composite two-photon space uses the
// fixed lexicographic basis (A1B1, A1B2, A2B1, A2B2). Values are immutable
// after construction and validated on construction, so any StateVector or
// DensityMatrix in circulation satisfies its invariants.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace biphoton {

using Amplitude = std::complex<double>;

// Tolerance for analytic identities (norms, traces, Hermiticity, engine
// cross-checks). Dimensions are <= 4, so near machine precision is realistic.
inline constexpr double kAnalyticTol = 1e-12;

// Reduced density matrices may pick up tiny negative eigenvalues from
// rounding; anything above this floor counts as positive semidefinite.
inline constexpr double kEigenvalueFloor = -1e-10;

double modulus_squared(const Amplitude& a);

// Phase of a nonzero amplitude, wrapped to [0, 2*pi).
double phase(const Amplitude& a);

// Wraps an angle in radians to [0, 2*pi).
double wrap_two_pi(double angle);

enum class Subsystem { A, B };

// Path modes. Ready is a formal pre-measurement label for subsystem B only
// (the detector state before it has registered anything).
enum class Mode { One, Two, Ready };

// Detector/mode index as the integer 1 or 2.
int mode_index(Mode m);
Mode mode_from_index(int i);

// One basis ket of the labeled product space. Single-subsystem kets set only
// one of the two labels; composite kets set both (A label first by
// convention, which the ordering here encodes).
struct Ket {
    std::optional<Mode> a;
    std::optional<Mode> b;

    friend bool operator==(const Ket&, const Ket&) = default;
};

Ket ket_a(Mode m);
Ket ket_b(Mode m);
Ket ket_ab(Mode a, Mode b);

// Canonical bases.
std::vector<Ket> basis_a();        // |A1>, |A2>
std::vector<Ket> basis_b();        // |B1>, |B2>
std::vector<Ket> basis_ab();       // lexicographic |A1B1>, |A1B2>, |A2B1>, |A2B2>
std::vector<Ket> basis_a_ready();  // |A1,ready>, |A2,ready>
std::vector<Ket> basis_ready();    // |ready> alone

// Dense square complex matrix, row-major, dimension 2 or 4 in practice.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Amplitude& operator()(std::size_t row, std::size_t col);
    const Amplitude& operator()(std::size_t row, std::size_t col) const;

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix adjoint() const;
    Amplitude trace() const;

    // max_ij |this_ij - rhs_ij|
    double max_abs_diff(const ComplexMatrix& rhs) const;

    bool is_unitary(double tol = kAnalyticTol) const;
    bool is_hermitian(double tol = kAnalyticTol) const;

  private:
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

// Kronecker product (lhs indexes the slow axis).
ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

// Eigenvalues of a Hermitian matrix, ascending. Uses the closed 2x2 formula
// for dim 2 and a cyclic Jacobi sweep for larger (here: 4x4) matrices.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Normalized state over a labeled basis. Construction rejects duplicate or
// shape-inconsistent kets and any amplitude vector whose norm is not 1
// within kAnalyticTol.
class StateVector {
  public:
    StateVector(std::vector<Ket> basis, std::vector<Amplitude> amplitudes);

    const std::vector<Ket>& basis() const { return basis_; }
    const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
    std::size_t dim() const { return basis_.size(); }

    // Amplitude on a ket; zero if the ket is not part of the basis.
    Amplitude amplitude(const Ket& k) const;

    friend Amplitude inner(const StateVector& bra, const StateVector& ket);

  private:
    std::vector<Ket> basis_;
    std::vector<Amplitude> amplitudes_;
};

// <bra|ket>; bases must match ket-for-ket.
Amplitude inner(const StateVector& bra, const StateVector& ket);

// Hermitian, unit-trace, positive-semidefinite matrix over a labeled basis.
class DensityMatrix {
  public:
    DensityMatrix(std::vector<Ket> basis, ComplexMatrix entries);

    const std::vector<Ket>& basis() const { return basis_; }
    const ComplexMatrix& entries() const { return entries_; }
    std::size_t dim() const { return basis_.size(); }

  private:
    std::vector<Ket> basis_;
    ComplexMatrix entries_;
};

// tr(rho^2); 1 for pure states, 1/2 for the maximally mixed two-level state.
double purity(const DensityMatrix& rho);

// Product of two single-subsystem states on disjoint subsystems. The result
// is over ordered-pair kets, A labels varying slowest regardless of argument
// order.
StateVector tensor(const StateVector& lhs, const StateVector& rhs);

// |s><s| as a density matrix.
DensityMatrix outer(const StateVector& s);

// Reduced density matrix of one subsystem of a composite state.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// State factories.
StateVector equal_path_superposition(Subsystem s);        // (|s1> + |s2>)/sqrt2
StateVector path_entangled_pair(double relative_phase = 0.0);  // (|A1B1> + e^{i phase}|A2B2>)/sqrt2
StateVector basis_state(const std::vector<Ket>& basis, const Ket& which);
StateVector detector_ready_state();                       // |ready> on subsystem B

}  // namespace biphoton
