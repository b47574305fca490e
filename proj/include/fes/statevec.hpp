// statevec.hpp
// Dense 2^n complex state vectors and identical-per-qubit local operations.
// This is the ground-truth engine the subspace-level code is checked against.
// Convention used everywhere: qubit 0 is the most significant bit of a basis
// index, so |q0 q1 ... q_{n-1}> maps to the integer q0*2^{n-1} + ... + q_{n-1}.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fes {

using cplx = std::complex<double>;

// Dense vectors exist for validation at desk scale only.
inline constexpr int kMaxDenseQubits = 14;

// Default tolerance for symmetry and normalization predicates; comfortably
// above double accumulation error for n <= kMaxDenseQubits.
inline constexpr double kDefaultTol = 1e-10;

// 2x2 complex matrix, row major.
struct LocalOperator {
    std::array<cplx, 4> m{};

    cplx operator()(int row, int col) const { return m[2 * row + col]; }
    cplx& operator()(int row, int col) { return m[2 * row + col]; }

    static LocalOperator identity();
    static LocalOperator flip();      // X
    static LocalOperator hadamard();  // H

    cplx det() const { return m[0] * m[3] - m[1] * m[2]; }
    bool invertible(double tol = 1e-14) const;

    LocalOperator adjoint() const;
    LocalOperator scaled(cplx factor) const;
    LocalOperator operator*(const LocalOperator& rhs) const;  // matrix product
};

class StateVector {
  public:
    // |0...0> on n qubits.
    explicit StateVector(int n);

    // Takes ownership of an amplitude vector; size must be exactly 2^n.
    StateVector(int n, std::vector<cplx> amps);

    // Computational basis state |bits>, bit i of `bits` read per the MSB
    // convention above.
    static StateVector basis_state(int n, std::uint64_t bits);

    int n() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    const cplx& operator[](std::size_t i) const { return amps_[i]; }
    cplx& operator[](std::size_t i) { return amps_[i]; }

    const std::vector<cplx>& amps() const { return amps_; }

    double norm() const;
    StateVector normalized() const;

    // Multiplies by a global phase so the first amplitude of largest
    // magnitude becomes real positive; makes "equal up to phase" a plain
    // element-wise comparison.
    StateVector phase_fixed() const;

  private:
    int n_;
    std::vector<cplx> amps_;
};

// op applied to every qubit (op^{\otimes n}) without materializing the
// 2^n x 2^n matrix. The result is not normalized; singular ops are allowed.
StateVector apply_local(const LocalOperator& op, const StateVector& state);

// Exchange of qubits i and j: amplitudes permuted by swapping bits i and j
// of each basis index. Throws std::out_of_range for bad indices.
StateVector apply_exchange(int i, int j, const StateVector& state);

// Flip and exchange symmetry test for a normalized state. Checks
// X^{\otimes n}|psi> = |psi> and invariance under the n-1 adjacent
// transpositions, which generate the full symmetric group.
bool is_fes(const StateVector& state, double tol = kDefaultTol);

// <a|b>, conjugating a. Throws std::invalid_argument on dimension mismatch.
cplx inner(const StateVector& a, const StateVector& b);

// |<a|b>|^2 for normalized inputs.
double fidelity(const StateVector& a, const StateVector& b);

// l2 norm of (a - b).
double distance(const StateVector& a, const StateVector& b);

}  // namespace fes
