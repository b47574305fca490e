// fes_basis.hpp
// Dicke states, the |psi_pq> product-state eigenbasis, and conversion between
// dense state vectors and the floor(n/2)+1 even-q coefficients that describe
// a flip and exchange symmetric (FES) state.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fes/statevec.hpp"

namespace fes {

// Labels the eigenstate |psi_pq> with p factors |+> and q factors |->.
// Members of the FES basis have p + q = n and q even.
struct BasisIndex {
    int p = 0;
    int q = 0;
    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

// Thrown when a state fails the FES membership (residual) check.
struct NotFesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coefficients c_pq of an n-qubit FES state in the even-q eigenbasis,
// ordered by q ascending: index i holds c_{n-2i,2i}.
class FesVector {
  public:
    FesVector(int n, std::vector<cplx> coeffs);

    // Unit coefficient on basis member `index`, zeros elsewhere.
    static FesVector basis_vector(int n, std::size_t index);

    int n() const { return n_; }
    std::size_t dim() const { return coeffs_.size(); }

    BasisIndex basis_index(std::size_t i) const;

    const cplx& operator[](std::size_t i) const { return coeffs_[i]; }
    cplx& operator[](std::size_t i) { return coeffs_[i]; }

    const std::vector<cplx>& coeffs() const { return coeffs_; }

    double norm() const;
    FesVector normalized() const;

    // Same global-phase convention as StateVector::phase_fixed.
    FesVector phase_fixed() const;

  private:
    int n_;
    std::vector<cplx> coeffs_;
};

// Position of a basis label inside a FesVector of n qubits (throws
// std::invalid_argument when (p,q) is not an even-q member with p+q=n).
std::size_t fes_index(int n, BasisIndex index);

// floor(n/2) + 1, the dimension of the even-q subspace.
int fes_dimension(int n);

// Dicke state S(n,k): the normalized equal superposition of all n-bit
// strings with exactly k zeros.
StateVector dicke(int n, int k);

// |psi_pq> = H^{\otimes(p+q)} S(p+q, p); an eigenstate of any M(t)^{\otimes n}.
StateVector psi_pq(int p, int q);

// (p+q)! / (p! q!), the degeneracy of the eigenvalue lambda_pq.
std::uint64_t degeneracy(int p, int q);

// Dense state for a coefficient vector: sum_i c_i |psi_{p_i q_i}>.
StateVector embed(const FesVector& v);

// Inverse of embed by projection onto the orthonormal basis. Throws
// NotFesError when the residual outside the even-q span exceeds tol.
FesVector expand(const StateVector& state, double tol = kDefaultTol);

}  // namespace fes
