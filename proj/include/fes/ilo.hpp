// ilo.hpp
// FES invertible local operations M(t) = f(t) [[1, t], [t, 1]], their action
// on coefficient vectors, and stochastic success probabilities.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fes/fes_basis.hpp"
#include "fes/statevec.hpp"

namespace fes {

// Curve parameters t with |t -+ 1| below this are rejected; limits are probed
// by evaluating at t = +-(1 - eps), never at +-1.
inline constexpr double kSingularTol = 1e-12;

// Choice of the scalar f(t) in M(t).
//   unit:     f = 1. Geometry only; "probability" may exceed 1.
//   povm_max: f = 1/(1+|t|), the largest f for which (M^dag M)^{\otimes n} <= I,
//             so the success probability is a valid POVM branch probability.
enum class FPolicy { unit, povm_max };

struct IloParams {
    double t = 0.0;
    FPolicy f_policy = FPolicy::povm_max;
};

double scalar_f(const IloParams& params);

// Throws std::domain_error when t is within kSingularTol of +-1.
void require_regular(double t);

// f(t) [[1, t], [t, 1]].
LocalOperator m_of_t(const IloParams& params);

// f [[s, 1], [1, s]] = X * M(s). X^{\otimes n} fixes FES states, so the curve
// this branch induces on the FES subspace equals the diagonal-branch curve.
LocalOperator antidiagonal_equivalent(double s, FPolicy f_policy = FPolicy::povm_max);

// Eigenvalue of M^{\otimes(p+q)} on |psi_pq>: f^{p+q} (1+t)^p (1-t)^q.
// The complex overload exists for eigenvalue checks only; curves use real t.
cplx lambda_pq(int p, int q, cplx t, cplx f);
double lambda_pq(int p, int q, const IloParams& params);

// Normalized image of v under M(t)^{\otimes n}: coefficients scale by
// (1+t)^p (1-t)^q. Independent of the f policy (f cancels).
FesVector evolve(const FesVector& v, const IloParams& params);

// <psi(0)| (M^dag M)^{\otimes n} |psi(0)> for normalized v, evaluated
// spectrally as sum |c_pq|^2 f^{2n} (1+t)^{2p} (1-t)^{2q}. Under povm_max
// this lies in (0, 1].
double success_probability(const FesVector& v, const IloParams& params);

struct CurveSample {
    double t = 0.0;
    FesVector state;
    double probability = 0.0;
    std::vector<std::pair<BasisIndex, double>> target_fidelities;
};

// One sample per grid point, grid order preserved. Fidelity to a basis
// member |psi_pq> is |c_pq|^2 of the evolved state.
std::vector<CurveSample> curve_trace(const FesVector& v, std::span<const double> t_grid,
                                     const IloParams& params,
                                     std::span<const BasisIndex> targets);

}  // namespace fes
