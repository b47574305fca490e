// classify.hpp
// Equivalence-class analysis of FES states under invertible local operations:
// eigenstate detection, curve endpoints and unreachable interior eigenstates,
// stability sweeps toward class boundaries, the four-qubit G family, closest
// symmetric product states, and the odd-even correspondence.

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fes/fes_basis.hpp"
#include "fes/ilo.hpp"
#include "fes/statevec.hpp"

namespace fes {

// |c_pq| above this counts as support. Floating point cannot certify the
// exact zeros the case analysis depends on; this is the practical surrogate.
inline constexpr double kSupportTol = 1e-9;

struct ClassReport {
    bool is_eigenstate = false;
    std::vector<BasisIndex> support;  // q ascending, i.e. p descending
    int p_max = 0;
    int p_min = 0;
    // Limit states of the curve: as t -> +1 the largest-p support member
    // dominates, as t -> -1 the smallest-p one.
    BasisIndex endpoint_plus;
    BasisIndex endpoint_minus;
    // Entangled (pq != 0) eigenstates on the curve's closure.
    std::vector<BasisIndex> reachable_boundaries;
    // Even-q eigenstates with p strictly between p_min and p_max; no ILO
    // curve through v passes through or approaches these.
    std::vector<BasisIndex> unreachable_interior;
    // Boundary classes of v's equivalence class: the endpoint eigenstates.
    // Empty when v is itself an eigenstate (a singleton class).
    std::vector<BasisIndex> neighbors;
};

ClassReport classify(const FesVector& v, double tol = kSupportTol);

struct StabilitySample {
    double epsilon = 0.0;
    double t = 0.0;
    double infidelity = 0.0;
    double probability = 0.0;
};

// Probes the approach to a curve endpoint at t = +-(1 - eps) for each eps.
// `target` must be the largest-p or smallest-p support member of v (consult
// classify first); the sign of t follows which one it is.
std::vector<StabilitySample> stability_sweep(const FesVector& v, BasisIndex target,
                                             std::span<const double> eps_grid,
                                             const IloParams& params);

// Log-spaced grid from eps_hi down to eps_lo, points_per_decade per decade.
std::vector<double> log_eps_grid(double eps_hi = 1e-1, double eps_lo = 1e-6,
                                 int points_per_decade = 5);

// |f|^6 [(1+t^2)^3 + 8 t^3], the three-qubit GHZ success probability.
double ghz3_probability_closed_form(double t, double f);

// Four-qubit family
//   G_abcd = (a+d)/2 (|0000>+|1111>) + (a-d)/2 (|0011>+|1100>)
//          + (b+c)/2 (|0101>+|1010>) + (b-c)/2 (|0110>+|1001>),
// returned unnormalized. Throws std::invalid_argument on all-zero input.
StateVector build_g(cplx a, cplx b, cplx c, cplx d);

// (|GHZ_4> + mu |D_4^(2)>) / sqrt(1 + |mu|^2). Equals the normalized
// G_{a,a-d,0,d} with mu = sqrt(3)(a-d)/(a+d) up to global phase.
StateVector canonical_four(cplx mu);

// (cos(theta)|0> + sin(theta)|1>)^{\otimes n}.
StateVector symmetric_product_state(double theta, int n);

struct ProductFit {
    double theta = 0.0;       // in [0, pi)
    double overlap_sq = 0.0;  // |<product(theta)|psi>|^2 at the maximizer
    bool degenerate = false;  // another well-separated grid point ties the max
};

// Maximizes |<product(theta)|psi>|^2 over theta in [0, pi) by dense grid scan
// plus golden-section refinement. Ties break toward the smallest theta.
// Requires a normalized permutation-symmetric input (FES not required).
ProductFit closest_symmetric_product(const StateVector& state, int grid_size = 4096,
                                     double refine_tol = 1e-12);

// Coefficient correspondence between the odd n=2m+1 problem and the even
// n=2m one: even coefficients are the odd ones scaled by (1+t), then
// renormalized. even_odd_map is the inverse (divides by (1+t)).
FesVector odd_even_map(const FesVector& v, double t);
FesVector even_odd_map(const FesVector& v, double t);

// "GHZ" (n >= 2), "W" and "W_fes" (n = 3 only), "S" = |+...+> (n >= 1).
StateVector named_state(std::string_view name, int n);

}  // namespace fes
