#include "fes/ilo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fes {

namespace {

double ipow(double base, int exponent) {
    double result = 1.0;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

cplx ipow(cplx base, int exponent) {
    cplx result{1.0};
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

}  // namespace

double scalar_f(const IloParams& params) {
    switch (params.f_policy) {
        case FPolicy::unit:
            return 1.0;
        case FPolicy::povm_max:
            // Largest eigenvalue of M^dag M is f^2 (1+|t|)^2 for all real t;
            // this choice pins it to exactly 1.
            return 1.0 / (1.0 + std::abs(params.t));
    }
    throw std::logic_error("unknown f policy");
}

void require_regular(double t) {
    if (std::abs(t - 1.0) < kSingularTol || std::abs(t + 1.0) < kSingularTol) {
        throw std::domain_error("M(t) is singular at t = +-1 (got t = " + std::to_string(t) + ")");
    }
}

LocalOperator m_of_t(const IloParams& params) {
    require_regular(params.t);
    const double f = scalar_f(params);
    return {{cplx{f}, cplx{f * params.t}, cplx{f * params.t}, cplx{f}}};
}

LocalOperator antidiagonal_equivalent(double s, FPolicy f_policy) {
    const LocalOperator diag = m_of_t(IloParams{s, f_policy});
    return LocalOperator::flip() * diag;
}

cplx lambda_pq(int p, int q, cplx t, cplx f) {
    if (p < 0 || q < 0 || p + q < 1) {
        throw std::invalid_argument("lambda_pq: need p, q >= 0 and p + q >= 1");
    }
    return ipow(f, p + q) * ipow(cplx{1.0} + t, p) * ipow(cplx{1.0} - t, q);
}

double lambda_pq(int p, int q, const IloParams& params) {
    if (p < 0 || q < 0 || p + q < 1) {
        throw std::invalid_argument("lambda_pq: need p, q >= 0 and p + q >= 1");
    }
    require_regular(params.t);
    return ipow(scalar_f(params), p + q) * ipow(1.0 + params.t, p) * ipow(1.0 - params.t, q);
}

FesVector evolve(const FesVector& v, const IloParams& params) {
    require_regular(params.t);
    const int n = v.n();
    std::vector<cplx> coeffs(v.dim());
    double peak = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const BasisIndex b = v.basis_index(i);
        coeffs[i] = v[i] * ipow(1.0 + params.t, b.p) * ipow(1.0 - params.t, b.q);
        peak = std::max(peak, std::abs(coeffs[i]));
    }
    if (peak == 0.0) {
        throw std::domain_error("evolve: zero vector after ILO scaling");
    }
    for (cplx& c : coeffs) c /= peak;  // guards the norm against underflow
    return FesVector(n, std::move(coeffs)).normalized();
}

double success_probability(const FesVector& v, const IloParams& params) {
    require_regular(params.t);
    const int n = v.n();
    const double f2 = scalar_f(params) * scalar_f(params);
    double prob = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const BasisIndex b = v.basis_index(i);
        prob += std::norm(v[i]) * ipow(f2, n) * ipow((1.0 + params.t) * (1.0 + params.t), b.p) *
                ipow((1.0 - params.t) * (1.0 - params.t), b.q);
    }
    return prob;
}

std::vector<CurveSample> curve_trace(const FesVector& v, std::span<const double> t_grid,
                                     const IloParams& params,
                                     std::span<const BasisIndex> targets) {
    for (double t : t_grid) require_regular(t);

    std::vector<std::size_t> target_slots;
    target_slots.reserve(targets.size());
    for (const BasisIndex& b : targets) {
        target_slots.push_back(fes_index(v.n(), b));
    }

    std::vector<CurveSample> samples;
    samples.reserve(t_grid.size());
    for (double t : t_grid) {
        const IloParams at{t, params.f_policy};
        CurveSample sample{t, evolve(v, at), success_probability(v, at), {}};
        sample.target_fidelities.reserve(targets.size());
        for (std::size_t k = 0; k < targets.size(); ++k) {
            sample.target_fidelities.emplace_back(targets[k],
                                                  std::norm(sample.state[target_slots[k]]));
        }
        samples.push_back(std::move(sample));
    }
    return samples;
}

}  // namespace fes
