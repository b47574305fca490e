#include "fes/fes_basis.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <string>

namespace fes {

FesVector::FesVector(int n, std::vector<cplx> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (n < 1) {
        throw std::invalid_argument("qubit count must be >= 1");
    }
    if (coeffs_.size() != static_cast<std::size_t>(fes_dimension(n))) {
        throw std::invalid_argument("FES coefficient vector for n=" + std::to_string(n) +
                                    " must have " + std::to_string(fes_dimension(n)) +
                                    " entries, got " + std::to_string(coeffs_.size()));
    }
}

FesVector FesVector::basis_vector(int n, std::size_t index) {
    std::vector<cplx> coeffs(fes_dimension(n), cplx{});
    coeffs.at(index) = cplx{1.0};
    return FesVector(n, std::move(coeffs));
}

BasisIndex FesVector::basis_index(std::size_t i) const {
    const int q = 2 * static_cast<int>(i);
    return BasisIndex{n_ - q, q};
}

double FesVector::norm() const {
    double sum = 0.0;
    for (const cplx& c : coeffs_) sum += std::norm(c);
    return std::sqrt(sum);
}

FesVector FesVector::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    FesVector out = *this;
    for (cplx& c : out.coeffs_) c /= nrm;
    return out;
}

FesVector FesVector::phase_fixed() const {
    std::size_t anchor = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const double mag = std::abs(coeffs_[i]);
        if (mag > best) {
            best = mag;
            anchor = i;
        }
    }
    if (best == 0.0) return *this;
    const cplx phase = std::conj(coeffs_[anchor]) / best;
    FesVector out = *this;
    for (cplx& c : out.coeffs_) c *= phase;
    return out;
}

std::size_t fes_index(int n, BasisIndex index) {
    if (index.p < 0 || index.q < 0 || index.p + index.q != n || index.q % 2 != 0) {
        throw std::invalid_argument("(" + std::to_string(index.p) + "," + std::to_string(index.q) +
                                    ") is not an even-q basis member for n=" + std::to_string(n));
    }
    return static_cast<std::size_t>(index.q / 2);
}

int fes_dimension(int n) {
    if (n < 1) {
        throw std::invalid_argument("qubit count must be >= 1");
    }
    return n / 2 + 1;
}

StateVector dicke(int n, int k) {
    if (k < 0 || k > n) {
        throw std::out_of_range("dicke: k must be in [0, n]");
    }
    StateVector out(n);
    out[0] = cplx{};
    const int ones = n - k;  // k zeros means n-k ones
    const double amp = 1.0 / std::sqrt(static_cast<double>(degeneracy(k, n - k)));
    for (std::size_t x = 0; x < out.dim(); ++x) {
        if (std::popcount(x) == ones) out[x] = cplx{amp};
    }
    return out;
}

StateVector psi_pq(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1) {
        throw std::invalid_argument("psi_pq: need p, q >= 0 and p + q >= 1");
    }
    return apply_local(LocalOperator::hadamard(), dicke(p + q, p));
}

std::uint64_t degeneracy(int p, int q) {
    if (p < 0 || q < 0) {
        throw std::invalid_argument("degeneracy: p and q must be >= 0");
    }
    // binomial(p+q, min(p,q)) by the multiplicative rule; exact at every step.
    const std::uint64_t k = static_cast<std::uint64_t>(p < q ? p : q);
    const std::uint64_t m = static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(q);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (m - k + i) / i;
    }
    return result;
}

StateVector embed(const FesVector& v) {
    const int n = v.n();
    std::vector<cplx> amps(std::size_t{1} << n, cplx{});
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i] == cplx{}) continue;
        const BasisIndex b = v.basis_index(i);
        const StateVector basis = psi_pq(b.p, b.q);
        for (std::size_t x = 0; x < amps.size(); ++x) {
            amps[x] += v[i] * basis[x];
        }
    }
    return StateVector(n, std::move(amps));
}

FesVector expand(const StateVector& state, double tol) {
    const int n = state.n();
    std::vector<cplx> coeffs(fes_dimension(n));
    std::vector<cplx> remainder(state.amps());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const int q = 2 * static_cast<int>(i);
        const StateVector basis = psi_pq(n - q, q);
        coeffs[i] = inner(basis, state);
        for (std::size_t x = 0; x < remainder.size(); ++x) {
            remainder[x] -= coeffs[i] * basis[x];
        }
    }
    double residual_sq = 0.0;
    for (const cplx& r : remainder) residual_sq += std::norm(r);
    const double residual = std::sqrt(residual_sq);
    if (residual > tol) {
        char msg[64];
        std::snprintf(msg, sizeof(msg), "%.3g", residual);
        throw NotFesError(
            std::string("state is not FES: component outside the even-q span has norm ") + msg);
    }
    return FesVector(n, std::move(coeffs)).normalized();
}

}  // namespace fes
