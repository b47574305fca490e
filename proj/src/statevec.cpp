#include "fes/statevec.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fes {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_same_dim(const StateVector& a, const StateVector& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("state dimension mismatch: n=" + std::to_string(a.n()) +
                                    " vs n=" + std::to_string(b.n()));
    }
}

}  // namespace

LocalOperator LocalOperator::identity() {
    return {{cplx{1.0}, cplx{}, cplx{}, cplx{1.0}}};
}

LocalOperator LocalOperator::flip() {
    return {{cplx{}, cplx{1.0}, cplx{1.0}, cplx{}}};
}

LocalOperator LocalOperator::hadamard() {
    return {{cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{-kInvSqrt2}}};
}

bool LocalOperator::invertible(double tol) const {
    return std::abs(det()) > tol;
}

LocalOperator LocalOperator::adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

LocalOperator LocalOperator::scaled(cplx factor) const {
    return {{factor * m[0], factor * m[1], factor * m[2], factor * m[3]}};
}

LocalOperator LocalOperator::operator*(const LocalOperator& rhs) const {
    LocalOperator out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out(r, c) = (*this)(r, 0) * rhs(0, c) + (*this)(r, 1) * rhs(1, c);
        }
    }
    return out;
}

StateVector::StateVector(int n) : n_(n) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxDenseQubits) + "], got " +
                                    std::to_string(n));
    }
    amps_.assign(std::size_t{1} << n, cplx{});
    amps_[0] = cplx{1.0};
}

StateVector::StateVector(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxDenseQubits) + "], got " +
                                    std::to_string(n));
    }
    if (amps_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("amplitude vector must have 2^n entries");
    }
}

StateVector StateVector::basis_state(int n, std::uint64_t bits) {
    StateVector s(n);
    if (bits >= s.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps_[0] = cplx{};
    s.amps_[bits] = cplx{1.0};
    return s;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const cplx& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

StateVector StateVector::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    StateVector out = *this;
    for (cplx& a : out.amps_) a /= nrm;
    return out;
}

StateVector StateVector::phase_fixed() const {
    std::size_t anchor = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const double mag = std::abs(amps_[i]);
        if (mag > best) {
            best = mag;
            anchor = i;
        }
    }
    if (best == 0.0) return *this;
    const cplx phase = std::conj(amps_[anchor]) / best;
    StateVector out = *this;
    for (cplx& a : out.amps_) a *= phase;
    return out;
}

StateVector apply_local(const LocalOperator& op, const StateVector& state) {
    const int n = state.n();
    std::vector<cplx> amps = state.amps();
    for (int qubit = 0; qubit < n; ++qubit) {
        const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & mask) continue;
            const std::size_t j = i | mask;
            const cplx a0 = amps[i];
            const cplx a1 = amps[j];
            amps[i] = op.m[0] * a0 + op.m[1] * a1;
            amps[j] = op.m[2] * a0 + op.m[3] * a1;
        }
    }
    return StateVector(n, std::move(amps));
}

StateVector apply_exchange(int i, int j, const StateVector& state) {
    const int n = state.n();
    if (i < 0 || i >= n || j < 0 || j >= n) {
        throw std::out_of_range("qubit index out of range");
    }
    if (i == j) return state;
    const std::size_t bi = std::size_t{1} << (n - 1 - i);
    const std::size_t bj = std::size_t{1} << (n - 1 - j);
    std::vector<cplx> amps(state.dim());
    for (std::size_t x = 0; x < amps.size(); ++x) {
        const bool vi = (x & bi) != 0;
        const bool vj = (x & bj) != 0;
        std::size_t y = x;
        if (vi != vj) y = (x ^ bi) ^ bj;  // swap the two bits
        amps[y] = state[x];
    }
    return StateVector(n, std::move(amps));
}

bool is_fes(const StateVector& state, double tol) {
    if (distance(apply_local(LocalOperator::flip(), state), state) >= tol) {
        return false;
    }
    for (int k = 0; k + 1 < state.n(); ++k) {
        if (distance(apply_exchange(k, k + 1, state), state) >= tol) {
            return false;
        }
    }
    return true;
}

cplx inner(const StateVector& a, const StateVector& b) {
    check_same_dim(a, b);
    cplx sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner(a, b));
}

double distance(const StateVector& a, const StateVector& b) {
    check_same_dim(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::norm(a[i] - b[i]);
    }
    return std::sqrt(sum);
}

}  // namespace fes
