#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fes/classify.hpp"
#include "fes/fes_basis.hpp"
#include "test_support.hpp"

using namespace fes;
using namespace fes::test;

namespace {
constexpr double kInvSqrt3 = 0.57735026918962576451;
}

TEST_CASE("dicke states enumerate bitstrings by zero count") {
    const StateVector d31 = dicke(3, 1);
    CHECK(d31[0b011].real() == doctest::Approx(kInvSqrt3).epsilon(1e-14));
    CHECK(d31[0b101].real() == doctest::Approx(kInvSqrt3).epsilon(1e-14));
    CHECK(d31[0b110].real() == doctest::Approx(kInvSqrt3).epsilon(1e-14));
    CHECK(std::abs(d31[0b000]) + std::abs(d31[0b111]) + std::abs(d31[0b001]) < 1e-15);

    CHECK(distance(dicke(4, 0), StateVector::basis_state(4, 0b1111)) < 1e-15);
    CHECK(distance(dicke(2, 2), StateVector::basis_state(2, 0b00)) < 1e-15);

    const StateVector d42 = dicke(4, 2);
    int populated = 0;
    for (std::size_t x = 0; x < d42.dim(); ++x) {
        if (std::abs(d42[x]) > 0.0) {
            ++populated;
            CHECK(d42[x].real() == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-14));
        }
    }
    CHECK(populated == 6);

    CHECK_THROWS_AS(dicke(3, 4), std::out_of_range);
    CHECK_THROWS_AS(dicke(3, -1), std::out_of_range);
}

TEST_CASE("psi_pq: Hadamard route matches the known small cases") {
    // p = n: |+...+>, every amplitude 2^{-n/2}
    const StateVector plus3 = psi_pq(3, 0);
    for (std::size_t x = 0; x < plus3.dim(); ++x) {
        CHECK(plus3[x].real() == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-14));
    }
    CHECK(distance(psi_pq(1, 2), psi_pq_symmetric_sum(1, 2)) < 1e-13);
    CHECK(distance(psi_pq(2, 2), psi_pq_symmetric_sum(2, 2)) < 1e-13);

    // Frozen four-qubit values: sqrt(6)/4 on |0000>, -1/(2 sqrt 6) on |0011>.
    const StateVector p22 = psi_pq(2, 2);
    CHECK(p22[0b0000].real() == doctest::Approx(std::sqrt(6.0) / 4.0).epsilon(1e-14));
    CHECK(p22[0b0011].real() == doctest::Approx(-1.0 / (2.0 * std::sqrt(6.0))).epsilon(1e-14));
    CHECK(std::abs(p22[0b0001]) < 1e-15);
}

TEST_CASE("psi_pq equals the symmetric-sum construction for n = 2..8") {
    for (int n = 2; n <= 8; ++n) {
        for (int q = 0; q <= n; ++q) {
            CHECK(distance(psi_pq(n - q, q), psi_pq_symmetric_sum(n - q, q)) < 1e-12);
        }
    }
}

TEST_CASE("flip parity: X^n psi_pq = (-1)^q psi_pq") {
    for (int n = 2; n <= 7; ++n) {
        for (int q = 0; q <= n; ++q) {
            const StateVector psi = psi_pq(n - q, q);
            const StateVector flipped = apply_local(LocalOperator::flip(), psi);
            double err = 0.0;
            const double sign = (q % 2 == 0) ? 1.0 : -1.0;
            for (std::size_t x = 0; x < psi.dim(); ++x) {
                err += std::norm(flipped[x] - sign * psi[x]);
            }
            CHECK(std::sqrt(err) < 1e-12);
            CHECK(is_fes(psi) == (q % 2 == 0));
        }
    }
}

TEST_CASE("psi_pq basis is orthonormal") {
    for (int n = 2; n <= 7; ++n) {
        for (int q1 = 0; q1 <= n; ++q1) {
            for (int q2 = q1; q2 <= n; ++q2) {
                const cplx ov = inner(psi_pq(n - q1, q1), psi_pq(n - q2, q2));
                const double expected = (q1 == q2) ? 1.0 : 0.0;
                CHECK(std::abs(ov - expected) < 1e-12);
            }
        }
    }
}

TEST_CASE("degeneracy counts the eigenvalue multiplicity") {
    CHECK(degeneracy(3, 0) == 1);
    CHECK(degeneracy(1, 2) == 3);
    CHECK(degeneracy(2, 2) == 6);
    CHECK(degeneracy(0, 0) == 1);
    CHECK(degeneracy(7, 7) == 3432);
    CHECK_THROWS_AS(degeneracy(-1, 2), std::invalid_argument);
}

TEST_CASE("fes_dimension is floor(n/2) + 1") {
    CHECK(fes_dimension(2) == 2);
    CHECK(fes_dimension(3) == 2);
    CHECK(fes_dimension(4) == 3);
    for (int n = 2; n <= 12; ++n) CHECK(fes_dimension(n) == n / 2 + 1);
    CHECK_THROWS_AS(fes_dimension(0), std::invalid_argument);
}

TEST_CASE("embed: single members and the GHZ geodesic point") {
    CHECK(distance(embed(FesVector::basis_vector(3, 0)), psi_pq(3, 0)) < 1e-13);
    CHECK(distance(embed(FesVector::basis_vector(4, 1)), psi_pq(2, 2)) < 1e-13);

    const FesVector ghz_coeffs(3, {cplx{0.5}, cplx{std::sqrt(3.0) / 2.0}});
    CHECK(distance(embed(ghz_coeffs), named_state("GHZ", 3)) < 1e-13);

    auto rng = make_rng(21);
    for (int n = 2; n <= 10; ++n) {
        const StateVector psi = embed(random_fes_vector(n, rng));
        CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(is_fes(psi));
    }
}

TEST_CASE("expand recovers the GHZ coefficients (theta = pi/6 geodesic)") {
    const FesVector c = expand(named_state("GHZ", 3));
    CHECK(std::abs(c[0] - cplx{0.5}) < 1e-12);
    CHECK(std::abs(c[1] - cplx{std::sqrt(3.0) / 2.0}) < 1e-12);
}

TEST_CASE("expand of |++++> is the first basis member") {
    const FesVector c = expand(psi_pq(4, 0));
    CHECK(std::abs(c[0] - cplx{1.0}) < 1e-12);
    CHECK(std::abs(c[1]) < 1e-12);
    CHECK(std::abs(c[2]) < 1e-12);
}

TEST_CASE("expand rejects non-FES input") {
    CHECK_THROWS_AS(expand(named_state("W", 3)), NotFesError);
    CHECK_THROWS_AS(expand(StateVector::basis_state(3, 0b100)), NotFesError);
}

TEST_CASE("expand of the normalized G_{0,-1,0,1} state") {
    // Direct projection gives (-1/(2 sqrt 2), sqrt(3)/2, -1/(2 sqrt 2)): the
    // state sits on the mu = -sqrt(3) great circle, not on the psi_22 pole.
    const FesVector c = expand(build_g(cplx{0.0}, cplx{-1.0}, cplx{0.0}, cplx{1.0}).normalized())
                            .phase_fixed();
    const double outer = -1.0 / (2.0 * std::sqrt(2.0));
    CHECK(c[1].real() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(c[0].real() == doctest::Approx(outer).epsilon(1e-12));
    CHECK(c[2].real() == doctest::Approx(outer).epsilon(1e-12));
    CHECK(std::abs(c[0].imag()) + std::abs(c[1].imag()) + std::abs(c[2].imag()) < 1e-12);
}

TEST_CASE("expand(embed(v)) round trips up to global phase") {
    auto rng = make_rng(22);
    for (int n = 2; n <= 10; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
            const FesVector v = random_fes_vector(n, rng);
            CHECK(phase_distance(expand(embed(v)), v) < 1e-12);
        }
    }
}

TEST_CASE("FesVector validates and indexes its coefficients") {
    CHECK_THROWS_AS(FesVector(4, std::vector<cplx>(2)), std::invalid_argument);
    const FesVector v = FesVector::basis_vector(5, 2);
    CHECK(v.basis_index(2) == BasisIndex{1, 4});
    CHECK(fes_index(5, BasisIndex{1, 4}) == 2);
    CHECK_THROWS_AS(fes_index(5, BasisIndex{2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(fes_index(5, BasisIndex{1, 2}), std::invalid_argument);
}
