#include "fes/classify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fes {

namespace {

constexpr double kDegeneracyWindow = 1e-9;

double ipow(double base, int exponent) {
    double result = 1.0;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

// Overlap of the theta product state with a symmetric state summarized by
// its Hamming-weight amplitude sums.
double product_overlap_sq(std::span<const cplx> weight_sums, double theta) {
    const int n = static_cast<int>(weight_sums.size()) - 1;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    cplx overlap{};
    for (int w = 0; w <= n; ++w) {
        overlap += ipow(c, n - w) * ipow(s, w) * weight_sums[w];
    }
    return std::norm(overlap);
}

}  // namespace

ClassReport classify(const FesVector& v, double tol) {
    ClassReport report;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (std::abs(v[i]) > tol) report.support.push_back(v.basis_index(i));
    }
    if (report.support.empty()) {
        throw std::invalid_argument("classify: state has no support above tolerance");
    }
    // Support is q ascending, so p descends along it.
    report.p_max = report.support.front().p;
    report.p_min = report.support.back().p;
    report.endpoint_plus = report.support.front();
    report.endpoint_minus = report.support.back();
    report.is_eigenstate = report.support.size() == 1;

    if (!report.is_eigenstate) {
        for (const BasisIndex& endpoint : {report.endpoint_plus, report.endpoint_minus}) {
            if (endpoint.p != 0 && endpoint.q != 0) {
                report.reachable_boundaries.push_back(endpoint);
            }
        }
        for (std::size_t i = 0; i < v.dim(); ++i) {
            const BasisIndex b = v.basis_index(i);
            if (b.p > report.p_min && b.p < report.p_max) {
                report.unreachable_interior.push_back(b);
            }
        }
        report.neighbors = {report.endpoint_plus, report.endpoint_minus};
    }
    return report;
}

std::vector<StabilitySample> stability_sweep(const FesVector& v, BasisIndex target,
                                             std::span<const double> eps_grid,
                                             const IloParams& params) {
    const ClassReport report = classify(v);
    const std::size_t slot = fes_index(v.n(), target);
    double sign = 0.0;
    if (target == report.endpoint_plus) {
        sign = 1.0;
    } else if (target == report.endpoint_minus) {
        sign = -1.0;
    } else {
        throw std::invalid_argument("stability_sweep: (" + std::to_string(target.p) + "," +
                                    std::to_string(target.q) +
                                    ") is not a curve endpoint of this state");
    }

    std::vector<StabilitySample> samples;
    samples.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (!(eps > 0.0 && eps < 1.0)) {
            throw std::invalid_argument("stability_sweep: eps must lie in (0, 1)");
        }
        const IloParams at{sign * (1.0 - eps), params.f_policy};
        const FesVector evolved = evolve(v, at);
        samples.push_back(StabilitySample{eps, at.t, 1.0 - std::norm(evolved[slot]),
                                          success_probability(v, at)});
    }
    return samples;
}

std::vector<double> log_eps_grid(double eps_hi, double eps_lo, int points_per_decade) {
    if (!(eps_hi > eps_lo && eps_lo > 0.0) || points_per_decade < 1) {
        throw std::invalid_argument("log_eps_grid: need eps_hi > eps_lo > 0");
    }
    const double hi = std::log10(eps_hi);
    const double lo = std::log10(eps_lo);
    const int count = static_cast<int>(std::lround((hi - lo) * points_per_decade)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (int k = 0; k < count; ++k) {
        grid.push_back(std::pow(10.0, hi + (lo - hi) * k / (count - 1)));
    }
    return grid;
}

double ghz3_probability_closed_form(double t, double f) {
    const double f2 = f * f;
    return f2 * f2 * f2 * ((1.0 + t * t) * (1.0 + t * t) * (1.0 + t * t) + 8.0 * t * t * t);
}

StateVector build_g(cplx a, cplx b, cplx c, cplx d) {
    if (a == cplx{} && b == cplx{} && c == cplx{} && d == cplx{}) {
        throw std::invalid_argument("build_g: coefficients must not all vanish");
    }
    StateVector out(4);
    out[0b0000] = (a + d) / 2.0;
    out[0b1111] = (a + d) / 2.0;
    out[0b0011] = (a - d) / 2.0;
    out[0b1100] = (a - d) / 2.0;
    out[0b0101] = (b + c) / 2.0;
    out[0b1010] = (b + c) / 2.0;
    out[0b0110] = (b - c) / 2.0;
    out[0b1001] = (b - c) / 2.0;
    return out;
}

StateVector canonical_four(cplx mu) {
    const double scale = std::sqrt(1.0 + std::norm(mu));
    StateVector ghz = named_state("GHZ", 4);
    const StateVector d42 = dicke(4, 2);
    for (std::size_t x = 0; x < ghz.dim(); ++x) {
        ghz[x] = (ghz[x] + mu * d42[x]) / scale;
    }
    return ghz;
}

StateVector symmetric_product_state(double theta, int n) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    StateVector out(n);
    for (std::size_t x = 0; x < out.dim(); ++x) {
        out[x] = cplx{ipow(c, n - std::popcount(x)) * ipow(s, std::popcount(x))};
    }
    return out;
}

ProductFit closest_symmetric_product(const StateVector& state, int grid_size,
                                     double refine_tol) {
    if (grid_size < 4) {
        throw std::invalid_argument("closest_symmetric_product: grid too small");
    }
    const int n = state.n();
    for (int k = 0; k + 1 < n; ++k) {
        if (distance(apply_exchange(k, k + 1, state), state) > 1e-9) {
            throw std::invalid_argument(
                "closest_symmetric_product: state is not permutation symmetric");
        }
    }

    // The overlap only sees amplitude sums per Hamming weight.
    std::vector<cplx> weight_sums(n + 1, cplx{});
    for (std::size_t x = 0; x < state.dim(); ++x) {
        weight_sums[std::popcount(x)] += state[x];
    }

    const double pi = std::numbers::pi;
    const double step = pi / grid_size;
    std::vector<double> values(grid_size);
    for (int k = 0; k < grid_size; ++k) {
        values[k] = product_overlap_sq(weight_sums, k * step);
    }

    // Golden-section refinement of one bracket; coordinates may leave
    // [0, pi) here and are folded back by the caller.
    constexpr double kInvPhi = 0.61803398874989484820;
    auto refine = [&](double lo, double hi) {
        double x1 = hi - kInvPhi * (hi - lo);
        double x2 = lo + kInvPhi * (hi - lo);
        double f1 = product_overlap_sq(weight_sums, x1);
        double f2 = product_overlap_sq(weight_sums, x2);
        while (hi - lo > refine_tol) {
            if (f1 >= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - kInvPhi * (hi - lo);
                f1 = product_overlap_sq(weight_sums, x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + kInvPhi * (hi - lo);
                f2 = product_overlap_sq(weight_sums, x2);
            }
        }
        return 0.5 * (lo + hi);
    };

    // Refine every circular local maximum of the scan, then resolve ties at
    // the refined level; grid-level values cannot order two equal off-grid
    // maxima reliably.
    struct Candidate {
        double theta;
        double value;
    };
    std::vector<Candidate> candidates;
    for (int k = 0; k < grid_size; ++k) {
        const double prev = values[(k + grid_size - 1) % grid_size];
        const double next = values[(k + 1) % grid_size];
        if (values[k] < prev || values[k] < next) continue;
        double theta = refine(k * step - step, k * step + step);
        theta -= pi * std::floor(theta / pi);
        // Maximizers within the seam tolerance of 0 ~ pi are reported as 0.
        if (std::min(theta, pi - theta) < 1e-7) theta = 0.0;
        candidates.push_back({theta, product_overlap_sq(weight_sums, theta)});
    }

    double best_value = 0.0;
    for (const Candidate& c : candidates) best_value = std::max(best_value, c.value);

    std::vector<double> tied;
    for (const Candidate& c : candidates) {
        if (best_value - c.value <= kDegeneracyWindow) tied.push_back(c.theta);
    }
    std::sort(tied.begin(), tied.end());
    std::vector<double> distinct;
    for (double theta : tied) {
        if (distinct.empty() || theta - distinct.back() > 1e-6) distinct.push_back(theta);
    }
    if (distinct.size() > 1 && pi - distinct.back() + distinct.front() <= 1e-6) {
        distinct.pop_back();  // wraps onto the first maximizer
    }

    const double theta = distinct.front();
    return ProductFit{theta, product_overlap_sq(weight_sums, theta), distinct.size() > 1};
}

FesVector odd_even_map(const FesVector& v, double t) {
    if (v.n() % 2 == 0) {
        throw std::invalid_argument("odd_even_map: qubit count must be odd");
    }
    if (std::abs(t + 1.0) < kSingularTol) {
        throw std::domain_error("odd_even_map degenerates at t = -1");
    }
    std::vector<cplx> coeffs(v.coeffs());
    for (cplx& c : coeffs) c *= (1.0 + t);
    return FesVector(v.n() - 1, std::move(coeffs)).normalized();
}

FesVector even_odd_map(const FesVector& v, double t) {
    if (v.n() % 2 != 0) {
        throw std::invalid_argument("even_odd_map: qubit count must be even");
    }
    if (std::abs(t + 1.0) < kSingularTol) {
        throw std::domain_error("even_odd_map degenerates at t = -1");
    }
    std::vector<cplx> coeffs(v.coeffs());
    for (cplx& c : coeffs) c /= (1.0 + t);
    return FesVector(v.n() + 1, std::move(coeffs)).normalized();
}

StateVector named_state(std::string_view name, int n) {
    if (name == "GHZ") {
        if (n < 2) throw std::invalid_argument("GHZ needs n >= 2");
        StateVector out(n);
        out[0] = cplx{std::numbers::sqrt2 / 2.0};
        out[out.dim() - 1] = cplx{std::numbers::sqrt2 / 2.0};
        return out;
    }
    if (name == "W") {
        if (n != 3) throw std::invalid_argument("W is defined here for n = 3 only");
        StateVector out(3);
        out[0] = cplx{};
        const double amp = 1.0 / std::sqrt(3.0);
        out[0b100] = cplx{amp};
        out[0b010] = cplx{amp};
        out[0b001] = cplx{amp};
        return out;
    }
    if (name == "W_fes") {
        if (n != 3) throw std::invalid_argument("W_fes is defined here for n = 3 only");
        return psi_pq(1, 2);
    }
    if (name == "S") {
        if (n < 1) throw std::invalid_argument("S needs n >= 1");
        return psi_pq(n, 0);
    }
    throw std::invalid_argument("unknown state name: " + std::string(name));
}

}  // namespace fes
