// cli.hpp
// Scriptable front end: reproducible, deterministic runs with CSV or JSON
// reports. The command logic lives here as a library so it can be exercised
// in-process; tools/fes_cli.cpp is a thin main().

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fes/classify.hpp"
#include "fes/fes_basis.hpp"
#include "fes/ilo.hpp"

namespace fes::cli {

// Exit codes: usage errors, invalid states (not normalizable / not FES), and
// numerical domain errors (t = +-1) are distinguished.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidState = 3;
inline constexpr int kExitDomain = 4;

enum class Command { basis, curve, stability, classify, demo_ghz3, demo_four, closest_product };
enum class Format { csv, json };

// start:stop:count with both endpoints included; count = 1 collapses to
// {start}. Epsilon grids are interpreted log-spaced.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
};

struct RunConfig {
    Command command = Command::basis;
    int n = 3;
    std::string state_name;    // named state, or empty when coeffs are given
    std::vector<cplx> coeffs;  // explicit c_pq, q ascending
    GridSpec t_grid{-0.99, 0.99, 199};
    GridSpec eps_grid{1e-1, 1e-6, 26};
    std::vector<BasisIndex> targets;
    BasisIndex stability_target{};
    FPolicy f_policy = FPolicy::povm_max;
    Format format = Format::csv;
    std::string output_path = "-";  // "-" writes to stdout
    double classify_tol = kSupportTol;
    double demo_t = 0.5;
    cplx g_a{1.0, 0.0};
    cplx g_d{0.25, 0.0};
    int grid_size = 4096;
    double refine_tol = 1e-12;
};

// Executes one run and writes the report to `out`. Problems are reported on
// std::cerr and mapped to the exit codes above.
int run(const RunConfig& config, std::ostream& out);

// Parses argv (CLI11), resolves the output stream, and runs.
int main_entry(int argc, const char* const* argv);

// Grid expansion as used by the run itself; exposed for tests.
std::vector<double> linear_grid(const GridSpec& spec);
std::vector<double> log_grid(const GridSpec& spec);

// "%.17g" rendering used for every CSV number.
std::string fmt17(double x);

}  // namespace fes::cli
