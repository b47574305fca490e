#include "fes/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fes/version.hpp"

namespace fes::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Invalid state: parseable but not normalizable (distinct from usage errors).
struct StateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double_strict(const std::string& token) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw std::invalid_argument("cannot parse number: '" + token + "'");
    }
    return value;
}

// Complex token: "re" or "re/im".
cplx parse_complex_token(const std::string& token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) {
        return cplx{parse_double_strict(token)};
    }
    return cplx{parse_double_strict(token.substr(0, slash)),
                parse_double_strict(token.substr(slash + 1))};
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> tokens;
    std::string::size_type pos = 0;
    while (true) {
        const auto next = text.find(sep, pos);
        if (next == std::string::npos) {
            tokens.push_back(text.substr(pos));
            return tokens;
        }
        tokens.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
}

std::vector<cplx> parse_coeff_list(const std::string& text) {
    std::vector<cplx> coeffs;
    for (const std::string& token : split(text, ',')) {
        coeffs.push_back(parse_complex_token(token));
    }
    return coeffs;
}

// Target token: "p_q", "p:q", or two digits "pq".
BasisIndex parse_target_token(const std::string& token) {
    auto sep = token.find('_');
    if (sep == std::string::npos) sep = token.find(':');
    if (sep != std::string::npos) {
        return BasisIndex{static_cast<int>(parse_double_strict(token.substr(0, sep))),
                          static_cast<int>(parse_double_strict(token.substr(sep + 1)))};
    }
    if (token.size() == 2 && std::isdigit(static_cast<unsigned char>(token[0])) &&
        std::isdigit(static_cast<unsigned char>(token[1]))) {
        return BasisIndex{token[0] - '0', token[1] - '0'};
    }
    throw std::invalid_argument("cannot parse basis index '" + token +
                                "'; use p_q (e.g. 3_0) or two digits (e.g. 30)");
}

GridSpec parse_grid(const std::string& text) {
    const auto tokens = split(text, ':');
    if (tokens.size() != 3) {
        throw std::invalid_argument("grid must be start:stop:count, got '" + text + "'");
    }
    GridSpec spec;
    spec.start = parse_double_strict(tokens[0]);
    spec.stop = parse_double_strict(tokens[1]);
    spec.count = static_cast<int>(parse_double_strict(tokens[2]));
    if (spec.count < 1) {
        throw std::invalid_argument("grid count must be >= 1");
    }
    return spec;
}

std::string complex_token(const cplx& c) {
    if (c.imag() == 0.0) return fmt17(c.real());
    return fmt17(c.real()) + "/" + fmt17(c.imag());
}

std::string coeff_tokens(const FesVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i > 0) out += ",";
        out += complex_token(v[i]);
    }
    return out;
}

std::string grid_token(const GridSpec& spec) {
    return fmt17(spec.start) + ":" + fmt17(spec.stop) + ":" + std::to_string(spec.count);
}

std::string policy_name(FPolicy policy) {
    return policy == FPolicy::unit ? "unit" : "povm_max";
}

std::string index_label(const BasisIndex& b) {
    return std::to_string(b.p) + "_" + std::to_string(b.q);
}

ordered_json index_json(const BasisIndex& b) {
    return ordered_json{{"p", b.p}, {"q", b.q}};
}

ordered_json complex_json(const cplx& c) {
    return ordered_json::array({c.real(), c.imag()});
}

ordered_json coeffs_json(const FesVector& v) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(complex_json(v[i]));
    return arr;
}

ordered_json report_header(const char* command) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["tool"] = "fescurves";
    doc["version"] = kVersion;
    doc["command"] = command;
    return doc;
}

void write_json(const ordered_json& doc, std::ostream& out) {
    out << doc.dump(2) << "\n";
}

void write_csv_preamble(std::ostream& out, const char* command) {
    out << "# fescurves " << kVersion << "\n";
    out << "# command: " << command << "\n";
}

// The working FES state of a run: explicit coefficients or a named state.
FesVector resolve_fes_state(const RunConfig& config) {
    if (!config.coeffs.empty()) {
        if (config.coeffs.size() != static_cast<std::size_t>(fes_dimension(config.n))) {
            throw std::invalid_argument(
                "expected " + std::to_string(fes_dimension(config.n)) + " coefficients for n=" +
                std::to_string(config.n) + ", got " + std::to_string(config.coeffs.size()));
        }
        FesVector v(config.n, config.coeffs);
        if (std::abs(v.norm() - 1.0) > 1e-6) {
            throw StateError("coefficients do not normalize: |norm - 1| = " +
                             std::to_string(std::abs(v.norm() - 1.0)) + " exceeds 1e-6");
        }
        return v.normalized();
    }
    if (config.state_name.empty()) {
        throw std::invalid_argument("specify a state with --state or --coeffs");
    }
    // Non-FES named states (e.g. W) fail here with a NotFesError.
    return expand(named_state(config.state_name, config.n), 1e-9);
}

StateVector resolve_dense_state(const RunConfig& config) {
    if (!config.coeffs.empty()) return embed(resolve_fes_state(config));
    if (config.state_name.empty()) {
        throw std::invalid_argument("specify a state with --state or --coeffs");
    }
    return named_state(config.state_name, config.n);
}

int thread_count() {
    const char* env = std::getenv("FES_THREADS");
    if (env == nullptr) return 1;
    const int count = std::atoi(env);
    return count < 1 ? 1 : count;
}

std::vector<CurveSample> traced_samples(const FesVector& v, const std::vector<double>& grid,
                                        const IloParams& params,
                                        const std::vector<BasisIndex>& targets) {
    const int threads = std::min<int>(thread_count(), static_cast<int>(grid.size()));
    if (threads <= 1) {
        return curve_trace(v, grid, params, targets);
    }
    // Chunked evaluation; per-point math is pure, assembly keeps grid order.
    std::vector<std::future<std::vector<CurveSample>>> futures;
    const std::size_t chunk = (grid.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < grid.size(); begin += chunk) {
        const std::size_t size = std::min(chunk, grid.size() - begin);
        futures.push_back(std::async(std::launch::async, [&, begin, size] {
            return curve_trace(v, std::span<const double>(grid.data() + begin, size), params,
                               targets);
        }));
    }
    std::vector<CurveSample> samples;
    samples.reserve(grid.size());
    for (auto& future : futures) {
        for (CurveSample& sample : future.get()) samples.push_back(std::move(sample));
    }
    return samples;
}

void run_basis(const RunConfig& config, std::ostream& out) {
    const int dim = fes_dimension(config.n);
    if (config.format == Format::csv) {
        write_csv_preamble(out, "basis");
        out << "# n: " << config.n << "\n";
        out << "# dimension: " << dim << "\n";
        out << "index,p,q,degeneracy\n";
        for (int i = 0; i < dim; ++i) {
            const int q = 2 * i;
            out << i << "," << (config.n - q) << "," << q << ","
                << degeneracy(config.n - q, q) << "\n";
        }
        return;
    }
    ordered_json doc = report_header("basis");
    doc["n"] = config.n;
    doc["dimension"] = dim;
    ordered_json members = ordered_json::array();
    for (int i = 0; i < dim; ++i) {
        const int q = 2 * i;
        members.push_back(ordered_json{{"index", i},
                                       {"p", config.n - q},
                                       {"q", q},
                                       {"degeneracy", degeneracy(config.n - q, q)}});
    }
    doc["members"] = members;
    write_json(doc, out);
}

void check_t_points(const std::vector<double>& grid) {
    for (double t : grid) {
        if (std::abs(t - 1.0) < kSingularTol || std::abs(t + 1.0) < kSingularTol) {
            throw std::domain_error("grid point within 1e-12 of t = +-1: " + fmt17(t));
        }
    }
}

void run_curve(const RunConfig& config, std::ostream& out) {
    const FesVector v = resolve_fes_state(config);
    const std::vector<double> grid = linear_grid(config.t_grid);
    check_t_points(grid);
    const IloParams params{0.0, config.f_policy};
    const std::vector<CurveSample> samples = traced_samples(v, grid, params, config.targets);

    if (config.format == Format::csv) {
        write_csv_preamble(out, "curve");
        out << "# n: " << config.n << "\n";
        if (!config.state_name.empty()) out << "# state: " << config.state_name << "\n";
        out << "# coeffs: " << coeff_tokens(v) << "\n";
        out << "# f_policy: " << policy_name(config.f_policy) << "\n";
        out << "# t_grid: " << grid_token(config.t_grid) << "\n";
        if (!config.targets.empty()) {
            out << "# targets: ";
            for (std::size_t k = 0; k < config.targets.size(); ++k) {
                out << (k > 0 ? "," : "") << index_label(config.targets[k]);
            }
            out << "\n";
        }
        out << "t";
        for (std::size_t i = 0; i < v.dim(); ++i) {
            const std::string label = index_label(v.basis_index(i));
            out << ",c_" << label << "_re,c_" << label << "_im";
        }
        out << ",probability";
        for (const BasisIndex& b : config.targets) out << ",fid_" << index_label(b);
        out << "\n";
        for (const CurveSample& sample : samples) {
            out << fmt17(sample.t);
            for (std::size_t i = 0; i < sample.state.dim(); ++i) {
                out << "," << fmt17(sample.state[i].real()) << ","
                    << fmt17(sample.state[i].imag());
            }
            out << "," << fmt17(sample.probability);
            for (const auto& [index, value] : sample.target_fidelities) {
                out << "," << fmt17(value);
            }
            out << "\n";
        }
        return;
    }

    ordered_json doc = report_header("curve");
    doc["n"] = config.n;
    if (!config.state_name.empty()) doc["state"] = config.state_name;
    doc["coeffs"] = coeffs_json(v);
    doc["f_policy"] = policy_name(config.f_policy);
    doc["t_grid"] = grid_token(config.t_grid);
    ordered_json targets = ordered_json::array();
    for (const BasisIndex& b : config.targets) targets.push_back(index_json(b));
    doc["targets"] = targets;
    ordered_json rows = ordered_json::array();
    for (const CurveSample& sample : samples) {
        ordered_json row;
        row["t"] = sample.t;
        row["coeffs"] = coeffs_json(sample.state);
        row["probability"] = sample.probability;
        ordered_json fidelities = ordered_json::array();
        for (const auto& [index, value] : sample.target_fidelities) {
            ordered_json entry = index_json(index);
            entry["fidelity"] = value;
            fidelities.push_back(entry);
        }
        row["fidelities"] = fidelities;
        rows.push_back(row);
    }
    doc["samples"] = rows;
    write_json(doc, out);
}

void run_stability(const RunConfig& config, std::ostream& out) {
    const FesVector v = resolve_fes_state(config);
    const std::vector<double> grid = log_grid(config.eps_grid);
    const IloParams params{0.0, config.f_policy};
    const std::vector<StabilitySample> samples =
        stability_sweep(v, config.stability_target, grid, params);

    if (config.format == Format::csv) {
        write_csv_preamble(out, "stability");
        out << "# n: " << config.n << "\n";
        if (!config.state_name.empty()) out << "# state: " << config.state_name << "\n";
        out << "# coeffs: " << coeff_tokens(v) << "\n";
        out << "# f_policy: " << policy_name(config.f_policy) << "\n";
        out << "# target: " << index_label(config.stability_target) << "\n";
        out << "# eps_grid: " << grid_token(config.eps_grid) << "\n";
        out << "epsilon,t,infidelity,probability\n";
        for (const StabilitySample& sample : samples) {
            out << fmt17(sample.epsilon) << "," << fmt17(sample.t) << ","
                << fmt17(sample.infidelity) << "," << fmt17(sample.probability) << "\n";
        }
        return;
    }

    ordered_json doc = report_header("stability");
    doc["n"] = config.n;
    if (!config.state_name.empty()) doc["state"] = config.state_name;
    doc["coeffs"] = coeffs_json(v);
    doc["f_policy"] = policy_name(config.f_policy);
    doc["target"] = index_json(config.stability_target);
    doc["eps_grid"] = grid_token(config.eps_grid);
    ordered_json rows = ordered_json::array();
    for (const StabilitySample& sample : samples) {
        rows.push_back(ordered_json{{"epsilon", sample.epsilon},
                                    {"t", sample.t},
                                    {"infidelity", sample.infidelity},
                                    {"probability", sample.probability}});
    }
    doc["samples"] = rows;
    write_json(doc, out);
}

void run_classify(const RunConfig& config, std::ostream& out) {
    const FesVector v = resolve_fes_state(config);
    const ClassReport report = fes::classify(v, config.classify_tol);

    ordered_json doc = report_header("classify");
    doc["n"] = config.n;
    if (!config.state_name.empty()) doc["state"] = config.state_name;
    doc["coeffs"] = coeffs_json(v);
    doc["tol"] = config.classify_tol;
    doc["is_eigenstate"] = report.is_eigenstate;
    ordered_json support = ordered_json::array();
    for (const BasisIndex& b : report.support) support.push_back(index_json(b));
    doc["support"] = support;
    doc["p_min"] = report.p_min;
    doc["p_max"] = report.p_max;
    doc["endpoint_plus"] = index_json(report.endpoint_plus);
    doc["endpoint_minus"] = index_json(report.endpoint_minus);
    ordered_json reachable = ordered_json::array();
    for (const BasisIndex& b : report.reachable_boundaries) reachable.push_back(index_json(b));
    doc["reachable_boundaries"] = reachable;
    ordered_json interior = ordered_json::array();
    for (const BasisIndex& b : report.unreachable_interior) interior.push_back(index_json(b));
    doc["unreachable_interior"] = interior;
    ordered_json neighbors = ordered_json::array();
    for (const BasisIndex& b : report.neighbors) neighbors.push_back(index_json(b));
    doc["neighbors"] = neighbors;
    write_json(doc, out);
}

void run_demo_ghz3(const RunConfig& config, std::ostream& out) {
    const IloParams params{config.demo_t, config.f_policy};
    const double f = scalar_f(params);
    const double closed = ghz3_probability_closed_form(config.demo_t, f);

    const StateVector ghz = named_state("GHZ", 3);
    const double spectral = success_probability(expand(ghz), params);

    const LocalOperator m = m_of_t(params);
    const double dense = inner(ghz, apply_local(m.adjoint() * m, ghz)).real();

    const double diff = std::max({std::abs(closed - spectral), std::abs(closed - dense),
                                  std::abs(spectral - dense)});

    ordered_json doc = report_header("demo-ghz3");
    doc["t"] = config.demo_t;
    doc["f_policy"] = policy_name(config.f_policy);
    doc["f"] = f;
    doc["closed_form"] = closed;
    doc["spectral"] = spectral;
    doc["dense_oracle"] = dense;
    doc["max_pairwise_diff"] = diff;
    write_json(doc, out);
}

void run_demo_four(const RunConfig& config, std::ostream& out) {
    const cplx a = config.g_a;
    const cplx d = config.g_d;
    if (std::abs(a + d) < 1e-12) {
        throw std::invalid_argument("demo-four needs a + d != 0 for the canonical form");
    }
    const cplx mu = std::sqrt(3.0) * (a - d) / (a + d);
    const FesVector g_coeffs = expand(build_g(a, a - d, cplx{}, d).normalized()).phase_fixed();
    const FesVector canon_coeffs = expand(canonical_four(mu)).phase_fixed();
    double diff = 0.0;
    for (std::size_t i = 0; i < g_coeffs.dim(); ++i) {
        diff = std::max(diff, std::abs(g_coeffs[i] - canon_coeffs[i]));
    }

    ordered_json doc = report_header("demo-four");
    doc["a"] = complex_json(a);
    doc["d"] = complex_json(d);
    doc["mu"] = complex_json(mu);
    doc["g_coeffs"] = coeffs_json(g_coeffs);
    doc["canonical_coeffs"] = coeffs_json(canon_coeffs);
    doc["max_abs_diff"] = diff;
    write_json(doc, out);
}

void run_closest_product(const RunConfig& config, std::ostream& out) {
    const StateVector state = resolve_dense_state(config);
    const ProductFit fit =
        closest_symmetric_product(state, config.grid_size, config.refine_tol);
    const bool product_is_fes = is_fes(symmetric_product_state(fit.theta, config.n));

    ordered_json doc = report_header("closest-product");
    doc["n"] = config.n;
    if (!config.state_name.empty()) doc["state"] = config.state_name;
    if (!config.coeffs.empty()) {
        doc["coeffs"] = coeffs_json(FesVector(config.n, config.coeffs));
    }
    doc["grid_size"] = config.grid_size;
    doc["refine_tol"] = config.refine_tol;
    doc["theta"] = fit.theta;
    doc["overlap_sq"] = fit.overlap_sq;
    doc["degenerate"] = fit.degenerate;
    doc["product_is_fes"] = product_is_fes;
    write_json(doc, out);
}

}  // namespace

std::vector<double> linear_grid(const GridSpec& spec) {
    std::vector<double> grid;
    grid.reserve(spec.count);
    if (spec.count == 1) {
        grid.push_back(spec.start);
        return grid;
    }
    for (int i = 0; i < spec.count; ++i) {
        grid.push_back(spec.start + (spec.stop - spec.start) * i / (spec.count - 1));
    }
    return grid;
}

std::vector<double> log_grid(const GridSpec& spec) {
    if (!(spec.start > 0.0) || !(spec.stop > 0.0)) {
        throw std::invalid_argument("log grid endpoints must be positive");
    }
    std::vector<double> grid;
    grid.reserve(spec.count);
    if (spec.count == 1) {
        grid.push_back(spec.start);
        return grid;
    }
    const double lo = std::log10(spec.start);
    const double hi = std::log10(spec.stop);
    for (int i = 0; i < spec.count; ++i) {
        grid.push_back(std::pow(10.0, lo + (hi - lo) * i / (spec.count - 1)));
    }
    return grid;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

int run(const RunConfig& config, std::ostream& out) {
    try {
        switch (config.command) {
            case Command::basis:
                run_basis(config, out);
                break;
            case Command::curve:
                run_curve(config, out);
                break;
            case Command::stability:
                run_stability(config, out);
                break;
            case Command::classify:
                run_classify(config, out);
                break;
            case Command::demo_ghz3:
                run_demo_ghz3(config, out);
                break;
            case Command::demo_four:
                run_demo_four(config, out);
                break;
            case Command::closest_product:
                run_closest_product(config, out);
                break;
        }
        return kExitOk;
    } catch (const NotFesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidState;
    } catch (const StateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidState;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int main_entry(int argc, const char* const* argv) {
    CLI::App app{"fescurves: flip-and-exchange-symmetric qubit states under "
                 "invertible local operations"};
    app.require_subcommand(1);

    RunConfig config;
    std::string coeffs_text;
    std::string targets_text;
    std::string target_text;
    std::string t_grid_text;
    std::string eps_grid_text;
    std::string a_text = "1";
    std::string d_text = "0.25";

    const std::map<std::string, FPolicy> policy_map{{"unit", FPolicy::unit},
                                                    {"povm-max", FPolicy::povm_max}};
    const std::map<std::string, Format> format_map{{"csv", Format::csv},
                                                   {"json", Format::json}};

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", config.output_path,
                        "Output path ('-' for stdout)")
            ->capture_default_str();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", config.format, "Report format")
            ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case))
            ->default_str("csv");
    };
    auto add_policy = [&](CLI::App* cmd) {
        cmd->add_option("--f-policy", config.f_policy,
                        "Scalar policy: unit (f=1) or povm-max (f=1/(1+|t|))")
            ->transform(CLI::CheckedTransformer(policy_map, CLI::ignore_case))
            ->default_str("povm-max");
    };
    auto add_state = [&](CLI::App* cmd) {
        auto* state = cmd->add_option("--state", config.state_name,
                                      "Named state: GHZ, W, W_fes, or S");
        auto* coeffs = cmd->add_option(
            "--coeffs", coeffs_text,
            "FES coefficients c_pq, q ascending, comma separated; each token is "
            "re or re/im. Example for the 3-qubit GHZ state: "
            "0.5,0.8660254037844386");
        state->excludes(coeffs);
        coeffs->excludes(state);
    };
    auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("--n", config.n, "Qubit count")
            ->check(CLI::Range(1, kMaxDenseQubits))
            ->required();
    };

    CLI::App* basis = app.add_subcommand("basis", "List the even-q FES basis for n qubits");
    add_n(basis);
    add_format(basis);
    add_output(basis);

    CLI::App* curve = app.add_subcommand(
        "curve", "Trace the ILO curve M(t) through a state over a t grid");
    add_n(curve);
    add_state(curve);
    curve->add_option("--t-grid", t_grid_text,
                      "t grid start:stop:count (endpoints included); points within "
                      "1e-12 of +-1 are rejected")
        ->default_str("-0.99:0.99:199");
    curve->add_option("--targets", targets_text,
                      "Comma-separated basis indices (p_q or two digits) to report "
                      "fidelities against");
    add_policy(curve);
    add_format(curve);
    add_output(curve);

    CLI::App* stability = app.add_subcommand(
        "stability", "Probe infidelity and probability toward a curve endpoint");
    add_n(stability);
    add_state(stability);
    stability->add_option("--target", target_text, "Endpoint basis index (p_q or two digits)")
        ->required();
    stability->add_option("--eps-grid", eps_grid_text,
                          "Log-spaced epsilon grid start:stop:count; t = +-(1-eps)")
        ->default_str("0.1:1e-06:26");
    add_policy(stability);
    add_format(stability);
    add_output(stability);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Equivalence-class report for a state (JSON)");
    add_n(classify_cmd);
    add_state(classify_cmd);
    classify_cmd->add_option("--tol", config.classify_tol, "Support threshold on |c_pq|")
        ->capture_default_str();
    add_output(classify_cmd);

    CLI::App* demo_ghz3 = app.add_subcommand(
        "demo-ghz3", "Three-qubit GHZ probability: closed form vs spectral vs dense");
    demo_ghz3->add_option("--t", config.demo_t, "Curve parameter")->capture_default_str();
    add_policy(demo_ghz3);
    add_output(demo_ghz3);

    CLI::App* demo_four = app.add_subcommand(
        "demo-four", "Four-qubit G family vs the canonical GHZ/Dicke form");
    demo_four->add_option("--a", a_text, "Coefficient a (re or re/im)")->capture_default_str();
    demo_four->add_option("--d", d_text, "Coefficient d (re or re/im)")->capture_default_str();
    add_output(demo_four);

    CLI::App* closest = app.add_subcommand(
        "closest-product", "Best symmetric product-state overlap for a state");
    add_n(closest);
    add_state(closest);
    closest->add_option("--grid-size", config.grid_size, "Scan points over [0, pi)")
        ->check(CLI::Range(4, 1 << 24))
        ->capture_default_str();
    closest->add_option("--refine-tol", config.refine_tol, "Refinement bracket width")
        ->capture_default_str();
    add_output(closest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (basis->parsed()) config.command = Command::basis;
        if (curve->parsed()) config.command = Command::curve;
        if (stability->parsed()) config.command = Command::stability;
        if (classify_cmd->parsed()) config.command = Command::classify;
        if (demo_ghz3->parsed()) config.command = Command::demo_ghz3;
        if (demo_four->parsed()) config.command = Command::demo_four;
        if (closest->parsed()) config.command = Command::closest_product;

        if (!coeffs_text.empty()) config.coeffs = parse_coeff_list(coeffs_text);
        if (!t_grid_text.empty()) config.t_grid = parse_grid(t_grid_text);
        if (!eps_grid_text.empty()) config.eps_grid = parse_grid(eps_grid_text);
        if (!targets_text.empty()) {
            for (const std::string& token : split(targets_text, ',')) {
                config.targets.push_back(parse_target_token(token));
            }
        }
        if (!target_text.empty()) config.stability_target = parse_target_token(target_text);
        if (demo_four->parsed()) {
            config.g_a = parse_complex_token(a_text);
            config.g_d = parse_complex_token(d_text);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (config.output_path == "-") {
        return run(config, std::cout);
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file " << config.output_path << "\n";
        return 1;
    }
    return run(config, file);
}

}  // namespace fes::cli
