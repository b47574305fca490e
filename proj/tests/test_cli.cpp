#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "fes/cli.hpp"

using namespace fes;
using namespace fes::cli;

namespace {

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"fes-cli"};
    argv.insert(argv.end(), args.begin(), args.end());
    return main_entry(static_cast<int>(argv.size()), argv.data());
}

std::vector<std::string> data_rows(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // column header
            continue;
        }
        rows.push_back(line);
    }
    return rows;
}

std::vector<double> fields(const std::string& row) {
    std::vector<double> out;
    std::istringstream in(row);
    std::string token;
    while (std::getline(in, token, ',')) out.push_back(std::stod(token));
    return out;
}

}  // namespace

TEST_CASE("fmt17 renders with 17 significant digits and a dot separator") {
    CHECK(fmt17(0.5) == "0.5");
    CHECK(fmt17(1.0 / 3.0) == "0.33333333333333331");
    CHECK(fmt17(-0.99) == "-0.98999999999999999");
}

TEST_CASE("linear_grid and log_grid include both endpoints") {
    const auto lin = linear_grid({-0.99, 0.99, 199});
    REQUIRE(lin.size() == 199);
    CHECK(lin.front() == doctest::Approx(-0.99).epsilon(1e-15));
    CHECK(lin.back() == doctest::Approx(0.99).epsilon(1e-15));

    const auto lg = log_grid({1e-1, 1e-6, 26});
    REQUIRE(lg.size() == 26);
    CHECK(lg.front() == doctest::Approx(1e-1).epsilon(1e-12));
    CHECK(lg.back() == doctest::Approx(1e-6).epsilon(1e-12));

    CHECK(linear_grid({0.25, 0.25, 1}) == std::vector<double>{0.25});
}

TEST_CASE("basis command emits the full table") {
    RunConfig config;
    config.command = Command::basis;
    config.n = 4;
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    const std::string expected =
        "# fescurves 0.1.0\n"
        "# command: basis\n"
        "# n: 4\n"
        "# dimension: 3\n"
        "index,p,q,degeneracy\n"
        "0,4,0,1\n"
        "1,2,2,6\n"
        "2,0,4,1\n";
    CHECK(out.str() == expected);
}

TEST_CASE("curve command reproduces the GHZ trade-off table") {
    RunConfig config;
    config.command = Command::curve;
    config.n = 3;
    config.state_name = "GHZ";
    config.t_grid = {-0.99, 0.99, 199};
    config.targets = {{3, 0}, {1, 2}};

    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    const auto rows = data_rows(out.str());
    REQUIRE(rows.size() == 199);

    // columns: t, c30 re/im, c12 re/im, probability, fid_30, fid_12
    const auto first = fields(rows.front());
    REQUIRE(first.size() == 8);
    CHECK(first[0] == doctest::Approx(-0.99));
    CHECK(first[5] < 1e-3);   // probability vanishes toward t = -1
    CHECK(first[7] > 0.9999);  // while fidelity to psi_12 approaches 1

    const auto last = fields(rows.back());
    CHECK(last[0] == doctest::Approx(0.99));
    CHECK(last[5] > 0.2);     // finite probability at the separable end
    CHECK(last[6] > 0.9999);  // fidelity to psi_30

    // byte-identical on a second run
    std::ostringstream again;
    REQUIRE(run(config, again) == kExitOk);
    CHECK(out.str() == again.str());
}

TEST_CASE("curve command accepts explicit coefficients") {
    RunConfig config;
    config.command = Command::curve;
    config.n = 3;
    config.coeffs = {cplx{0.5}, cplx{0.8660254037844386}};
    config.t_grid = {-0.5, 0.5, 3};
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    CHECK(data_rows(out.str()).size() == 3);
}

TEST_CASE("stability command emits epsilon rows") {
    RunConfig config;
    config.command = Command::stability;
    config.n = 3;
    config.state_name = "GHZ";
    config.stability_target = {1, 2};
    config.eps_grid = {1e-1, 1e-6, 26};
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    const auto rows = data_rows(out.str());
    REQUIRE(rows.size() == 26);
    const auto last = fields(rows.back());
    REQUIRE(last.size() == 4);
    CHECK(last[0] == doctest::Approx(1e-6).epsilon(1e-9));
    CHECK(last[2] < 1e-10);  // infidelity
    CHECK(last[3] < 1e-10);  // probability
}

TEST_CASE("classify command reports psi_22 as an eigenstate") {
    RunConfig config;
    config.command = Command::classify;
    config.n = 4;
    config.coeffs = {cplx{0.0}, cplx{1.0}, cplx{0.0}};
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);

    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc.at("schema_version") == 1);
    CHECK(doc.at("command") == "classify");
    CHECK(doc.at("is_eigenstate") == true);
    CHECK(doc.at("support").size() == 1);
    CHECK(doc.at("support")[0].at("p") == 2);
    CHECK(doc.at("support")[0].at("q") == 2);
    CHECK(doc.at("neighbors").empty());
}

TEST_CASE("classify command labels the GHZ neighbors") {
    RunConfig config;
    config.command = Command::classify;
    config.n = 3;
    config.state_name = "GHZ";
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc.at("is_eigenstate") == false);
    REQUIRE(doc.at("neighbors").size() == 2);
    CHECK(doc.at("neighbors")[0].at("p") == 3);
    CHECK(doc.at("neighbors")[1].at("q") == 2);
    CHECK(doc.at("endpoint_plus").at("p") == 3);
    CHECK(doc.at("endpoint_minus").at("p") == 1);
}

TEST_CASE("demo-ghz3 agrees across its three routes") {
    RunConfig config;
    config.command = Command::demo_ghz3;
    config.demo_t = 0.5;
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc.at("f_policy") == "povm_max");
    CHECK(doc.at("closed_form").get<double>() ==
          doctest::Approx(189.0 / 729.0).epsilon(1e-12));
    CHECK(doc.at("max_pairwise_diff").get<double>() < 1e-10);
}

TEST_CASE("demo-four reports a tiny gap between the two constructions") {
    RunConfig config;
    config.command = Command::demo_four;
    config.g_a = cplx{1.0};
    config.g_d = cplx{0.25};
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc.at("max_abs_diff").get<double>() < 1e-12);
    CHECK(doc.at("mu")[0].get<double>() ==
          doctest::Approx(std::sqrt(3.0) * 0.75 / 1.25).epsilon(1e-12));
}

TEST_CASE("closest-product finds the GHZ plateau") {
    RunConfig config;
    config.command = Command::closest_product;
    config.n = 4;
    config.state_name = "GHZ";
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc.at("theta").get<double>() == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(doc.at("overlap_sq").get<double>() == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(doc.at("degenerate") == true);
    CHECK(doc.at("product_is_fes") == false);
}

TEST_CASE("exit codes distinguish usage, state, and domain errors") {
    // usage
    CHECK(run_cli({"no-such-command"}) == kExitUsage);
    CHECK(run_cli({"curve", "--n", "3", "--coeffs", "0.5,0.5,0.5"}) == kExitUsage);
    CHECK(run_cli({"curve", "--n", "3", "--coeffs", "zap,1"}) == kExitUsage);
    CHECK(run_cli({"curve", "--n", "3", "--state", "GHZ", "--t-grid", "0:0.5"}) == kExitUsage);
    CHECK(run_cli({"curve", "--n", "3"}) == kExitUsage);  // no state given
    CHECK(run_cli({"stability", "--n", "3", "--state", "GHZ", "--target", "2_1",
                   "-o", "/dev/null"}) == kExitUsage);

    // invalid state
    CHECK(run_cli({"curve", "--n", "3", "--coeffs", "0.5,0.5", "-o", "/dev/null"}) ==
          kExitInvalidState);
    CHECK(run_cli({"curve", "--n", "3", "--state", "W", "-o", "/dev/null"}) ==
          kExitInvalidState);

    // numerical domain
    CHECK(run_cli({"curve", "--n", "3", "--state", "GHZ", "--t-grid", "0:1:2",
                   "-o", "/dev/null"}) == kExitDomain);
    CHECK(run_cli({"demo-ghz3", "--t", "1", "-o", "/dev/null"}) == kExitDomain);

    // success paths
    CHECK(run_cli({"basis", "--n", "5", "-o", "/dev/null"}) == kExitOk);
    CHECK(run_cli({"--help"}) == kExitOk);
    CHECK(run_cli({"curve", "--n", "3", "--state", "GHZ", "--t-grid", "-0.5:0.5:5",
                   "--targets", "30,12", "--format", "json", "-o", "/dev/null"}) == kExitOk);
}

TEST_CASE("W_fes is accepted as a named state for classify") {
    RunConfig config;
    config.command = Command::classify;
    config.n = 3;
    config.state_name = "W_fes";
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc.at("is_eigenstate") == true);
}

TEST_CASE("FES_THREADS does not change curve output") {
    RunConfig config;
    config.command = Command::curve;
    config.n = 5;
    config.state_name = "GHZ";
    config.t_grid = {-0.9, 0.9, 37};
    config.targets = {{5, 0}, {1, 4}};

    std::ostringstream serial;
    REQUIRE(run(config, serial) == kExitOk);

    ::setenv("FES_THREADS", "3", 1);
    std::ostringstream parallel;
    const int code = run(config, parallel);
    ::unsetenv("FES_THREADS");

    REQUIRE(code == kExitOk);
    CHECK(serial.str() == parallel.str());
}

TEST_CASE("curve JSON schema carries samples in grid order") {
    RunConfig config;
    config.command = Command::curve;
    config.n = 4;
    config.state_name = "GHZ";
    config.format = Format::json;
    config.t_grid = {-0.9, 0.9, 7};
    config.targets = {{4, 0}};
    std::ostringstream out;
    REQUIRE(run(config, out) == kExitOk);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc.at("schema_version") == 1);
    REQUIRE(doc.at("samples").size() == 7);
    CHECK(doc.at("samples")[0].at("t").get<double>() == doctest::Approx(-0.9));
    CHECK(doc.at("samples")[6].at("t").get<double>() == doctest::Approx(0.9));
    CHECK(doc.at("samples")[6].at("fidelities")[0].at("fidelity").get<double>() > 0.99);
}
