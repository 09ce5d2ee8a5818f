#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "relucalc/cli.hpp"

using namespace relucalc;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("build square writes the expected network", "[cli]") {
    TempFile f("square.json");
    const CliResult r = cli({"build", "square", "--M", "3", "--out", f.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("params=53") != std::string::npos);

    std::ifstream in(f.path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    const Network net = deserialize(buf.str());
    CHECK(structurally_equal(net, square_net(3)));
}

TEST_CASE("inspect reports the arch stats", "[cli]") {
    TempFile f("hinge.json");
    REQUIRE(cli({"build", "hinge-square", "--a", "1.5", "--M", "4", "--R", "3", "--out", f.path}).code == 0);
    const CliResult r = cli({"inspect", "--net", f.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("dims     = 1,2,4,4,4,4,1") != std::string::npos);
    CHECK(r.out.find("params   = 81") != std::string::npos);
    CHECK(r.out.find("hidden   = 5") != std::string::npos);
}

TEST_CASE("eval prints the realization", "[cli]") {
    TempFile f("sq.json");
    REQUIRE(cli({"build", "square", "--M", "2", "--out", f.path}).code == 0);
    const CliResult r = cli({"eval", "--net", f.path, "--input", "0.25"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.0625\n");
    CHECK(cli({"eval", "--net", f.path, "--input", "0.25,0.5"}).code == 1);
    CHECK(cli({"eval", "--net", f.path, "--input", "zebra"}).code == 1);
}

TEST_CASE("error subcommand", "[cli]") {
    TempFile f("target.json");
    REQUIRE(cli({"build", "target", "--d", "2", "--M", "3", "--R", "4", "--out", f.path}).code == 0);

    SECTION("separable via the target metadata") {
        const CliResult r = cli({"error", "--net", f.path, "--d", "2", "--method", "separable"});
        CHECK(r.code == 0);
        CHECK(r.out.find("method=exact-reduction") != std::string::npos);
    }
    SECTION("separable on a univariate component with --scale") {
        TempFile g("psi.json");
        REQUIRE(cli({"build", "hinge-square", "--a", "2", "--M", "3", "--R", "4", "--out", g.path}).code == 0);
        const CliResult r =
            cli({"error", "--net", g.path, "--d", "2", "--method", "separable", "--scale", "1.0"});
        CHECK(r.code == 0);
        CHECK(r.out.find("method=exact-reduction") != std::string::npos);
    }
    SECTION("separable rejects a multivariate net without metadata") {
        TempFile g("plain.json");
        {
            std::ofstream o(g.path);
            o << serialize(target_net(2, 2, 4.0).net);
        }
        CHECK(cli({"error", "--net", g.path, "--d", "2", "--method", "separable"}).code == 1);
    }
    SECTION("mc requires an explicit seed and is deterministic") {
        CHECK(cli({"error", "--net", f.path, "--d", "2", "--method", "mc", "--samples", "2000"}).code == 1);
        const CliResult a =
            cli({"error", "--net", f.path, "--d", "2", "--method", "mc", "--samples", "2000", "--seed", "7"});
        const CliResult b =
            cli({"error", "--net", f.path, "--d", "2", "--method", "mc", "--samples", "2000", "--seed", "7"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.find("method=monte-carlo") != std::string::npos);
        CHECK(a.out.find("std_error=") != std::string::npos);
        CHECK(a.out.find("samples=2000") != std::string::npos);
    }
}

TEST_CASE("verify emits line-oriented reports and exit code 0", "[cli]") {
    std::ostringstream out, err;
    const int code = run_cli({"verify", "--suite", "section5"}, out, err);
    CHECK(code == 0);
    const std::string text = out.str();
    CHECK(text.find("name=norm_bracket") != std::string::npos);
    CHECK(text.find(" scale=log ") != std::string::npos);
    CHECK(text.find(" pass=1") != std::string::npos);
    CHECK(text.find(" pass=0") == std::string::npos);
    CHECK(text.find("0 failures") != std::string::npos);
}

TEST_CASE("verify of a randomized suite demands a seed", "[cli]") {
    CHECK(cli({"verify", "--suite", "section4"}).code == 1);
    CHECK(cli({"verify", "--suite", "all"}).code == 1);
}

TEST_CASE("table output", "[cli]") {
    const CliResult r = cli({"table", "--c", "1.2e5", "--delta", "1", "--dmax", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("deep_budget_log") != std::string::npos);
    CHECK(r.out.find("crossover_d=") != std::string::npos);
    CHECK(r.out.find("crossover_d=none") == std::string::npos);

    const CliResult csv = cli({"table", "--c", "1.2e5", "--delta", "1", "--dmax", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("d,deep_budget_log,shallow_floor_log") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1", "[cli]") {
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({}).code == 1);
    CHECK(cli({"build", "square", "--M", "potato", "--out", "x.json"}).code == 1);
    CHECK(cli({"build", "square", "--M", "0", "--out", "x.json"}).code == 1);
    CHECK(cli({"inspect", "--net", "/nonexistent/file.json"}).code == 1);
    CHECK(cli({"verify", "--suite", "sectionX"}).code == 1);
}

TEST_CASE("help exits cleanly", "[cli]") {
    CHECK(cli({"--help"}).code == 0);
}
