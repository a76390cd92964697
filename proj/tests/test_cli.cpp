#include "symdiff/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace symdiff;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path scratch_dir() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "symdiff_cli_tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    auto path = scratch_dir() / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path.string();
}

std::string unit_square_file() {
    static std::string path =
        write_file("unit_square.json", "{\"rings\": [[[0, 0], [1, 0], [1, 1], [0, 1]]]}");
    return path;
}

std::string ell_file() {
    static std::string path = write_file(
        "ell.json", "{\"rings\": [[[0, 0], [2, 0], [2, 1], [1, 1], [1, 2], [0, 2]]]}");
    return path;
}

std::size_t line_count(const std::string& text) {
    std::size_t n = 0;
    for (char c : text) {
        if (c == '\n') ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("bound translate reports the certificate") {
    CliRun r = run({"bound", "translate", "--shape", unit_square_file(), "--t", "0.5,0"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["lhs"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["rhs"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(j["bound_kind"] == "translation");
    CHECK(j.contains("inputs_digest"));
}

TEST_CASE("bound rotate accepts degrees, centers, and variants") {
    CliRun r = run({"bound", "rotate", "--shape", unit_square_file(), "--theta", "45",
                    "--deg", "--center", "0.5,0.5", "--variant", "rectifiable"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["lhs"].get<double>() == doctest::Approx(0.3431457505076194).epsilon(1e-9));
    CHECK(j["rhs"].get<double>() == doctest::Approx(2.1647844005847876).epsilon(1e-12));
    CHECK(j["bound_kind"] == "rotation_rectifiable");

    CliRun bad = run({"bound", "rotate", "--shape", unit_square_file(), "--theta", "45",
                      "--variant", "sharp"});
    CHECK(bad.code == 1);
}

TEST_CASE("bound rigid combines both motion parts") {
    CliRun r = run({"bound", "rigid", "--shape", unit_square_file(), "--theta", "0.5", "--t",
                    "0.25,0.1"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["bound_kind"] == "rigid");
    CHECK(j["rhs"].get<double>() > j["lhs"].get<double>());
}

TEST_CASE("bound cavalieri needs a convex shape") {
    CliRun r = run({"bound", "cavalieri", "--shape", unit_square_file(), "--t", "2,0"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["lhs"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(j["rhs"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(j["bound_kind"] == "cavalieri");

    CliRun bad = run({"bound", "cavalieri", "--shape", ell_file(), "--t", "2,0"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("convex") != std::string::npos);
}

TEST_CASE("symdiff compares two shape files") {
    std::string b = write_file("shifted_square.json",
                               "{\"rings\": [[[0.5, 0.5], [1.5, 0.5], [1.5, 1.5], [0.5, 1.5]]]}");
    CliRun r = run({"symdiff", "--a", unit_square_file(), "--b", b});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["area_a"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["area_b"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["intersection"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(j["symdiff"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("bitmap round trip through render and symdiff") {
    std::string pgm = (scratch_dir() / "unit_square.pgm").string();
    CliRun made = run({"render", "--shape", unit_square_file(), "--mask-h", "0.25", "--out", pgm});
    REQUIRE(made.code == 0);

    CliRun r = run({"symdiff", "--a", pgm, "--b", pgm, "--h", "0.25"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["area_a"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["symdiff"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(j["intersection"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

    CliRun mixed = run({"symdiff", "--a", pgm, "--b", unit_square_file(), "--h", "0.25"});
    CHECK(mixed.code == 1);
    CHECK(mixed.err.find("both") != std::string::npos);

    CliRun no_h = run({"symdiff", "--a", pgm, "--b", pgm});
    CHECK(no_h.code == 1);
}

TEST_CASE("covariogram modes") {
    CliRun value = run({"covariogram", "--shape", unit_square_file(), "--t", "0.5,0"});
    REQUIRE(value.code == 0);
    CHECK(nlohmann::json::parse(value.out)["value"].get<double>() ==
          doctest::Approx(0.5).epsilon(1e-12));

    CliRun deriv = run({"covariogram", "--shape", unit_square_file(), "--derivative", "--u",
                        "1,0", "--lambda", "1e-4"});
    REQUIRE(deriv.code == 0);
    CHECK(nlohmann::json::parse(deriv.out)["quotient"].get<double>() ==
          doctest::Approx(-1.0).epsilon(1e-9));

    CliRun grid = run({"covariogram", "--shape", unit_square_file(), "--grid", "1", "--tmax",
                       "1,1"});
    REQUIRE(grid.code == 0);
    CHECK(line_count(grid.out) == 10);
    CHECK(grid.out.rfind("tx,ty,value\n", 0) == 0);

    CliRun both = run({"covariogram", "--shape", unit_square_file(), "--t", "0.5,0", "--grid",
                       "1", "--tmax", "1,1"});
    CHECK(both.code == 1);
    CliRun neither = run({"covariogram", "--shape", unit_square_file()});
    CHECK(neither.code == 1);
}

TEST_CASE("match translate recovers a planted shift") {
    std::string b = write_file("far_square.json",
                               "{\"rings\": [[[2, 1], [3, 1], [3, 2], [2, 2]]]}");
    CliRun r = run({"match", "translate", "--a", unit_square_file(), "--b", b});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "converged");
    CHECK(j["best_value"].get<double>() >= 0.999);
    CHECK(j["certified_upper"].get<double>() <= 1.0 + 1e-9);
    CHECK(std::fabs(j["tx"].get<double>() - 2.0) <= 1e-6);
    CHECK(std::fabs(j["ty"].get<double>() - 1.0) <= 1e-6);

    CliRun bad_workers = run({"match", "translate", "--a", unit_square_file(), "--b", b,
                              "--workers", "0"});
    CHECK(bad_workers.code == 1);
    CliRun bad_gap = run({"match", "translate", "--a", unit_square_file(), "--b", b,
                          "--gap-target", "-0.5"});
    CHECK(bad_gap.code == 1);
}

TEST_CASE("landscape prints a CSV grid") {
    CliRun r = run({"landscape", "--a", unit_square_file(), "--b", unit_square_file(),
                    "--theta-samples", "1", "--t-samples", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("theta,tx,ty,F\n", 0) == 0);
    CHECK(line_count(r.out) == 10);
    CHECK(r.out.find("0,0,0,1") != std::string::npos);
}

TEST_CASE("comb subcommand reports the demo quantities") {
    CliRun r = run({"comb", "--teeth", "50"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["teeth"].get<int>() == 50);
    CHECK(j["symdiff"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j["translation_rhs"].get<double>() == doctest::Approx(1.01).epsilon(1e-12));
    CHECK(j["projection_quantity"].get<double>() == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(j["shift"][0].get<double>() == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("verify subcommand runs named suites") {
    CliRun r = run({"verify", "--suite", "constants", "--seed", "7"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("constants: pass") != std::string::npos);
    CHECK(r.out.find("all 1 suites passed") != std::string::npos);

    CliRun listing = run({"verify", "--list"});
    REQUIRE(listing.code == 0);
    CHECK(listing.out.find("geometry\n") != std::string::npos);
    CHECK(listing.out.find("matcher\n") != std::string::npos);

    CliRun unknown = run({"verify", "--suite", "nope"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("error:") != std::string::npos);
}

TEST_CASE("render emits SVG to stdout") {
    CliRun r = run({"render", "--shape", unit_square_file(), "--theta", "30", "--deg",
                    "--segments", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.out.find("#d62728") != std::string::npos);

    CliRun mask = run({"render", "--shape", unit_square_file(), "--mask-h", "0.25"});
    REQUIRE(mask.code == 0);
    CHECK(mask.out.rfind("P5\n", 0) == 0);
}

TEST_CASE("bad invocations exit with a usage error") {
    CliRun none = run({});
    CHECK(none.code == 1);

    CliRun missing = run({"bound", "translate", "--shape", "/nonexistent/shape.json", "--t",
                          "1,0"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("error:") != std::string::npos);

    CliRun bad_pair = run({"bound", "translate", "--shape", unit_square_file(), "--t", "1;2"});
    CHECK(bad_pair.code == 1);

    CliRun unknown_flag = run({"comb", "--teeth", "3", "--frobnicate"});
    CHECK(unknown_flag.code == 1);

    CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);

    CliRun version = run({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out.find("symdiff 0.1.0") != std::string::npos);
}
