#include "orbitdesigns/cli.hpp"
#include "orbitdesigns/scalar.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using orbitdesigns::run_cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << text;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("molien prints the coefficient tuple") {
    Result r = run({"molien", "--type", "B", "--rank", "2", "--lmax", "8"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.substr(0, r.out.find('\n')) == "(1,0,0,0,1,0,0,0,1)");
    Result csv = run({"--format", "csv", "molien", "--type", "B", "--rank", "2",
                      "--lmax", "8"});
    CHECK(csv.out == "1,0,0,0,1,0,0,0,1\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"molien", "--type", "B"}).code == 2);              // missing flags
    CHECK(run({"unknown-subcommand"}).code == 2);
    CHECK(run({"molien", "--type", "Q", "--rank", "2", "--lmax", "4"}).code == 2);
    CHECK(run({"check-design", "missing.json"}).code == 2);
    CHECK(run({"orbit", "--type", "B", "--rank", "3", "--corner", "9"}).code == 2);
    CHECK(run({}).code == 2);
    Result r = run({"molien", "--type", "B", "--rank", "2", "--lmax", "8",
                    "--bogus-flag"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("help succeeds") {
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("orbit emits points with exact coordinates") {
    Result r = run({"orbit", "--type", "B", "--rank", "3", "--corner", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("size 12") != std::string::npos);
    CHECK(r.out.find("squared norm 2") != std::string::npos);

    Result j = run({"orbit", "--type", "B", "--rank", "3", "--corner", "2", "--json"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("size") == 12);
    CHECK(parsed.at("points").size() == 12);
    CHECK(parsed.at("norm2").at("value") == "2");
}

TEST_CASE("json output is byte-identical across runs") {
    std::vector<std::string> args = {"--format", "json", "classify", "--type", "B",
                                     "--nmax", "2"};
    Result a = run(args);
    Result b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
    CHECK(a.out.back() == '\n');
}

TEST_CASE("harm-basis lists polynomials and closed forms") {
    Result r = run({"harm-basis", "--type", "D", "--rank", "4", "--degree", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x1 x2 x3 x4") != std::string::npos);
    Result c = run({"harm-basis", "--type", "B", "--rank", "3", "--degree", "4",
                    "--closed-form"});
    CHECK(c.code == 0);
    CHECK(c.out.find("f4") != std::string::npos);
}

TEST_CASE("fisher computes the bound") {
    Result r = run({"fisher", "--n", "3", "--t", "5", "--spheres", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("14") != std::string::npos);
}

TEST_CASE("check-design certifies an orbit design file") {
    auto path = write_temp("cli_design_b2.json", R"({
        "type": "B", "rank": 2, "J": [1, 2],
        "radii":   {"1": "1", "2": "2"},
        "weights": {"1": "1", "2": "1/16"}
    })");
    Result r = run({"check-design", path.string(), "--tmax", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("agree: yes") != std::string::npos);

    Result j = run({"--format", "json", "check-design", path.string(), "--tmax", "6"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("t_certified") == 5);
    CHECK(parsed.at("agree") == true);
    CHECK(parsed.at("tight") == true);
    CHECK(parsed.at("methods").at("invariant") == 5);

    CHECK(run({"check-design", path.string(), "--tmax", "6", "--expect", "5"}).code == 0);
    CHECK(run({"check-design", path.string(), "--tmax", "6", "--expect", "6"}).code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("check-design accepts explicit point lists") {
    auto path = write_temp("cli_design_cross.json", R"({
        "points": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]],
        "weights": [1,1,1,1,1,1]
    })");
    Result j = run({"--format", "json", "check-design", path.string(), "--tmax", "5"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("t_certified") == 3);
    CHECK(!parsed.at("methods").contains("invariant"));
    std::filesystem::remove(path);

    auto bad = write_temp("cli_design_bad.json", "{ not json ]");
    CHECK(run({"check-design", bad.string()}).code == 2);
    std::filesystem::remove(bad);
}

TEST_CASE("xu build/verify round trip through a file") {
    auto path = std::filesystem::temp_directory_path() / "cli_xu_g2.json";
    Result b = run({"xu-build", "--weight", "gaussian", "--n", "2", "--family", "odd",
                    "--out", path.string()});
    CHECK(b.code == 0);
    Result v = run({"xu-verify", path.string(), "--t", "3"});
    CHECK(v.code == 0);
    CHECK(v.out.find("overall: pass") != std::string::npos);
    // degree 4 must fail -> exit 1
    CHECK(run({"xu-verify", path.string(), "--t", "4"}).code == 1);
    // a perturbed copy fails verification
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    j["lambda"][0]["value"] = "0.501";
    auto bad = write_temp("cli_xu_bad.json", j.dump());
    CHECK(run({"xu-verify", bad.string()}).code == 1);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);

    // unsolvable shape -> verification failure, not usage error
    CHECK(run({"xu-build", "--weight", "gaussian", "--n", "4", "--family", "odd"}).code ==
          1);
}

TEST_CASE("reproduce-tables re-certifies table 2") {
    Result r = run({"reproduce-tables", "--table", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all rows reproduced") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    // a bad --param value is a usage error
    CHECK(run({"reproduce-tables", "--table", "2", "--param", "0.3x"}).code == 2);
}

TEST_CASE("classify honours the rank cap") {
    CHECK(run({"classify", "--type", "A", "--nmax", "12"}).code == 2);
    CHECK(run({"--rank-cap", "12", "classify", "--type", "B", "--nmax", "2"}).code == 0);
}

TEST_CASE("environment variable overrides precision") {
    setenv("ORBIT_DESIGNS_PRECISION", "192", 1);
    Result r = run({"molien", "--type", "B", "--rank", "2", "--lmax", "4"});
    CHECK(r.code == 0);
    CHECK(orbitdesigns::Config::precision_bits() == 192);
    setenv("ORBIT_DESIGNS_PRECISION", "junk", 1);
    CHECK(run({"molien", "--type", "B", "--rank", "2", "--lmax", "4"}).code == 2);
    unsetenv("ORBIT_DESIGNS_PRECISION");
    orbitdesigns::Config::set_precision_bits(256);
}

}  // TEST_SUITE
