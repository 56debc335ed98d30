#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "jamesgeo/io.hpp"

using jamesgeo::io::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "jamesgeo");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = jamesgeo::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("jamesgeo_cli_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("dist") {
    const auto r = run({"dist", "--n", "1,2", "--m", "3,4"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["distance"] == 2);
    CHECK(j["path"] == json::parse("[[1,2],[1,4],[3,4]]"));
    CHECK(j["config"]["n"] == "1,2");
}

TEST_CASE("jt-norm from a file") {
    const auto dir = scratch("jt");
    std::filesystem::create_directories(dir);
    const auto path = (dir / "x.json").string();
    std::ofstream(path) << R"({"": 1.0})";
    const auto r = run({"jt-norm", "--input", path});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["norm"] == 1.0);
    CHECK(j["witness"] == json::parse(R"([["",""]])"));
}

TEST_CASE("outputs are deterministic") {
    const auto a = run({"james-norm", "--block-samples", "20", "--seed", "5"});
    const auto b = run({"james-norm", "--block-samples", "20", "--seed", "5"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("error objects and exit codes") {
    const auto usage = run({"dist", "--n", "1,2"});
    CHECK(usage.code == jamesgeo::cli::kUsage);
    CHECK(json::parse(usage.err)["error"]["kind"] == "usage");

    const auto invalid = run({"dist", "--n", "2,1", "--m", "3,4"});
    CHECK(invalid.code == jamesgeo::cli::kInvalidInput);
    CHECK(json::parse(invalid.err)["error"]["kind"] == "invalid-input");

    const auto resource = run({"moduli", "--k", "5", "--max-entry", "40"});
    CHECK(resource.code == jamesgeo::cli::kResource);
    CHECK(json::parse(resource.err)["error"]["message"].get<std::string>().find("cap") != std::string::npos);

    const auto unsupported = run({"jt-norm", "--x", R"({"0000":1,"0100":1,"1000":1})"});
    CHECK(unsupported.code == jamesgeo::cli::kUnsupported);

    const auto precondition = run({"jt-embed", "--k", "2", "--n", "1,2", "--sigma", "00000000", "--tau", "00011111"});
    CHECK(precondition.code == jamesgeo::cli::kPrecondition);
}

TEST_CASE("orlicz and delta") {
    const auto r = run({"orlicz", "--phi", "square", "--x", "3,4", "--modulus", "identity", "--t", "1"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["norm"].get<double>() == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(j["delta"][0]["delta"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("tables are written with a config line") {
    const auto dir = scratch("moduli");
    const auto r = run({"moduli", "--k", "2", "--max-entry", "6", "--equicoarse", "1,2", "--out", dir.string()});
    REQUIRE(r.code == 0);
    std::ifstream csv(dir / "moduli.csv");
    std::string first;
    std::getline(csv, first);
    CHECK(first.rfind("# config: ", 0) == 0);
    CHECK(std::filesystem::exists(dir / "equicoarse.csv"));
}

TEST_CASE("suite report") {
    const auto dir = scratch("suite");
    const auto r = run({"suite", "--out", dir.string()});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["total"] == 15);
    CHECK(j["criteria"].size() == 15);
    CHECK(std::filesystem::exists(dir / "suite.json"));
    CHECK(std::filesystem::exists(dir / "suite.csv"));
    std::ifstream a(dir / "suite.json");
    std::stringstream first;
    first << a.rdbuf();
    run({"suite", "--out", dir.string()});
    std::ifstream b(dir / "suite.json");
    std::stringstream second;
    second << b.rdbuf();
    CHECK(first.str() == second.str());
}
