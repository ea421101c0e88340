#include "exotic/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    json j() const { return json::parse(out); }
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = exotic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("worked example through the command line")
{
    CHECK(run({"phic", "--mu", "[1,1,1]", "--nu", "[3]"}).j() == json::parse(R"({"lambda":[4,4,2,1,1]})"));
    CHECK(run({"collapse", "--mu", "[1,1,1]", "--nu", "[3]"}).j() == json::parse(R"({"mu":[2,1,1],"nu":[2]})"));
    const json dims = run({"filtration-dims", "--mu", "[1,1,1]", "--nu", "[3]"}).j()["dims"];
    CHECK(dims["3"] == 2);
    CHECK(dims["1"] == 5);
    CHECK(dims["0"] == 7);
    CHECK(dims["-2"] == 10);
    CHECK(run({"orbit-identify", "--file", EXAMPLE_FILE}).j() == json::parse(R"({"mu":[1,1,1],"nu":[3]})"));
    const Result adapted = run({"adapted", "--file", EXAMPLE_FILE});
    REQUIRE(adapted.code == 0);
    CHECK(adapted.j()["verified"] == true);
}

TEST_CASE("multiplicities and partition functions")
{
    const json m = run({"mult", "--n", "2", "--mu", "[2,1]", "--lambda", "[1,0]"}).j();
    CHECK(m["agree"] == true);
    CHECK(m["a"] == m["b"]);
    CHECK(run({"kostant", "--n", "2", "--kind", "p'", "--mu", "[1,0]"}).j()["value"] == 2);
    CHECK(run({"kostant", "--n", "2", "--mu", "[2,0]"}).j()["value"] == 3);
    CHECK(run({"subset-identity", "--n", "2", "--mu", "[3,-1]"}).j()["holds"] == true);
    CHECK(run({"weights", "--n", "2", "--mu", "[1,1]"}).j()["dim"] == 5);
    CHECK(run({"bwb", "--n", "2", "--lambda", "[-3,0]"}).j()["singular"] == true);
    const json b = run({"bwb", "--n", "1", "--lambda", "[-3]"}).j();
    CHECK(b["sign"] == -1);
    CHECK(b["weight"] == json::parse("[1]"));
    CHECK(run({"conv", "--n", "2", "--mu", "[2,0]", "--lambda", "[0,-1]"}).j()["in"] == true);
    CHECK(run({"quasi-order", "--n", "2", "--weights", "[[1,1],[0,0],[2,0]]"}).j()["order"].front() == json::parse("[0,0]"));
    CHECK(run({"decompose", "--n", "1", "--lambda", "[1]", "--bound", "3"}).j()["components"].size() == 3);
}

TEST_CASE("poset output")
{
    const Result dot = run({"poset", "--n", "2", "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph Q2", 0) == 0);
    const json j = run({"poset", "--n", "2"}).j();
    CHECK(j["nodes"].size() == 5);
    CHECK(j["edges"].size() == 5);
}

TEST_CASE("representative output round trips through orbit-identify")
{
    const Result rep = run({"representative", "--mu", "[2]", "--nu", "[1]"});
    REQUIRE(rep.code == 0);
    const std::string path = "cli_rep_test.json";
    std::ofstream(path) << rep.out;
    CHECK(run({"orbit-identify", "--file", path}).j() == json::parse(R"({"mu":[2],"nu":[1]})"));
    std::remove(path.c_str());
}

TEST_CASE("sweep")
{
    const Result r = run({"sweep", "--n", "2", "--bound", "3", "--threads", "2"});
    CHECK(r.code == 0);
    CHECK(r.j()["ok"] == true);
}

TEST_CASE("exit codes and diagnostics")
{
    const Result bad_json = run({"kostant", "--n", "2", "--mu", "[1,"});
    CHECK(bad_json.code == 1);
    CHECK(bad_json.err.find("byte") != std::string::npos);

    const Result wrong_len = run({"kostant", "--n", "3", "--mu", "[1,0]"});
    CHECK(wrong_len.code == 1);
    CHECK(wrong_len.err.find("--n") != std::string::npos);

    const Result cap = run({"kostant", "--n", "9", "--mu", "[0,0,0,0,0,0,0,0,0]"});
    CHECK(cap.code == 1);
    CHECK(cap.err.find("rank_cap") != std::string::npos);
    CHECK(run({"--rank-cap", "9", "kostant", "--n", "9", "--mu", "[0,0,0,0,0,0,0,0,0]"}).code == 0);

    const Result degree = run({"kostant", "--n", "1", "--mu", "[40]"});
    CHECK(degree.code == 1);
    CHECK(degree.err.find("degree_cap") != std::string::npos);

    CHECK(run({"mult", "--n", "2", "--mu", "[0,1]", "--lambda", "[0,0]"}).code == 1);
    CHECK(run({"phic", "--mu", "[1,2]"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"orbit-identify", "--file", "/nonexistent/file.json"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("config file and environment variable")
{
    const std::string path = "cli_test.conf";
    std::ofstream(path) << "# caps\nrank_cap = 2\n";
    CHECK(run({"--config", path, "poset", "--n", "3"}).code == 1);
    setenv("EXOTIC_CONFIG", path.c_str(), 1);
    CHECK(run({"poset", "--n", "3"}).code == 1);
    CHECK(run({"--rank-cap", "3", "poset", "--n", "3"}).code == 0);
    unsetenv("EXOTIC_CONFIG");
    CHECK(run({"poset", "--n", "3"}).code == 0);

    std::ofstream(path) << "bogus = 1\n";
    const Result r = run({"--config", path, "poset", "--n", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("bogus") != std::string::npos);
    std::remove(path.c_str());
}
