#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    const char* bin = std::getenv("SALG_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("bracket verb")
{
    RunResult r = run("bracket --alg S --x L:2 --y L:-2");
    CHECK(r.status == 0);
    json out = json::parse(r.out);
    json expected = json::parse(R"({"result":[
        {"coeff":"-4","gen":"L","mode":0},
        {"coeff":"1/2","gen":"C1","mode":0}]})");
    CHECK(out == expected);

    CHECK(run("bracket --alg SVir12 --x G:1/2 --y G:-1/2").status == 0);
}

TEST_CASE("exit codes")
{
    CHECK(run("bracket --alg Nope --x L:1 --y L:2").status == 2);   // unknown preset
    CHECK(run("bracket --alg S --x G:1 --y L:0").status == 2);      // off-lattice mode
    CHECK(run("bracket --alg S --x L:1").status == 2);              // missing flag
    CHECK(run("no-such-verb").status == 2);
    CHECK(run("--help").status == 0);
    CHECK(run("jacobi-check --alg S --window 4").status == 0);
}

TEST_CASE("h2 verb")
{
    RunResult r = run("--window 6 h2 --epsilon 0");
    CHECK(r.status == 0);
    json out = json::parse(r.out);
    CHECK(out["dimension"] == 4);
    CHECK(out["raw_dimension"] == 5);

    json ns = json::parse(run("--window 6 h2 --epsilon 1/2").out);
    CHECK(ns["dimension"] == 2);
}

TEST_CASE("verma and singular verbs")
{
    RunResult dims = run("verma --h1 0 --h2 0 --c1 0 --max-level 2 --dims");
    CHECK(dims.status == 0);
    CHECK(json::parse(dims.out) == json::parse("[1,1,2,3,6]"));

    json sing = json::parse(
        run("--weight-bound 6 singular --h1 3 --h2 2 --c1 1 --level 1/2").out);
    CHECK(sing["count"] == 1);
}

TEST_CASE("annihilation verb")
{
    CHECK(run("--window 8 annihilation").status == 0);
    json r = json::parse(run("annihilation --x L:2 --y L:1 --alg S").out);
    CHECK(r["result"].size() == 1);
}

TEST_CASE("representation verbs")
{
    CHECK(run("phi-check --window 5").status == 0);
    CHECK(run("--weight-bound 6 whittaker --k 1").status == 0);
    CHECK(run("--weight-bound 6 whittaker --k 1 --psi L:3=1").status == 2);

    json cl = json::parse(
        run("--weight-bound 6 claim1 --module whittaker --letters L:-1").out);
    CHECK(cl["reached_coefficient_part"] == true);
    CHECK(cl["steps"].size() == 1);

    json top = json::parse(
        run("--weight-bound 8 --window 4 top-space --weight-cap 2 --key-degree 1").out);
    CHECK(top["coefficient_part_only"] == true);

    json der = json::parse(run("derived-series --d 0 --t 0").out);
    CHECK(der["dims"] == json::parse("[4,1,0]"));
    CHECK(der["solvable"] == true);

    CHECK(run("--weight-bound 6 restricted-probe --samples 3 --weight-cap 2").status == 0);
}

TEST_CASE("induce verb with a module file")
{
    std::string good = "/tmp/salg_cli_mod_good.json";
    std::ofstream(good) << R"({"dim":1,"d":0,"t":0,"c1":"1","c2":"0",
        "parities":["even"],
        "actions":{"L0":[["2"]],"W0":[["3"]]}})";
    RunResult r = run("--weight-bound 4 induce --module-file " + good);
    CHECK(r.status == 0);
    json out = json::parse(r.out);
    CHECK(out["validation"]["pass"] == true);
    CHECK(out["conditions"]["certified"] == false);  // t = 0 with c2 = 0

    std::string bad = "/tmp/salg_cli_mod_bad.json";
    std::ofstream(bad) << R"({"dim":1,"c1":"0","c2":"1",
        "actions":{"L0":[["2"]],"W0":[["3"]]}})";
    CHECK(run("induce --module-file " + bad).status == 1);

    CHECK(run("induce --module-file /tmp/does_not_exist.json").status == 2);
}

TEST_CASE("deterministic output")
{
    std::string cmd = "--seed 42 --weight-bound 6 restricted-probe --samples 5 --weight-cap 2";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    CHECK(run("--format text h2 --epsilon 0").status == 0);
}
