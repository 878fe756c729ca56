#include "doctest.h"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "lmrep/cli_commands.hpp"
#include "lmrep/json_io.hpp"
#include "lmrep/selfcheck.hpp"

using namespace lmrep;
using nlohmann::json;

namespace {

json run_json(const CmdResult& r) { return json::parse(r.output); }

}   // namespace

TEST_SUITE("cli") {

TEST_CASE("repr on the first worked example") {
    JobConfig cfg;
    cfg.ring = "Z";
    cfg.f = "x^3+4*x-1";
    cfg.ideal_text = "3, x-2";
    CmdResult r = cmd_repr(cfg);
    REQUIRE(r.exit_code == 0);
    json j = run_json(r);
    CHECK(j["a"] == "3");
    CHECK(j["z"] == "2");
    CHECK(j["C"] == json::parse(R"([["0","1","0"],["-8","-2","-5"],["3","0","2"]])"));
    CHECK(j["kappa"] == json::parse(R"([["3","0","0"],["-2","1","0"],["-4","0","1"]])"));
    CHECK(j["charpoly"] == "x^3+4*x-1");
}

TEST_CASE("repr of the unit ideal") {
    JobConfig cfg;
    cfg.ring = "Z";
    cfg.f = "x^3+4*x-1";
    cfg.ideal_text = "1";
    json j = run_json(cmd_repr(cfg));
    CHECK(j["a"] == "1");
    CHECK(j["z"] == "0");
    CHECK(j["C"] == json::parse(R"([["0","1","0"],["-4","0","1"],["1","0","0"]])"));
}

TEST_CASE("repr over the function field") {
    JobConfig cfg;
    cfg.ring = "GF(2)[t]";
    cfg.f = "y^3+(t^3+t^2+t)";
    cfg.ideal_text = "t, y";
    json j = run_json(cmd_repr(cfg));
    CHECK(j["a"] == "t");
    CHECK(j["z"] == "0");
    CHECK(j["C"] == json::parse(R"([["0","1","0"],["0","0","t^2+t+1"],["t","0","0"]])"));
}

TEST_CASE("emitted matrices round-trip through the element grammar") {
    JobConfig cfg;
    cfg.ring = "GF(2)[t]";
    cfg.f = "y^3+(t^3+t^2+t)";
    cfg.ideal_text = "t+1, y+1";
    json j = run_json(cmd_repr(cfg));
    RingSpec spec = RingSpec::parse(j["ring"].get<std::string>());
    for (const char* key : {"C", "kappa", "ideal"}) {
        RMat m = matrix_entries_from_json(spec, j[key]);
        CHECK(matrix_entries_json(m) == j[key]);
    }
}

TEST_CASE("repr error paths") {
    JobConfig cfg;
    cfg.ring = "Z";
    cfg.f = "x^3+4*x-1";
    cfg.ideal_text = "2";   // (2) is not degree one
    CmdResult r = cmd_repr(cfg);
    CHECK(r.exit_code == 2);
    CHECK(run_json(r).contains("error"));

    cfg.ideal_text = "3, x-";
    CHECK(cmd_repr(cfg).exit_code == 1);

    cfg.ideal_text = "3, x-2";
    cfg.f = "x^2-1";
    CHECK(cmd_repr(cfg).exit_code == 2);

    cfg.f = "x^5+x+1";   // degree 5 without the assertion
    CHECK(cmd_repr(cfg).exit_code == 2);
}

TEST_CASE("example presets") {
    JobConfig cfg;
    cfg.example = 1;
    json j = run_json(cmd_repr(cfg));
    CHECK(j["a"] == "3");
    cfg = JobConfig{};
    cfg.example = 2;
    j = run_json(cmd_repr(cfg));
    CHECK(j["a"] == "t");
}

TEST_CASE("forward on a matrix file") {
    std::string path = "cli_forward_test.json";
    {
        std::ofstream out(path);
        out << R"({"ring": "Z", "entries": [["0","1","0"],["-8","-2","-5"],["3","0","2"]]})";
    }
    JobConfig cfg;
    cfg.ring = "Z";
    cfg.f = "x^3+4*x-1";
    cfg.matrix_path = path;
    CmdResult r = cmd_forward(cfg);
    REQUIRE(r.exit_code == 0);
    json j = run_json(r);
    CHECK(j.contains("ideal"));
    std::remove(path.c_str());

    // companion matrix: unit-ideal class
    {
        std::ofstream out(path);
        out << R"({"ring": "Z", "entries": [["0","1","0"],["0","0","1"],["1","-4","0"]]})";
    }
    j = run_json(cmd_forward(cfg));
    CHECK(j["degree_one"]["a"] == "1");
    std::remove(path.c_str());

    // wrong charpoly: domain error
    {
        std::ofstream out(path);
        out << R"({"ring": "Z", "entries": [["1","0","0"],["0","1","0"],["0","0","1"]]})";
    }
    CHECK(cmd_forward(cfg).exit_code == 2);
    std::remove(path.c_str());

    // malformed JSON: parse error
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK(cmd_forward(cfg).exit_code == 1);
    std::remove(path.c_str());

    cfg.matrix_path = "does_not_exist.json";
    CHECK(cmd_forward(cfg).exit_code == 1);
}

TEST_CASE("classes on a reduced corpus") {
    JobConfig cfg;
    cfg.ring = "Z";
    cfg.f = "x^3+4*x-1";
    cfg.prime_bound = 10;
    cfg.exp_bound = 2;
    cfg.box = 6;
    CmdResult r = cmd_classes(cfg);
    REQUIRE(r.exit_code == 0);
    json j = run_json(r);
    CHECK(j["class_count"] == 2);
    CHECK(j["unresolved"].empty());
    CHECK(j["lenstra_all_satisfied"] == true);
    // prime_bound excluding all roots: one class
    cfg.prime_bound = 1;
    j = run_json(cmd_classes(cfg));
    CHECK(j["class_count"] == 1);
}

TEST_CASE("selfcheck passes and is reproducible") {
    JobConfig cfg;
    CmdResult r1 = cmd_selfcheck(cfg);
    CHECK(r1.exit_code == 0);
    CmdResult r2 = cmd_selfcheck(cfg);
    CHECK(r1.output == r2.output);
    cfg.seed = 7;
    CmdResult r3 = cmd_selfcheck(cfg);
    CHECK(r3.exit_code == 0);
}

TEST_CASE("selfcheck negative control") {
    SelfcheckOptions options;
    options.mutate_u1_sign = true;
    SelfcheckReport report = run_selfcheck(options);
    bool conj_failed = false;
    for (const auto& s : report.suites)
        if (s.name == "conjugation-cf") {
            conj_failed = !s.passed;
            CHECK(!s.counterexample.empty());
        }
    CHECK(conj_failed);
    CHECK_FALSE(report.all_passed);
}

}   // TEST_SUITE
