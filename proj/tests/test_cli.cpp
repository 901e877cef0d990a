#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cpw/cli.hpp"
#include "cpw/json_io.hpp"

using namespace cpw;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kLoop =
    R"({"vertices":["v"],"edges":[{"id":"e","src":"v","dst":"v"}]})";
const std::string kRose2 =
    R"({"vertices":["v"],"edges":[{"id":"e","src":"v","dst":"v"},{"id":"f","src":"v","dst":"v"}]})";
const std::string kLine3 =
    R"({"vertices":["v1","v2","v3"],"edges":[{"id":"e1","src":"v1","dst":"v2"},{"id":"e2","src":"v2","dst":"v3"}]})";
const std::string kVW =
    R"({"vertices":["v","w"],"edges":[{"id":"e","src":"v","dst":"w"}]})";
const std::string kFork =
    R"({"vertices":["v","w","u"],"edges":[{"id":"a","src":"v","dst":"w"},{"id":"b","src":"v","dst":"u"}]})";

} // namespace

TEST_CASE("graph loading and relation resolution") {
    auto loop = write_file("loop.json", kLoop);
    RunResult r = run({"jset", "-g", loop, "-X", "all", "-k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"vertices\":[\"v\"]}\n");

    auto vw = write_file("vw.json", kVW);
    RunResult sink = run({"condl", "-g", vw, "-X", "w"});
    CHECK(sink.code == 3);
    CHECK(sink.err.find("'w'") != std::string::npos);

    auto bad = write_file("bad.json",
                          R"({"vertices":["v"],"edges":[{"id":"e","src":"zz","dst":"v"}]})");
    RunResult schema = run({"analyze", "-g", bad, "-X", "all"});
    CHECK(schema.code == 2);
    CHECK(schema.err.find("/edges/0/src") != std::string::npos);

    RunResult missing = run({"analyze", "-g", "no_such_file.json"});
    CHECK(missing.code == 2);
}

TEST_CASE("analyze json envelope") {
    auto loop = write_file("loop.json", kLoop);
    RunResult r = run({"analyze", "-g", loop, "-X", "all", "--json"});
    REQUIRE(r.code == 0);
    json env = json::parse(r.out);
    CHECK(env.at("verb") == "analyze");
    CHECK(env.at("version") == kToolVersion);
    CHECK(env.at("digest").is_string());
    const json& payload = env.at("payload");
    CHECK(payload.at("simple").at("verdict") == false);
    CHECK(payload.at("conditionL").at("holds") == false);
    CHECK(payload.at("conditionL").at("witness").at("edges") == json::array({"e"}));
    CHECK(payload.at("maximal") == true);
    CHECK(payload.at("allIdealsGraded") == false);

    // determinism outside the timing field, and round-trip stability
    RunResult again = run({"analyze", "-g", loop, "-X", "all", "--json"});
    json env2 = json::parse(again.out);
    env.erase("timingMs");
    env2.erase("timingMs");
    CHECK(env == env2);
    CHECK(json::parse(env.dump()) == env);
}

TEST_CASE("calc verb") {
    auto rose = write_file("rose2.json", kRose2);
    RunResult r = run({"calc", "-g", rose, "-X", "all", "-e", "e e* + f f* - v"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");

    RunResult seeded = run({"calc", "-g", rose, "-X", "all", "-e",
                            "(e + f)(e + f)* - v", "--seed", "7"});
    CHECK(seeded.code == 0);

    RunResult syn = run({"calc", "-g", rose, "-X", "all", "-e", "e **"});
    CHECK(syn.code == 2);
    RunResult unknown = run({"calc", "-g", rose, "-X", "all", "-e", "zz"});
    CHECK(unknown.code == 3);
}

TEST_CASE("jset verb") {
    auto line = write_file("line3.json", kLine3);
    RunResult r = run({"jset", "-g", line, "-X", "all", "-k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"vertices\":[\"v1\"]}\n");
    RunResult r3 = run({"jset", "-g", line, "-X", "all", "-k", "3"});
    CHECK(r3.out == "{\"vertices\":[]}\n");
}

TEST_CASE("text rendering of verdict lines") {
    auto loop = write_file("loop.json", kLoop);
    RunResult r = run({"analyze", "-g", loop, "-X", "all"});
    CHECK(r.out.find("simple: false (condition (L) fails; witness cycle: e)") !=
          std::string::npos);
    CHECK(r.out.find("conditionL: false (witness cycle: e)") != std::string::npos);

    auto fork = write_file("fork.json", kFork);
    RunResult s = run({"simple", "-g", fork, "-X", "all"});
    CHECK(s.out == "simple: false (not super maximal; witness: {w})\n");

    auto empty = write_file("empty.json", R"({"vertices":[],"edges":[]})");
    RunResult e = run({"analyze", "-g", empty, "-X", "all"});
    CHECK(e.code == 0);
    CHECK(e.out.find("simple: true") != std::string::npos);
}

TEST_CASE("simple verb equals analyze simple verdict") {
    for (const auto& [name, text] : std::vector<std::pair<std::string, std::string>>{
             {"loop", kLoop}, {"rose", kRose2}, {"line", kLine3}, {"fork", kFork}}) {
        auto path = write_file(name + ".json", text);
        for (const std::string& rel : {"all", "none"}) {
            RunResult s = run({"simple", "-g", path, "-X", rel, "--json"});
            RunResult a = run({"analyze", "-g", path, "-X", rel, "--json"});
            REQUIRE(s.code == 0);
            REQUIRE(a.code == 0);
            CHECK(json::parse(s.out).at("payload").at("simple") ==
                  json::parse(a.out).at("payload").at("simple"));
        }
    }
}

TEST_CASE("tck verb") {
    auto vw = write_file("vw.json", kVW);
    auto fam = write_file("fam.json", R"({"dim":2,
        "p":{"v":[[1,0],[0,0]],"w":[[0,0],[0,1]]},
        "x":{"e":[[0,1],[0,0]]},
        "y":{"e":[[0,0],[1,0]]}})");
    RunResult r = run({"tck", "-g", vw, "-X", "all", "-f", fam});
    CHECK(r.code == 0);
    CHECK(r.out.find("relations: ok") != std::string::npos);
    CHECK(r.out.find("injective: false (p[v] = sum_{e in vE^1} x[e] y[e])") !=
          std::string::npos);

    auto broken = write_file("fam_bad.json", R"({"dim":2,
        "p":{"v":[[1,0],[0,0]],"w":[[0,0],[0,1]]},
        "x":{"e":[[0,1],[0,0]]},
        "y":{"e":[[0,1],[0,0]]}})");
    RunResult b = run({"tck", "-g", vw, "-X", "all", "-f", broken});
    CHECK(b.code == 0);
    CHECK(b.out.find("relations: fail") != std::string::npos);

    auto malformed = write_file("fam_malformed.json", R"({"dim":2,"p":{},"x":{}})");
    CHECK(run({"tck", "-g", vw, "-X", "all", "-f", malformed}).code == 2);

    RunResult rj = run({"tck", "-g", vw, "-X", "all", "-f", fam, "--json"});
    json env = json::parse(rj.out);
    CHECK(env.at("payload").at("relations").at("ok") == true);
    CHECK(env.at("payload").at("injective").at("verdict") == false);
}

TEST_CASE("invcycle verb") {
    auto loop = write_file("loop.json", kLoop);
    RunResult r = run({"invcycle", "-g", loop, "-X", "all", "--json"});
    REQUIRE(r.code == 0);
    json env = json::parse(r.out);
    const json& cycles = env.at("payload").at("invariantCycles");
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].at("I") == json::array({"v"}));
    CHECK(cycles[0].at("n") == 1);
    CHECK(cycles[0].at("eta").at("map").at("v").at("path") == json::array({"e"}));
    CHECK(cycles[0].at("eta").at("map").at("v").at("coeff") == "1");

    auto rose = write_file("rose2.json", kRose2);
    RunResult none = run({"invcycle", "-g", rose, "-X", "all"});
    CHECK(none.out == "invariantCycles: 0\n");
}

TEST_CASE("ideals verb and capacity error") {
    auto fork = write_file("fork.json", kFork);
    RunResult r = run({"ideals", "-g", fork, "-X", "all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gradedIdeals: {}, {w}, {u}, {u, v, w}") != std::string::npos);

    RunResult capped = run({"ideals", "-g", fork, "-X", "all", "--cap", "2"});
    CHECK(capped.code == 4);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"bogusverb"}).code == 1);
    CHECK(run({"analyze"}).code == 1);          // missing -g
    auto loop = write_file("loop.json", kLoop);
    CHECK(run({"calc", "-g", loop}).code == 1); // missing -e
    CHECK(run({"--help"}).code == 0);
}
