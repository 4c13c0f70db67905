#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <unicover/json_io.hpp>

using namespace unicover;

#ifndef UNICOVER_CLI_PATH
#error "UNICOVER_CLI_PATH must name the built binary"
#endif

namespace {

struct RunResult {
    int exitCode = -1;
    std::string stdoutText;
};

std::string& tempDir() {
    static std::string dir = [] {
        std::string d = "/tmp/unicover-cli-XXXXXX";
        REQUIRE(mkdtemp(d.data()) != nullptr);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    static int counter = 0;
    std::string outFile = tempDir() + "/out" + std::to_string(counter++) + ".json";
    std::string cmd =
        std::string(UNICOVER_CLI_PATH) + " " + args + " > " + outFile + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(outFile);
    std::stringstream ss;
    ss << in.rdbuf();
    r.stdoutText = ss.str();
    return r;
}

json parsed(const RunResult& r) { return json::parse(r.stdoutText); }

std::string writeTemp(const std::string& name, const json& doc) {
    std::string path = tempDir() + "/" + name;
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
    return path;
}

} // namespace

TEST_CASE("corpus emit produces a bare loadable tower") {
    RunResult r = run("corpus emit cycle 12 1");
    REQUIRE(r.exitCode == 0);
    json j = parsed(r);
    CHECK_FALSE(j.contains("schema"));   // artifact, not a report
    ScaleTower tw = towerFromJson(j);
    CHECK(tw.pointCount() == 12);
    CHECK_NOTHROW(tw.validateOrThrow());

    CHECK(run("corpus emit no-such-recipe").exitCode == 1);
    CHECK(run("corpus emit cycle").exitCode == 1);   // missing parameters
}

TEST_CASE("reports carry the envelope") {
    std::string cyc = writeTemp("cycle12.json", parsed(run("corpus emit cycle 12 1")));
    RunResult r = run("pi1 " + cyc);
    REQUIRE(r.exitCode == 0);
    json j = parsed(r);
    CHECK(j.at("schema") == 1);
    CHECK(j.contains("version"));
    CHECK(j.contains("generatedAt"));
    CHECK(j.at("command").is_array());
    CHECK(j.at("presentation").at("rank") == 1);
    CHECK(j.at("presentation").at("relators").empty());
}

TEST_CASE("space validate distinguishes bad shape from bad semantics") {
    json good = parsed(run("corpus emit gapped 8 1"));
    std::string goodPath = writeTemp("gapped.json", good);
    RunResult ok = run("space validate " + goodPath);
    CHECK(ok.exitCode == 0);
    CHECK(parsed(ok).at("verdict") == "Pass");
    CHECK(parsed(ok).at("summary").at("hausdorff") == false);

    json broken = good;   // drop a coarse pair so nesting fails
    broken["levels"][0]["pairs"].erase(0);
    RunResult bad = run("space validate " + writeTemp("broken.json", broken));
    CHECK(bad.exitCode == 2);
    json bj = parsed(bad);
    CHECK(bj.at("verdict") == "Fail");
    CHECK(bj.at("witness").at("message").get<std::string>().find("not nested") !=
          std::string::npos);

    json floaty = good;
    floaty["levels"][0]["scale"] = 0.25;
    RunResult fmt = run("space validate " + writeTemp("floaty.json", floaty));
    CHECK(fmt.exitCode == 1);
    CHECK(parsed(fmt).at("error").at("kind") == "format");
}

TEST_CASE("cover build, dump, and lift round-trip") {
    std::string cyc = writeTemp("c12.json", parsed(run("corpus emit cycle 12 1")));
    std::string coverPath = tempDir() + "/cover.json";
    RunResult b = run("cover build " + cyc + " --subgroup g1^3 -o " + coverPath);
    REQUIRE(b.exitCode == 0);

    std::ifstream in(coverPath);
    json dump = json::parse(in);
    CHECK(dump.at("cosets") == 3);
    CHECK(dump.at("totalPoints") == 36);

    RunResult l =
        run("cover lift " + coverPath + " --chain 0,1,2,3,4,5,6,7,8,9,10,11,0 --start 0");
    REQUIRE(l.exitCode == 0);
    json lj = parsed(l);
    CHECK(lj.at("unique") == true);
    CHECK(lj.at("end") != 0);
    CHECK(lj.at("lift").size() == 13);

    RunResult stuck = run("cover lift " + coverPath + " --chain 0,6");
    CHECK(stuck.exitCode == 1);   // not a base chain
    CHECK(parsed(stuck).at("error").at("kind") == "chain");
}

TEST_CASE("verify laws and verify map exit semantics") {
    RunResult laws = run("verify laws --suite composition --seed 7 --instances 3");
    REQUIRE(laws.exitCode == 0);
    json lj = parsed(laws);
    CHECK(lj.at("conclusionFailures") == 0);
    CHECK(lj.at("suites").size() == 1);
    CHECK(run("verify laws --suite no-such-suite").exitCode == 1);

    std::string twin = writeTemp("twin.json", parsed(run("corpus emit twin")));
    json singleTower;
    singleTower["points"] = json::array({"p"});
    singleTower["levels"] = json::array({json{{"scale", 1}, {"pairs", json::array()}}});
    std::string single = writeTemp("single.json", singleTower);
    std::string fold = writeTemp("fold.json", json{{"map", {0, 0}}});

    RunResult vm = run("verify map " + twin + " " + single + " --map " + fold + " --classify");
    CHECK(vm.exitCode == 0);
    json vj = parsed(vm);
    CHECK(vj.at("classification") == "GeneralizedUniformCovering");
    CHECK(vj.at("transverseLevel").is_null());

    // without --classify the failed uniqueness check drives the exit code
    CHECK(run("verify map " + twin + " " + single + " --map " + fold).exitCode == 2);
}

TEST_CASE("stdin input and reruns are byte-stable modulo timestamp") {
    std::string cyc = writeTemp("c12b.json", parsed(run("corpus emit cycle 12 1")));

    RunResult piped = run("corpus emit cycle 12 1 | " + std::string(UNICOVER_CLI_PATH) + " pi1 -");
    REQUIRE(piped.exitCode == 0);
    CHECK(parsed(piped).at("presentation").at("rank") == 1);

    auto stripped = [&](const RunResult& r) {
        json j = parsed(r);
        j.erase("generatedAt");
        return j.dump();
    };
    RunResult a = run("cech " + cyc);
    RunResult b = run("cech " + cyc);
    REQUIRE(a.exitCode == 0);
    CHECK(stripped(a) == stripped(b));
}

TEST_CASE("analyze subgroup reports escaping families") {
    std::string hw = writeTemp("haw3.json", parsed(run("corpus emit hawaiian 3")));
    RunResult r = run("analyze subgroup " + hw + " --subgroup g1 --word g2");
    REQUIRE(r.exitCode == 0);
    json j = parsed(r);
    CHECK(j.at("note") == "escaping family detected");
    CHECK(j.at("closure").at("escaping").size() == 3);
    CHECK(j.at("word").at("profile").at("yesPrefix") == 1);
}
