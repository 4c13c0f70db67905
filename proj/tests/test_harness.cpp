#include <catch2/catch_amalgamated.hpp>

#include <unicover/harness.hpp>

using namespace unicover;

TEST_CASE("law harness over corpus and seeded randoms") {
    HarnessResult hr = lawHarness();
    CHECK(hr.seed == 20240901ULL);
    CHECK(hr.conclusionFailures() == 0);
    CHECK(hr.corpusUndecided() == 0);
    CHECK(hr.ok());

    struct Expect {
        const char* suite;
        int holds;
        int skipped;
    };
    const Expect expected[] = {
        {"composition", 119, 95},
        {"p-h-equivalence", 56, 7},
        {"hausdorff-closed", 63, 0},
        {"universal-criterion", 15, 41},
        {"short-lift", 5, 0},
        {"unique-generalized-lift", 56, 8},
        {"hausdorff-inheritance", 10, 57},
        {"lifting-lemma-instance", 5, 0},
        {"image-is-h", 56, 7},
    };
    REQUIRE(hr.suites.size() == std::size(expected));
    for (size_t i = 0; i < hr.suites.size(); ++i) {
        const SuiteReport& s = hr.suites[i];
        INFO(s.suite);
        CHECK(s.suite == expected[i].suite);
        CHECK(s.holds == expected[i].holds);
        CHECK(s.skipped == expected[i].skipped);
        CHECK(s.violated == 0);
        CHECK(s.undecided == 0);
        CHECK(static_cast<int>(s.cases.size()) == s.holds + s.skipped);
        for (const auto& c : s.cases) {
            INFO(c.instance << ": " << c.note);
            if (c.corpusInstance) CHECK(c.outcome != LawOutcome::Undecided);
        }
    }

    json j = hr.toJson();
    CHECK(j.at("seed") == 20240901ULL);
    CHECK(j.at("conclusionFailures") == 0);
    CHECK(j.at("corpusUndecided") == 0);
    CHECK(j.at("suites").size() == std::size(expected));
}

TEST_CASE("harness reruns are reproducible") {
    HarnessResult a = lawHarness({"composition"}, defaultHarnessInstances(7, 3), 7);
    HarnessResult b = lawHarness({"composition"}, defaultHarnessInstances(7, 3), 7);
    CHECK(a.toJson() == b.toJson());
    REQUIRE(a.suites.size() == 1);
    CHECK(a.suites[0].violated == 0);
    CHECK(a.suites[0].undecided == 0);

    CHECK_THROWS_AS(lawHarness({"no-such-suite"}, defaultHarnessInstances(7, 0), 7),
                    std::invalid_argument);
}

TEST_CASE("default instances cover the corpus and respect the random count") {
    auto insts = defaultHarnessInstances(20240901ULL, 50);
    CHECK(insts.size() == 6 + 50);
    std::vector<std::string> corpusNames;
    for (const auto& inst : insts)
        if (inst.corpus) corpusNames.push_back(inst.name);
    CHECK(corpusNames == std::vector<std::string>{"c12", "gapped", "twin", "hawaiian2",
                                                  "hawaiian3", "torus"});
    for (const auto& inst : insts)
        if (!inst.corpus) CHECK(inst.name.rfind("random", 0) == 0);
}
