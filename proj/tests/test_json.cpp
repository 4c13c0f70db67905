#include <catch2/catch_amalgamated.hpp>

#include <unicover/corpus.hpp>
#include <unicover/json_io.hpp>

using namespace unicover;

TEST_CASE("tower round-trips through json") {
    for (const ScaleTower& tw :
         {cycleSpace(12, {Rational(1)}), hawaiianTower(2), gappedCycle(8, 1)}) {
        ScaleTower back = towerFromJson(towerToJson(tw));
        CHECK(back.labels == tw.labels);
        REQUIRE(back.levelCount() == tw.levelCount());
        for (int i = 1; i <= tw.levelCount(); ++i) CHECK(back.level(i) == tw.level(i));
        CHECK(back.scales == tw.scales);
        CHECK_NOTHROW(back.validateOrThrow());
    }

    // a scale-free tower comes back with explicit null scales, same meaning
    ScaleTower bare = randomTower(42, 8, {0.6, 0.3});
    ScaleTower back = towerFromJson(towerToJson(bare));
    REQUIRE(back.scales.size() == 2);
    CHECK_FALSE(back.scales[0].has_value());
    for (int i = 1; i <= bare.levelCount(); ++i) CHECK(back.level(i) == bare.level(i));
}

TEST_CASE("scales serialize exactly") {
    ScaleTower tw;
    tw.labels = {"a", "b"};
    tw.levels.push_back(Entourage::fromPairs({{0, 1}}));
    tw.levels.push_back(Entourage::fromPairs({{0, 1}}));
    tw.scales = {Rational(2), Rational(1, 3)};

    json j = towerToJson(tw);
    CHECK(j["levels"][0]["scale"] == 2);          // integral scales stay numbers
    CHECK(j["levels"][1]["scale"] == "1/3");      // fractional ones are strings

    ScaleTower back = towerFromJson(j);
    CHECK(back.scales[0] == Rational(2));
    CHECK(back.scales[1] == Rational(1, 3));

    j["levels"][1]["scale"] = nullptr;
    CHECK_FALSE(towerFromJson(j).scales[1].has_value());
}

TEST_CASE("loader rejects malformed documents with paths") {
    json good = towerToJson(cycleSpace(4, {Rational(1)}));

    auto expectError = [](json j, const std::string& needle) {
        try {
            towerFromJson(j);
            FAIL("expected JsonFormatError");
        } catch (const JsonFormatError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    json noPoints = good;
    noPoints.erase("points");
    expectError(noPoints, "missing field \"points\"");

    json floatScale = good;
    floatScale["levels"][0]["scale"] = 0.5;
    expectError(floatScale, "floating-point value rejected");
    expectError(floatScale, "levels[0].scale");

    json badPair = good;
    badPair["levels"][0]["pairs"][0] = json::array({1});
    expectError(badPair, "pairs[0]");

    json badScaleString = good;
    badScaleString["levels"][0]["scale"] = "half";
    expectError(badScaleString, "bad rational literal");

    json badLabel = good;
    badLabel["points"][2] = 7;
    expectError(badLabel, "points[2]");
}

TEST_CASE("subgroup specs round-trip and validate") {
    SubgroupSpec s{"K", {parseWord("g1^3"), parseWord("g2 g1^-1")}};
    json j = subgroupToJson(s);
    CHECK(j["generators"][0] == "g1^3");
    SubgroupSpec back = subgroupFromJson(j);
    CHECK(back.name == "K");
    REQUIRE(back.generators.size() == 2);
    CHECK(back.generators[1] == s.generators[1]);

    json bad = j;
    bad["generators"][0] = "h9";
    CHECK_THROWS_AS(subgroupFromJson(bad), JsonFormatError);
}

TEST_CASE("vertex maps accept both spellings") {
    json bare = json::array({0, 1, 2});
    CHECK(vertexMapFromJson(bare) == std::vector<int>{0, 1, 2});
    json wrapped;
    wrapped["map"] = bare;
    CHECK(vertexMapFromJson(wrapped) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(vertexMapFromJson(json::object()), JsonFormatError);
    CHECK_THROWS_AS(vertexMapFromJson(json::array({0, 1.5})), JsonFormatError);
}

TEST_CASE("cover dumps rebuild deterministically") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CoverBuild b = buildCover(tw, 0, {"H", {parseWord("g1^3")}});
    REQUIRE(b.cover.has_value());

    json dump = coverToJson(*b.cover, 10000);
    CoverContext ctx = coverContextFromJson(dump);
    CHECK(ctx.basepoint == 0);
    CHECK(ctx.maxCosets == 10000);
    CHECK(ctx.H.generators == b.cover->H.generators);

    CoverBuild again = buildCover(ctx.base, ctx.basepoint, ctx.H, ctx.maxCosets);
    REQUIRE(again.cover.has_value());
    CHECK(coverToJson(*again.cover, ctx.maxCosets) == dump);
}

TEST_CASE("report serializers carry verdict names") {
    ScaleTower gap = gappedCycle(8, 1);
    CechGroup gp(gap, 0);

    json jr = joinabilityToJson(gp.isLocallyUniformJoinable());
    CHECK(jr["ownScale"]["verdict"] == "no");
    CHECK(jr["witness"]["pair"] == json::array({0, 7}));
    CHECK(jr["truncatedForm"]["verdict"] == "yes");

    json pj = presentationToJson(gp.presentation(1));
    CHECK(pj["rank"] == 1);
    CHECK(pj["relators"].empty());

    ScaleTower hw = hawaiianTower(3);
    CechGroup hwg(hw, 0);
    json cr = closureReportToJson(hwg.isClosedSubgroup({"H", {parseWord("g1")}}));
    CHECK(cr["closed"]["verdict"] == "yes");
    REQUIRE(cr["escaping"].size() == 3);
    CHECK(cr["escaping"][0]["word"] == "g2");
    CHECK(cr["escaping"][0]["profile"]["yesPrefix"] == 1);

    json ij = injectivityProfileToJson(hwg.bondingInjectivity());
    CHECK(ij["perLevel"][0]["verdict"] == "no");
    CHECK(ij["perLevel"][2]["verdict"] == "yes");
    CHECK(ij["anyInjective"]["verdict"] == "yes");
}
