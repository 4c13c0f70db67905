#include <catch2/catch_amalgamated.hpp>

#include <unicover/corpus.hpp>
#include <unicover/cover.hpp>

using namespace unicover;

static CoverSpace mustBuild(const ScaleTower& tw, int bp, const SubgroupSpec& H,
                            int maxCosets = 10000) {
    CoverBuild b = buildCover(tw, bp, H, maxCosets);
    REQUIRE(b.status == CoverBuild::Status::Ok);
    REQUIRE(b.cover.has_value());
    return std::move(*b.cover);
}

TEST_CASE("triple cover of the 12-cycle") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CoverSpace cv = mustBuild(tw, 0, {"H", {parseWord("g1^3")}});

    CHECK(cv.cosetCount == 3);
    CHECK(cv.total.pointCount() == 36);
    CHECK(cv.total.levelCount() == 1);
    CHECK(cv.basepointFiber == 0);
    CHECK(cv.total.labels[0] == "0|0");

    // fibers: three points over each base point
    for (int p = 0; p < 12; ++p) {
        int hits = 0;
        for (int tp = 0; tp < cv.total.pointCount(); ++tp)
            if (cv.projection.apply(tp) == p) ++hits;
        CHECK(hits == 3);
    }

    // the total level-1 graph is one 36-cycle
    CHECK(isChainConnected(cv.total, 1));
    CHECK(cv.total.level(1).size() == 36);
    CHECK(cv.projection.isUniformlyContinuous());
    CHECK(cv.projection.imagePairs(1) == tw.level(1).pairs);
}

TEST_CASE("lifting the base loop advances the coset") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CoverSpace cv = mustBuild(tw, 0, {"H", {parseWord("g1^3")}});

    Chain loop{1, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0}};
    ChainLift l1 = liftChain(cv, loop, cv.basepointFiber);
    REQUIRE(l1.status.verdict == Verdict::Yes);
    CHECK(l1.unique);
    CHECK(l1.lift.start() == cv.basepointFiber);
    int end1 = l1.lift.end();
    CHECK(cv.basePointOf(end1) == 0);
    CHECK(cv.cosetOf(end1) != 0);   // one loop moves off the trivial coset

    // three consecutive loops return to the start
    ChainLift l2 = liftChain(cv, loop, end1);
    REQUIRE(l2.status.verdict == Verdict::Yes);
    ChainLift l3 = liftChain(cv, loop, l2.lift.end());
    REQUIRE(l3.status.verdict == Verdict::Yes);
    CHECK(l3.lift.end() == cv.basepointFiber);
    CHECK(l2.lift.end() != end1);

    // stutters lift in place
    Chain still{1, {4, 4, 4}};
    ChainLift ls = liftChain(cv, still, cv.totalId(4, 2));
    REQUIRE(ls.status.verdict == Verdict::Yes);
    CHECK(ls.lift.seq == std::vector<int>{cv.totalId(4, 2), cv.totalId(4, 2), cv.totalId(4, 2)});

    CHECK_THROWS_AS(liftChain(cv, Chain{1, {}}, 0), ChainError);
    CHECK_THROWS_AS(liftChain(cv, Chain{1, {0, 7}}, 0), ChainError);
    CHECK_THROWS_AS(liftChain(cv, loop, cv.totalId(3, 0)), ChainError);
}

TEST_CASE("thread lifts through the cover") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CoverSpace cv = mustBuild(tw, 0, {"H", {parseWord("g1^3")}});

    Thread h = cv.group.loopThread(parseWord("g1^3"));
    ThreadLift lh = liftThread(cv, h, cv.basepointFiber);
    REQUIRE(lh.status.verdict == Verdict::Yes);
    CHECK(lh.endTotal == cv.basepointFiber);   // words of H lift closed

    Thread g = cv.group.loopThread(parseWord("g1"));
    ThreadLift lg = liftThread(cv, g, cv.basepointFiber);
    REQUIRE(lg.status.verdict == Verdict::Yes);
    CHECK(lg.endTotal != cv.basepointFiber);
    CHECK(cv.basePointOf(lg.endTotal) == 0);

    CHECK_THROWS_AS(liftThread(cv, g, cv.totalId(5, 0)), ChainError);
}

TEST_CASE("image subgroup equals H both ways") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});

    for (const char* gen : {"g1^3", "g1^2"}) {
        SubgroupSpec H{"H", {parseWord(gen)}};
        CoverSpace cv = mustBuild(tw, 0, H);
        SubgroupSpec img = imageSubgroup(cv);
        REQUIRE_FALSE(img.generators.empty());
        for (const auto& w : img.generators)
            CHECK(freeSubgroupMember(H.generators, w));
        for (const auto& h : H.generators)
            CHECK(freeSubgroupMember(img.generators, h));
    }
}

TEST_CASE("cover equivalence distinguishes indices and forgives conjugation") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CoverSpace c3 = mustBuild(tw, 0, {"H3", {parseWord("g1^3")}});
    CoverSpace c2 = mustBuild(tw, 0, {"H2", {parseWord("g1^2")}});
    CoverSpace c3b = mustBuild(tw, 0, {"H3b", {parseWord("g1^-3")}});

    CHECK(areCoversEquivalent(c3, c2).verdict == Verdict::No);
    CHECK(areCoversEquivalent(c3, c3b).verdict == Verdict::Yes);
    CHECK(areCoversEquivalent(c3, c3).verdict == Verdict::Yes);

    // conjugate subgroups on a rank-2 space give equivalent covers; this one
    // is non-normal (a point stabilizer), so the rebasing really moves
    ScaleTower hw = hawaiianTower(2);
    SubgroupSpec stab{"S",
                      {parseWord("g2"), parseWord("g1^2"), parseWord("g1 g2 g1 g2^-1 g1^-1"),
                       parseWord("g1 g2^2 g1^-1")}};
    SubgroupSpec conj{"S^g", {}};
    for (const auto& w : stab.generators)
        conj.generators.push_back(parseWord("g1") * w * parseWord("g1^-1"));
    CoverSpace cs = mustBuild(hw, 0, stab);
    CoverSpace cc = mustBuild(hw, 0, conj);
    CHECK(cs.cosetCount == 3);
    CHECK(cc.cosetCount == 3);
    CHECK(areCoversEquivalent(cs, cc).verdict == Verdict::Yes);
    // same index, not conjugate (normal vs point stabilizer): says no
    SubgroupSpec abel{"A", {parseWord("g1^3"), parseWord("g2"), parseWord("g1 g2 g1^-1"),
                            parseWord("g1^2 g2 g1^-2")}};
    CoverSpace ca = mustBuild(hw, 0, abel);
    CHECK(ca.cosetCount == 3);
    CHECK(areCoversEquivalent(cs, ca).verdict == Verdict::No);

    ScaleTower other = cycleSpace(6, {Rational(1)});
    CoverSpace oc = mustBuild(other, 0, {"H", {parseWord("g1^2")}});
    CHECK_THROWS_AS(areCoversEquivalent(c3, oc), TowerError);
}

TEST_CASE("overflow reported on infinite index") {
    ScaleTower tw = hawaiianTower(3);
    CoverBuild b = buildCover(tw, 0, {"H", {parseWord("g1")}}, 2000);
    CHECK(b.status == CoverBuild::Status::Overflow);
    CHECK_FALSE(b.cover.has_value());
    CHECK(b.cosetsDefined > 0);
}

TEST_CASE("subgroup words outside the generator range are rejected") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CHECK_THROWS_AS(buildCover(tw, 0, {"H", {parseWord("g2")}}), WordError);
}

TEST_CASE("gapped bridge leaves no total pairs at the coarse level") {
    ScaleTower tw = gappedCycle(8, 1);
    CoverSpace cv = mustBuild(tw, 0, {"H", {}});

    // the trivial finest group forces index 1: the cover is the base minus
    // whatever is not E-short, which is exactly the bridge
    CHECK(cv.cosetCount == 1);
    CHECK(cv.total.pointCount() == 8);
    CHECK(cv.total.level(1).contains(0, 1));
    CHECK_FALSE(cv.total.level(1).contains(0, 7));
    CHECK(cv.total.level(2).pairs == tw.level(2).pairs);

    // lifting the bridge step gets stuck at the missing pair
    Chain bridge{1, {0, 7}};
    ChainLift bl = liftChain(cv, bridge, cv.totalId(0, 0));
    CHECK(bl.status.verdict == Verdict::No);
    CHECK(bl.stuckAt == 0);
}

TEST_CASE("factor map between nested covers") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CoverSpace c6 = mustBuild(tw, 0, {"H6", {parseWord("g1^6")}});
    CoverSpace c3 = mustBuild(tw, 0, {"H3", {parseWord("g1^3")}});

    TowerMap f = coverFactorMap(c6, c3);
    f.validateOrThrow();
    CHECK(f.source.pointCount() == 72);
    CHECK(f.target.pointCount() == 36);
    CHECK(f.isUniformlyContinuous());

    // projections commute: base of the factored point matches
    for (int tp = 0; tp < c6.total.pointCount(); ++tp)
        CHECK(c3.projection.apply(f.apply(tp)) == c6.projection.apply(tp));
    CHECK(f.apply(c6.basepointFiber) == c3.basepointFiber);
}

TEST_CASE("advance words orient base edges") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CoverSpace cv = mustBuild(tw, 0, {"H", {parseWord("g1^3")}});

    GroupWord fwd = cv.advanceWord(6, 7);
    CHECK(fwd == cv.advanceWord(7, 6).inverse());
    CHECK(formatWord(fwd) == "g1");
    CHECK(cv.advanceWord(3, 4).empty());   // forest edge
    CHECK_THROWS_AS(cv.advanceWord(0, 5), ChainError);
}
