#include <catch2/catch_amalgamated.hpp>

#include <unicover/corpus.hpp>
#include <unicover/gp.hpp>

using namespace unicover;

TEST_CASE("thread construction and realization") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CechGroup gp(tw, 0);

    Chain loop{1, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0}};
    Thread t = gp.makeThread(loop);
    CHECK(t.start == 0);
    CHECK(t.end == 0);
    CHECK(formatWord(t.fineClass) == "g1");

    // realized chain reads back the same class
    Chain rc = gp.realizeChain(t);
    CHECK(rc.start() == 0);
    CHECK(rc.end() == 0);
    CHECK(isChain(tw, rc));
    CHECK(gp.recomputedImage(t, 1) == t.fineClass);

    Thread inv = invertThread(t);
    CHECK(formatWord(inv.fineClass) == "g1^-1");
    CHECK(concatThreads(t, inv).fineClass.empty());
    Thread at3 = gp.identityThread(3);
    CHECK_THROWS_AS(concatThreads(t, at3), ChainError);

    CHECK_THROWS_AS(gp.makeThread(Chain{1, {0, 5}}), ChainError);
    CHECK_THROWS_AS(gp.threadFromWord(0, 0, parseWord("g2")), WordError);
}

TEST_CASE("truncation principle: cached and recomputed images agree") {
    ScaleTower tw = hawaiianTower(3);
    CechGroup gp(tw, 0);
    for (const char* s : {"g1", "g2 g1^-1", "g3 g2 g3", "g1 g2 g3 g1^-1"}) {
        Thread t = gp.loopThread(parseWord(s));
        for (int j = 1; j <= gp.levelCount(); ++j) {
            GroupWord cached = gp.coarseImage(t, j);
            GroupWord walked = gp.recomputedImage(t, j);
            CHECK(gp.engine(j).isTrivial(cached * walked.inverse()).verdict == Verdict::Yes);
        }
    }
}

TEST_CASE("E-shortness of threads") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CechGroup gp(tw, 0);

    CHECK(gp.isEShort(gp.identityThread(0), 1).verdict == Verdict::Yes);
    CHECK(gp.isEShort(gp.threadFromWord(0, 1, GroupWord::identity()), 1).verdict == Verdict::Yes);
    // the full loop is not short: it differs from the stutter by g1
    CHECK(gp.isEShort(gp.loopThread(parseWord("g1")), 1).verdict == Verdict::No);
    // endpoints not entourage-related
    CHECK(gp.isEShort(gp.threadFromWord(0, 6, GroupWord::identity()), 1).verdict == Verdict::No);
}

TEST_CASE("star level gauges thread agreement") {
    ScaleTower tw = cycleSpace(12, {Rational(2), Rational(1)});
    CechGroup gp(tw, 0);

    Thread a = gp.threadFromWord(0, 1, GroupWord::identity());
    StarLevelResult same = gp.starLevel(a, a);
    CHECK(same.verdict == Verdict::Yes);
    REQUIRE(same.level.has_value());
    CHECK(*same.level == 2);   // identical threads are short at the finest level
    CHECK(same.gauge() == Rational(1, 4));

    Thread loop = gp.loopThread(parseWord("g1"));
    StarLevelResult far = gp.starLevel(gp.identityThread(0), loop);
    CHECK(far.verdict == Verdict::No);
    CHECK_FALSE(far.level.has_value());
    CHECK(far.gauge() == Rational(1));

    CHECK_THROWS_AS(gp.starLevel(a, gp.identityThread(5)), ChainError);
}

TEST_CASE("membership profiles over the hawaiian tower") {
    ScaleTower tw = hawaiianTower(3);
    CechGroup gp(tw, 0);
    SubgroupSpec H{"H", {parseWord("g1")}};

    MembershipProfile inside = gp.closureMember(H, parseWord("g1^5"));
    CHECK(inside.overall.verdict == Verdict::Yes);
    CHECK(inside.yesPrefix == 3);

    // g2 dies at the coarsest level, so its image lies in the image of H there
    MembershipProfile escaping = gp.closureMember(H, parseWord("g2"));
    REQUIRE(escaping.perLevel.size() == 3);
    CHECK(escaping.perLevel[0].tri.verdict == Verdict::Yes);
    CHECK(escaping.perLevel[1].tri.verdict == Verdict::No);
    CHECK(escaping.perLevel[2].tri.verdict == Verdict::No);
    CHECK(escaping.overall.verdict == Verdict::No);
    CHECK(escaping.yesPrefix == 1);
}

TEST_CASE("closure analysis finds escaping families") {
    ScaleTower tw = hawaiianTower(3);
    CechGroup gp(tw, 0);
    SubgroupSpec H{"H", {parseWord("g1")}};

    ClosureReport cr = gp.isClosedSubgroup(H);
    CHECK(cr.closed.verdict == Verdict::Yes);   // exact at truncation
    REQUIRE(cr.escaping.size() == 3);
    CHECK(formatWord(cr.escaping[0].word) == "g2");
    CHECK(cr.escaping[0].yesPrefix == 1);
    CHECK(formatWord(cr.escaping[1].word) == "g2^-1");
    CHECK(cr.escaping[1].yesPrefix == 1);
    CHECK(formatWord(cr.escaping[2].word) == "g3");
    CHECK(cr.escaping[2].yesPrefix == 2);
    CHECK(cr.wordsExamined > 0);
}

TEST_CASE("deep word escapes the fixed subgroup at depth four") {
    ScaleTower tw = hawaiianTower(4);
    CechGroup gp(tw, 0);
    SubgroupSpec H{"H", {parseWord("g1"), parseWord("g2")}};

    GroupWord beta = parseWord("g1 g2 g3 g4");
    CHECK_FALSE(freeSubgroupMember(H.generators, beta));

    MembershipProfile p = gp.closureMember(H, beta);
    CHECK(p.overall.verdict == Verdict::No);
    CHECK(p.yesPrefix == 2);   // inside through the two coarsest scales
    CHECK(p.perLevel[2].tri.verdict == Verdict::No);
    CHECK(p.perLevel[3].tri.verdict == Verdict::No);
}

TEST_CASE("bonding injectivity profile of the hawaiian tower") {
    ScaleTower tw = hawaiianTower(3);
    CechGroup gp(tw, 0);
    InjectivityProfile ip = gp.bondingInjectivity();
    REQUIRE(ip.perLevel.size() == 3);
    CHECK(ip.perLevel[0].tri.verdict == Verdict::No);
    CHECK(ip.perLevel[1].tri.verdict == Verdict::No);
    CHECK(ip.perLevel[2].tri.verdict == Verdict::Yes);
    CHECK(ip.anyInjective.verdict == Verdict::Yes);
}

TEST_CASE("short classes joining adjacent cycle points") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    GpLimits lim;
    lim.enumBudget = 2000;
    CechGroup gp(tw, 0, lim);

    CechGroup::ShortClassSearch s = gp.shortClasses(0, 1, 1);
    REQUIRE(s.classes.size() == 1);   // only the forest class is short
    CHECK(s.classes[0].empty());
    CHECK_FALSE(s.sawUnknown);
}

TEST_CASE("joinability at own scale") {
    ScaleTower cyc = cycleSpace(12, {Rational(1)});
    JoinabilityReport jr = CechGroup(cyc, 0).isLocallyUniformJoinable();
    CHECK(jr.ownScale.verdict == Verdict::Yes);
    CHECK_FALSE(jr.witness.has_value());
    CHECK(jr.truncatedForm.verdict == Verdict::Yes);

    ScaleTower gap = gappedCycle(8, 1);
    JoinabilityReport gj = CechGroup(gap, 0).isLocallyUniformJoinable();
    CHECK(gj.ownScale.verdict == Verdict::No);
    REQUIRE(gj.witness.has_value());
    CHECK(gj.witness->level == 1);
    CHECK(gj.witness->pair == std::make_pair(0, 7));
    REQUIRE(gj.perLevel.size() == 2);
    CHECK(gj.perLevel[0].tri.verdict == Verdict::No);
    CHECK(gj.perLevel[1].tri.verdict == Verdict::Yes);
    CHECK(gj.truncatedForm.verdict == Verdict::Yes);
}

TEST_CASE("basepoint component restriction") {
    ScaleTower tw;
    tw.labels = {"a", "b", "c", "d"};
    tw.levels.push_back(Entourage::fromPairs({{0, 1}, {2, 3}}));
    tw.scales.push_back(Rational(1));

    CechGroup left(tw, 0);
    CHECK(left.restrictedToComponent());
    CHECK(left.tower().pointCount() == 2);
    CHECK(left.originalPoint(0) == 0);
    CHECK(left.originalPoint(1) == 1);

    CechGroup right(tw, 3);
    CHECK(right.restrictedToComponent());
    CHECK(right.tower().pointCount() == 2);
    CHECK(right.basepoint() == 1);
    CHECK(right.originalPoint(right.basepoint()) == 3);
}
