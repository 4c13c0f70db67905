#include <catch2/catch_amalgamated.hpp>

#include <unicover/core.hpp>
#include <unicover/corpus.hpp>

using namespace unicover;

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4, 2) == Rational(2));
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 2).approx() == Catch::Approx(0.5));
    CHECK_THROWS_AS(Rational(1, 0), TowerError);
    CHECK_THROWS_AS(Rational::parse("x"), TowerError);
}

TEST_CASE("entourage canonical form") {
    Entourage e = Entourage::fromPairs({{3, 1}, {1, 3}, {2, 2}, {0, 1}});
    REQUIRE(e.pairs == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
    CHECK(e.contains(1, 3));
    CHECK(e.contains(3, 1));
    CHECK(e.contains(2, 2));   // diagonal implicit
    CHECK_FALSE(e.contains(0, 3));

    Entourage big = Entourage::fromPairs({{0, 1}, {1, 3}, {0, 3}});
    CHECK(e.subsetOf(big));
    CHECK_FALSE(big.subsetOf(e));
    REQUIRE(big.firstNotIn(e).has_value());
    CHECK(*big.firstNotIn(e) == std::make_pair(0, 3));
}

TEST_CASE("tower validation") {
    ScaleTower tw;
    tw.labels = {"a", "b", "c"};
    tw.levels.push_back(Entourage::fromPairs({{0, 1}, {1, 2}}));
    tw.levels.push_back(Entourage::fromPairs({{0, 1}}));
    CHECK_NOTHROW(tw.validateOrThrow());

    SECTION("nesting violation carries a witness") {
        tw.levels[1] = Entourage::fromPairs({{0, 2}});
        auto v = tw.nestingViolation();
        REQUIRE(v.has_value());
        CHECK(v->first == 2);
        CHECK(v->second == std::make_pair(0, 2));
        CHECK_THROWS_AS(tw.validateOrThrow(), TowerError);
    }
    SECTION("pair range") {
        tw.levels[0] = Entourage::fromPairs({{0, 7}});
        CHECK_THROWS_AS(tw.validateOrThrow(), TowerError);
    }
    SECTION("scale count must match level count when present") {
        tw.scales = {Rational(1)};
        CHECK_THROWS_AS(tw.validateOrThrow(), TowerError);
    }
    SECTION("empty towers rejected") {
        ScaleTower bad;
        CHECK_THROWS_AS(bad.validateOrThrow(), TowerError);
    }
}

TEST_CASE("fromMetric thresholds") {
    std::vector<std::string> labels{"0", "1", "2"};
    std::vector<std::vector<double>> d{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
    ScaleTower tw = fromMetric(labels, d, {Rational(2), Rational(1)});
    CHECK(tw.level(1).size() == 3);
    CHECK(tw.level(2).size() == 2);
    CHECK(tw.scales[1] == Rational(1));
    CHECK_THROWS_AS(fromMetric(labels, d, {Rational(1), Rational(2)}), TowerError);
    CHECK_THROWS_AS(fromMetric(labels, d, {}), TowerError);
    d[0][1] = 3;   // asymmetric
    CHECK_THROWS_AS(fromMetric(labels, d, {Rational(1)}), TowerError);
}

TEST_CASE("chains and E-closeness") {
    ScaleTower tw = cycleSpace(6, {Rational(1)});
    Chain c{1, {0, 1, 2, 2, 3}};   // stutter is legal
    CHECK(isChain(tw, c));
    CHECK(c.length() == 4);
    CHECK_FALSE(isChain(tw, Chain{1, {0, 2}}));
    CHECK_FALSE(isChain(tw, Chain{1, {}}));
    CHECK_FALSE(isChain(tw, Chain{2, {0, 1}}));   // level out of range

    Chain a{1, {0, 1, 2}}, b{1, {0, 5, 4}};
    CHECK_FALSE(areChainsEClose(tw, a, b, 1));   // (1,5) two hops apart
    Chain b2{1, {0, 0, 2}};                      // positionwise only, chain-ness not required
    CHECK(areChainsEClose(tw, a, b2, 1));
    CHECK_THROWS_AS(areChainsEClose(tw, a, Chain{1, {0, 1}}, 1), ChainLengthMismatch);

    Chain d = concatChains(tw, Chain{1, {0, 1}}, Chain{1, {1, 2}});
    CHECK(d.seq == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(concatChains(tw, Chain{1, {0, 1}}, Chain{1, {2, 3}}), ChainError);
    CHECK(invertChain(d).seq == std::vector<int>{2, 1, 0});
}

TEST_CASE("connectivity and components") {
    ScaleTower g = gappedCycle(8, 1);
    CHECK(isChainConnected(g, 1));
    CHECK(isChainConnected(g, 2));
    CHECK(isChainConnectedTower(g));

    ScaleTower tw;
    tw.labels = {"a", "b", "c", "d"};
    tw.levels.push_back(Entourage::fromPairs({{0, 1}, {2, 3}, {1, 2}}));
    tw.levels.push_back(Entourage::fromPairs({{0, 1}, {2, 3}}));
    auto comp = componentsAtLevel(tw, 2);
    CHECK(comp[0] == comp[1]);
    CHECK(comp[2] == comp[3]);
    CHECK(comp[0] != comp[2]);
    CHECK(isChainConnected(tw, 1));
    CHECK_FALSE(isChainConnectedTower(tw));

    auto keep = finestComponentOf(tw, 3);
    CHECK(keep == std::vector<int>{2, 3});
    ScaleTower r = restrictToPoints(tw, keep);
    CHECK(r.pointCount() == 2);
    CHECK(r.labels == std::vector<std::string>{"c", "d"});
    CHECK(r.level(2).contains(0, 1));
}

TEST_CASE("hausdorff witness = everywhere-related pair") {
    CHECK_FALSE(isHausdorffTower(twinPoints().doubled));
    auto w = hausdorffWitness(twinPoints().doubled);
    REQUIRE(w.has_value());
    CHECK(*w == std::make_pair(0, 1));

    // separating the pair at the finest level restores the property
    ScaleTower tw;
    tw.labels = {"a", "b"};
    tw.levels.push_back(Entourage::fromPairs({{0, 1}}));
    tw.levels.push_back(Entourage::fromPairs({}));
    CHECK(isHausdorffTower(tw));
}

TEST_CASE("towerAtLevel keeps one scale") {
    ScaleTower tw = cycleSpace(12, {Rational(2), Rational(1)});
    ScaleTower one = towerAtLevel(tw, 1);
    CHECK(one.levelCount() == 1);
    CHECK(one.level(1).size() == 24);
    CHECK(one.pointCount() == 12);
}
