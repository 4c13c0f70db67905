#include <catch2/catch_amalgamated.hpp>

#include <unicover/corpus.hpp>
#include <unicover/verify.hpp>

using namespace unicover;

TEST_CASE("identity map is a uniform covering") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    Classification c = classifyMap(identityMap(tw));
    CHECK(c.cls == MapClass::UniformCovering);
    REQUIRE(c.bundle.size() == 5);
    CHECK(c.bundle[0].check == "generates-structure");
    CHECK(c.bundle[1].check == "chain-lifting");
    CHECK(c.bundle[2].check == "uniqueness-of-chain-lifts");
    CHECK(c.bundle[3].check == "approximate-uniqueness");
    CHECK(c.bundle[4].check == "generalized-path-lifting");
    for (const auto& r : c.bundle) CHECK(r.pass());
}

TEST_CASE("cover projection is a uniform covering with a transverse level") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CoverBuild b = buildCover(tw, 0, {"H", {parseWord("g1^3")}});
    REQUIRE(b.cover.has_value());
    const TowerMap& p = b.cover->projection;

    Classification c = classifyMap(p);
    CHECK(c.cls == MapClass::UniformCovering);
    auto lvl = findTransverseEntourage(p);
    REQUIRE(lvl.has_value());
    CHECK(*lvl == 1);
    CHECK(c.sub("uniqueness-of-chain-lifts").pass());
}

TEST_CASE("folding twin points is generalized but not uniform") {
    TwinPoints tp = twinPoints();
    TowerMap fold{tp.doubled, tp.single, tp.fold};

    Classification c = classifyMap(fold);
    CHECK(c.cls == MapClass::GeneralizedUniformCovering);
    CHECK(c.sub("generates-structure").pass());
    CHECK(c.sub("chain-lifting").pass());
    CHECK(c.sub("approximate-uniqueness").pass());
    CHECK(c.sub("generalized-path-lifting").pass());

    const Report& uniq = c.sub("uniqueness-of-chain-lifts");
    CHECK(uniq.fail());
    CHECK(uniq.witness.at("fiberPair") == json({0, 1}));
    CHECK_FALSE(findTransverseEntourage(fold).has_value());
}

TEST_CASE("arc inclusion is neither") {
    ScaleTower cyc = cycleSpace(12, {Rational(1)});
    ScaleTower arc = restrictToPoints(cyc, {0, 1, 2});
    TowerMap inc{arc, cyc, {0, 1, 2}};

    Classification c = classifyMap(inc);
    CHECK(c.cls == MapClass::Neither);

    const Report& gen = c.sub("generates-structure");
    CHECK(gen.fail());
    CHECK(gen.witness.at("clause") == "b");
    CHECK(gen.witness.at("unattainedPoint") == 3);
    CHECK(gen.witness.at("missingPair") == json({0, 11}));

    // an unliftable image chain, mechanically replayable
    const Report& chain = c.sub("chain-lifting");
    CHECK(chain.fail());
    detail::GameWitness w;
    w.startX = chain.witness.at("startX").get<int>();
    w.chain = chain.witness.at("imageChain").get<std::vector<int>>();
    CHECK(detail::replayChainLiftWitness(inc, chain.witness.at("liftLevel").get<int>(), w));
    CHECK(w.chain.back() == 11);   // stuck over the empty fiber
}

TEST_CASE("collapsing a cycle to the point is neither") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    TowerMap col = collapseMap(tw);
    Classification c = classifyMap(col);
    CHECK(c.cls == MapClass::Neither);
    CHECK(c.sub("uniqueness-of-chain-lifts").fail());

    const Report& approx = c.sub("approximate-uniqueness");
    CHECK(approx.fail());
    REQUIRE(approx.witness.contains("divergedPair"));
    // the witness chains genuinely diverge beyond the closeness level
    auto a = approx.witness.at("chainA").get<std::vector<int>>();
    auto b = approx.witness.at("chainB").get<std::vector<int>>();
    REQUIRE(a.size() == b.size());
    CHECK(a.front() == b.front());
    int lvl = approx.witness.at("closenessLevel").get<int>();
    CHECK_FALSE(tw.level(lvl).contains(a.back(), b.back()));
}

TEST_CASE("map composition and validation") {
    ScaleTower tw = cycleSpace(12, {Rational(1)});
    CoverBuild b6 = buildCover(tw, 0, {"H6", {parseWord("g1^6")}});
    CoverBuild b3 = buildCover(tw, 0, {"H3", {parseWord("g1^3")}});
    REQUIRE(b6.cover.has_value());
    REQUIRE(b3.cover.has_value());

    TowerMap f = coverFactorMap(*b6.cover, *b3.cover);
    TowerMap comp = composeMaps(b3.cover->projection, f);
    CHECK(comp.vertexMap == b6.cover->projection.vertexMap);
    CHECK(classifyMap(comp).cls == MapClass::UniformCovering);

    ScaleTower other = cycleSpace(6, {Rational(1)});
    CHECK_THROWS_AS(composeMaps(identityMap(other), b3.cover->projection), TowerError);

    TowerMap bad{tw, other, std::vector<int>(12, 9)};
    CHECK_THROWS_AS(bad.validateOrThrow(), TowerError);
}

TEST_CASE("full projection restores the unrestricted base") {
    ScaleTower tw;
    tw.labels = {"a", "b", "c", "d"};
    tw.levels.push_back(Entourage::fromPairs({{0, 1}, {2, 3}}));
    tw.scales.push_back(Rational(1));

    CoverBuild b = buildCover(tw, 0, {"H", {}});
    REQUIRE(b.cover.has_value());
    CHECK(b.cover->base.pointCount() == 2);   // restricted to the component of a

    TowerMap full = fullProjection(*b.cover, tw);
    full.validateOrThrow();
    CHECK(full.target.pointCount() == 4);
    for (int tp = 0; tp < full.source.pointCount(); ++tp) CHECK(full.apply(tp) <= 1);
}
