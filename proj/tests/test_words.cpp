#include <catch2/catch_amalgamated.hpp>

#include <unicover/words.hpp>

using namespace unicover;

TEST_CASE("free reduction") {
    CHECK(freeReduceLetters({1, -1}) == std::vector<int>{});
    CHECK(freeReduceLetters({1, 2, -2, -1, 3}) == std::vector<int>{3});
    CHECK(freeReduceLetters({1, 1, -1}) == std::vector<int>{1});
    CHECK_THROWS_AS(freeReduceLetters({1, 0}), WordError);
}

TEST_CASE("word algebra") {
    GroupWord a = GroupWord::generator(0);        // g1
    GroupWord b = GroupWord::generator(1, -1);    // g2^-1
    CHECK((a * a.inverse()).empty());
    CHECK((a * b).letters == std::vector<int>{1, -2});
    CHECK((a * b).inverse().letters == std::vector<int>{2, -1});
    CHECK((a * b) * (a * b).inverse() == GroupWord::identity());
    CHECK((a * b).maxGeneratorIndex() == 1);
    CHECK(GroupWord::identity().maxGeneratorIndex() == -1);

    GroupWord w = parseWord("g1^2 g2^-1");
    CHECK(w.abelianized(2) == std::vector<long long>{2, -1});
    CHECK_THROWS_AS(w.abelianized(1), WordError);
}

TEST_CASE("cyclic reduction strips conjugating frame") {
    GroupWord w = parseWord("g1 g2 g1^-1");
    CHECK(cyclicReduce(w) == parseWord("g2"));
    CHECK(cyclicReduce(parseWord("g1 g2")) == parseWord("g1 g2"));
    // stops once ends no longer cancel
    CHECK(cyclicReduce(parseWord("g1 g2 g3 g1^-1")) == parseWord("g2 g3"));
}

TEST_CASE("parse and format round-trip") {
    for (const char* s : {"1", "g1", "g2^-1", "g1^2 g2^-1", "g1 g2 g1^-1", "g3^-3 g1"}) {
        GroupWord w = parseWord(s);
        CHECK(parseWord(formatWord(w)) == w);
    }
    CHECK(formatWord(parseWord("g1 g1")) == "g1^2");
    CHECK(formatWord(GroupWord::identity()) == "1");
    CHECK(parseWord("") == GroupWord::identity());
    CHECK(parseWord("  g1   g2  ") == parseWord("g1 g2"));
    // parser reduces: adjacent inverses vanish
    CHECK(parseWord("g1 g1^-1") == GroupWord::identity());

    CHECK_THROWS_AS(parseWord("h1"), WordError);
    CHECK_THROWS_AS(parseWord("g"), WordError);
    CHECK_THROWS_AS(parseWord("g0"), WordError);
    CHECK_THROWS_AS(parseWord("g1^"), WordError);
    CHECK_THROWS_AS(parseWord("1 g1"), WordError);
}
