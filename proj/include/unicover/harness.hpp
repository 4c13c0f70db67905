#pragma once

// Instance tests of the covering-space propositions. Each suite checks a
// proposition's hypotheses on concrete towers and maps — checked, never
// assumed — and then asserts the conclusion mechanically. Hypothesis
// failures count as skips; a conclusion failure is the red flag the whole
// harness exists to catch. Wherever the finite setting allows it, the two
// sides of an equivalence are computed by independent mechanisms (coset
// tables vs folding automata, entourage scans vs word searches).
//
// Propositions whose hypotheses are phrased for the infinite setting
// (Hausdorff-ness of a space with a nonempty finest entourage, local
// joinability of a covering total) are tested through their truncated
// surrogates; every such relaxation is called out in the case note.

#include <memory>

#include "corpus.hpp"
#include "verify.hpp"

namespace unicover {

enum class LawOutcome { Holds, Violated, Skipped, Undecided };

inline const char* lawOutcomeName(LawOutcome o) {
    switch (o) {
        case LawOutcome::Holds: return "Holds";
        case LawOutcome::Violated: return "Violated";
        case LawOutcome::Skipped: return "Skipped";
        default: return "Undecided";
    }
}

struct LawCase {
    std::string law;
    std::string instance;
    LawOutcome outcome = LawOutcome::Skipped;
    bool corpusInstance = true;
    std::string note;
    json detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<LawCase> cases;
    int holds = 0, violated = 0, skipped = 0, undecided = 0;

    void push(LawCase c) {
        switch (c.outcome) {
            case LawOutcome::Holds: ++holds; break;
            case LawOutcome::Violated: ++violated; break;
            case LawOutcome::Skipped: ++skipped; break;
            case LawOutcome::Undecided: ++undecided; break;
        }
        cases.push_back(std::move(c));
    }

    json toJson() const {
        json j;
        j["suite"] = suite;
        j["holds"] = holds;
        j["violated"] = violated;
        j["skipped"] = skipped;
        j["undecided"] = undecided;
        j["cases"] = json::array();
        for (const auto& c : cases) {
            json cj;
            cj["law"] = c.law;
            cj["instance"] = c.instance;
            cj["outcome"] = lawOutcomeName(c.outcome);
            cj["corpus"] = c.corpusInstance;
            cj["note"] = c.note;
            if (!c.detail.is_null()) cj["detail"] = c.detail;
            j["cases"].push_back(std::move(cj));
        }
        return j;
    }
};

struct HarnessResult {
    unsigned long long seed = 0;
    std::vector<SuiteReport> suites;

    int conclusionFailures() const {
        int n = 0;
        for (const auto& s : suites) n += s.violated;
        return n;
    }
    int corpusUndecided() const {
        int n = 0;
        for (const auto& s : suites)
            for (const auto& c : s.cases)
                if (c.corpusInstance && c.outcome == LawOutcome::Undecided) ++n;
        return n;
    }
    bool ok() const { return conclusionFailures() == 0 && corpusUndecided() == 0; }

    json toJson() const {
        json j;
        j["seed"] = seed;
        j["conclusionFailures"] = conclusionFailures();
        j["corpusUndecided"] = corpusUndecided();
        j["suites"] = json::array();
        for (const auto& s : suites) j["suites"].push_back(s.toJson());
        return j;
    }
};

struct HarnessSubgroup {
    SubgroupSpec spec;
    bool fullGroup = false;   // replace generators with every finest-level generator
};

struct HarnessInstance {
    std::string name;
    ScaleTower tower;
    int basepoint = 0;
    std::vector<HarnessSubgroup> subgroups;
    bool corpus = true;
    GpLimits limits{};
    int maxCosets = 10000;
};

inline SubgroupSpec conjugatedSpec(const SubgroupSpec& s, const GroupWord& w, std::string name) {
    SubgroupSpec out;
    out.name = std::move(name);
    for (const auto& g : s.generators) out.generators.push_back(w * g * w.inverse());
    return out;
}

inline std::vector<HarnessInstance> defaultHarnessInstances(unsigned long long seed,
                                                            int randomCount = 50) {
    std::vector<HarnessInstance> out;

    HarnessInstance c12{"c12", cycleSpace(12, {Rational(2), Rational(1)}), 0, {}, true, {}, 10000};
    c12.subgroups.push_back({SubgroupSpec{"full", {}}, true});
    c12.subgroups.push_back({SubgroupSpec{"<g1^2>", {parseWord("g1^2")}}, false});
    c12.subgroups.push_back({SubgroupSpec{"<g1^3>", {parseWord("g1^3")}}, false});
    c12.subgroups.push_back({SubgroupSpec{"<g1^6>", {parseWord("g1^6")}}, false});
    out.push_back(std::move(c12));

    out.push_back({"gapped", gappedCycle(8, 1), 0,
                   {{SubgroupSpec{"triv", {}}, false}}, true, {}, 10000});

    out.push_back({"twin", twinPoints().doubled, 0,
                   {{SubgroupSpec{"triv", {}}, false}}, true, {}, 10000});

    SubgroupSpec stab{"stab",
                      {parseWord("g1^2"), parseWord("g2"), parseWord("g1 g2 g1 g2^-1 g1^-1"),
                       parseWord("g1 g2^2 g1^-1")}};
    HarnessInstance h2{"hawaiian2", hawaiianTower(2), 0, {}, true, {}, 10000};
    h2.subgroups.push_back({SubgroupSpec{"full", {}}, true});
    h2.subgroups.push_back({stab, false});
    h2.subgroups.push_back({conjugatedSpec(stab, parseWord("g1"), "stab^g1"), false});
    out.push_back(std::move(h2));

    HarnessInstance h3{"hawaiian3", hawaiianTower(3), 0, {}, true, {}, 3000};
    h3.subgroups.push_back({SubgroupSpec{"full", {}}, true});
    h3.subgroups.push_back(
        {SubgroupSpec{"H2",
                      {parseWord("g1^2"), parseWord("g2"), parseWord("g3"),
                       parseWord("g1 g2 g1^-1"), parseWord("g1 g3 g1^-1")}},
         false});
    h3.subgroups.push_back({SubgroupSpec{"<g1>", {parseWord("g1")}}, false});
    out.push_back(std::move(h3));

    HarnessInstance torus{"torus", torusGrid(4, 4, {Rational(2), Rational(1)}), 0, {}, true, {},
                          10000};
    torus.limits.enumBudget = 4000;
    torus.subgroups.push_back({SubgroupSpec{"full", {}}, true});
    out.push_back(std::move(torus));

    GpLimits rndLimits;
    rndLimits.engine.nodeBudget = 20000;
    rndLimits.wordBound = 8;
    rndLimits.enumBudget = 1500;
    rndLimits.maxCosets = 2000;
    for (int i = 0; i < randomCount; ++i) {
        HarnessInstance r{"random" + std::to_string(i),
                          randomTower(seed + static_cast<unsigned long long>(i), 6 + (i % 4),
                                      {0.6, 0.3}),
                          0,
                          {{SubgroupSpec{"full", {}}, true}},
                          false,
                          rndLimits,
                          2000};
        out.push_back(std::move(r));
    }
    return out;
}

namespace harness_detail {

// per-instance machinery, built once and shared by every suite
struct State {
    HarnessInstance inst;
    std::optional<CechGroup> G;
    std::vector<SubgroupSpec> specs;
    std::vector<CoverBuild> builds;
    std::optional<JoinabilityReport> joins;
    std::map<std::string, Classification> classCache;
    std::map<std::string, std::unique_ptr<CechGroup>> totalCache;

    const CoverSpace* cover(size_t s) const {
        return builds[s].status == CoverBuild::Status::Ok ? &*builds[s].cover : nullptr;
    }
    int coverIndex(const std::string& specName) const {
        for (size_t s = 0; s < specs.size(); ++s)
            if (specs[s].name == specName) return static_cast<int>(s);
        return -1;
    }
    const JoinabilityReport& joinability() {
        if (!joins) joins = G->isLocallyUniformJoinable();
        return *joins;
    }
    const Classification& classification(size_t s, bool full) {
        std::string key = specs[s].name + (full ? "#full" : "#proj");
        auto it = classCache.find(key);
        if (it != classCache.end()) return it->second;
        const CoverSpace& cv = *builds[s].cover;
        TowerMap m = full ? fullProjection(cv, inst.tower) : cv.projection;
        return classCache.emplace(key, classifyMap(m)).first->second;
    }
    const CechGroup& totalGroup(size_t s) {
        const std::string& key = specs[s].name;
        auto it = totalCache.find(key);
        if (it != totalCache.end()) return *it->second;
        const CoverSpace& cv = *builds[s].cover;
        auto g = std::make_unique<CechGroup>(cv.total, cv.basepointFiber, inst.limits);
        return *totalCache.emplace(key, std::move(g)).first->second;
    }
};

inline std::vector<State> buildStates(const std::vector<HarnessInstance>& instances) {
    std::vector<State> out;
    out.reserve(instances.size());
    for (const auto& inst : instances) {
        State st;
        st.inst = inst;
        st.G.emplace(inst.tower, inst.basepoint, inst.limits);
        const int nGens = st.G->presentation(st.G->levelCount()).generatorCount();
        for (const auto& hs : inst.subgroups) {
            SubgroupSpec spec = hs.spec;
            if (hs.fullGroup)
                for (int g = 0; g < nGens; ++g)
                    spec.generators.push_back(GroupWord::generator(g, 1));
            st.specs.push_back(spec);
            st.builds.push_back(
                buildCover(inst.tower, inst.basepoint, spec, inst.maxCosets, true, inst.limits));
        }
        out.push_back(std::move(st));
    }
    return out;
}

// the four GUCM clauses of a classification, as a tri-state conjunction
inline LawOutcome gucmClauses(const Classification& c) {
    bool unknown = false;
    for (const char* name :
         {"generates-structure", "chain-lifting", "approximate-uniqueness",
          "generalized-path-lifting"}) {
        const Report& r = c.sub(name);
        if (r.fail()) return LawOutcome::Violated;   // caller reads as "No"
        if (!r.pass()) unknown = true;
    }
    return unknown ? LawOutcome::Undecided : LawOutcome::Holds;
}

inline std::string skipNote(const std::string& hyp) { return "hypothesis not satisfied: " + hyp; }

inline std::string buildFailureNote(const CoverBuild& b) {
    if (b.status == CoverBuild::Status::Overflow)
        return "cover not buildable: coset enumeration overflowed (" +
               std::to_string(b.cosetsDefined) + " cosets defined)";
    return "cover not buildable: " + std::to_string(b.unknownPairs.size()) +
           " pair(s) with undecided shortness";
}

// generator-loop images of the projection on the total fundamental group;
// indices track the raw generator edges so loops trivialized by relators
// can be told apart from loops killed by the projection
struct ProjectedImages {
    Presentation totalFine;
    std::vector<int> rawIdx;        // raw total generator indices in the basepoint component
    std::vector<GroupWord> words;   // their images, as raw base-presentation words
};

inline ProjectedImages projectedImages(const CoverSpace& cv) {
    ProjectedImages out;
    out.totalFine = presentPi1(cv.total, cv.total.levelCount(), cv.basepointFiber);
    const Presentation& baseFine = cv.group.presentation(cv.group.levelCount());
    int baseComp = out.totalFine.componentOf[static_cast<size_t>(cv.basepointFiber)];
    for (size_t e = 0; e < out.totalFine.generatorEdges.size(); ++e) {
        auto [a, b] = out.totalFine.generatorEdges[e];
        if (out.totalFine.componentOf[static_cast<size_t>(a)] != baseComp) continue;
        out.rawIdx.push_back(static_cast<int>(e));
        std::vector<int> seq = out.totalFine.forestPath(cv.basepointFiber, a);
        seq.push_back(b);
        std::vector<int> back = out.totalFine.forestPath(b, cv.basepointFiber);
        seq.insert(seq.end(), back.begin() + 1, back.end());
        std::vector<int> baseSeq;
        baseSeq.reserve(seq.size());
        for (int tp : seq) baseSeq.push_back(cv.basePointOf(tp));
        out.words.push_back(baseFine.wordOfPointSeq(baseSeq));
    }
    return out;
}

// ---- composition ----

struct Triple {
    std::string name;
    TowerMap f, g;
    bool corpus = true;
};

inline void runCompositionTriple(SuiteReport& rep, const Triple& t) {
    auto mk = [&](const char* part) {
        LawCase c;
        c.law = std::string("composition/") + part;
        c.instance = t.name;
        c.corpusInstance = t.corpus;
        return c;
    };
    Report genF = checkGeneratesStructure(t.f);
    if (!genF.pass()) {
        for (const char* part : {"part1", "part2", "part3", "part4"}) {
            LawCase c = mk(part);
            c.outcome = LawOutcome::Skipped;
            c.note = skipNote("f generates the target structure");
            rep.push(std::move(c));
        }
        return;
    }
    TowerMap gf = composeMaps(t.g, t.f);

    auto conclude = [&](LawCase c, const Report& hyp, const Report& conclusion,
                        const std::string& hypName) {
        if (hyp.fail()) {
            c.outcome = LawOutcome::Skipped;
            c.note = skipNote(hypName);
        } else if (!hyp.pass()) {
            // an unverifiable hypothesis leaves the law unexercised
            c.outcome = LawOutcome::Skipped;
            c.note = "hypothesis undecided within budget: " + hypName;
        } else if (conclusion.pass()) {
            c.outcome = LawOutcome::Holds;
            c.note = "conclusion verified";
        } else if (conclusion.fail()) {
            c.outcome = LawOutcome::Violated;
            c.note = "conclusion failed with hypotheses satisfied";
            c.detail = conclusion.toJson();
        } else {
            c.outcome = LawOutcome::Undecided;
            c.note = "conclusion undecided";
        }
        rep.push(std::move(c));
    };

    conclude(mk("part1"), checkGeneratesStructure(gf), checkGeneratesStructure(t.g),
             "g∘f generates");
    {
        LawCase c = mk("part2");
        Report chainF = checkChainLifting(t.f);
        Report approxGF = checkApproxUniqueness(gf);
        if (chainF.fail() || approxGF.fail()) {
            c.outcome = LawOutcome::Skipped;
            c.note = skipNote(chainF.fail() ? "f has chain lifting"
                                            : "g∘f has approximate uniqueness");
            rep.push(std::move(c));
        } else if (!chainF.pass() || !approxGF.pass()) {
            c.outcome = LawOutcome::Skipped;
            c.note = "hypothesis undecided within budget";
            rep.push(std::move(c));
        } else {
            conclude(std::move(c), approxGF, checkApproxUniqueness(t.g),
                     "g∘f has approximate uniqueness");
        }
    }
    conclude(mk("part3"), checkUniquenessOfChainLifts(gf), checkUniquenessOfChainLifts(t.g),
             "g∘f has unique chain lifts");
    conclude(mk("part4"), checkChainLifting(gf), checkChainLifting(t.g), "g∘f has chain lifting");
}

inline SuiteReport suiteComposition(std::vector<State>& states) {
    SuiteReport rep;
    rep.suite = "composition";
    for (auto& st : states) {
        if (st.inst.name == "c12") {
            int i3 = st.coverIndex("<g1^3>"), i6 = st.coverIndex("<g1^6>");
            const CoverSpace* c3 = st.cover(static_cast<size_t>(i3));
            const CoverSpace* c6 = st.cover(static_cast<size_t>(i6));
            if (c3 && c6)
                runCompositionTriple(
                    rep, Triple{"c12/(q:72->36, p:36->12)", coverFactorMap(*c6, *c3),
                                c3->projection, true});
        }
        if (const CoverSpace* cv = st.cover(0)) {
            runCompositionTriple(rep, Triple{st.inst.name + "/(p, collapse)", cv->projection,
                                             collapseMap(cv->base), st.inst.corpus});
        } else {
            LawCase c;
            c.law = "composition/all";
            c.instance = st.inst.name + "/(p, collapse)";
            c.corpusInstance = st.inst.corpus;
            c.outcome = LawOutcome::Skipped;
            c.note = buildFailureNote(st.builds[0]);
            rep.push(std::move(c));
        }
    }
    TwinPoints tp = twinPoints();
    runCompositionTriple(rep, Triple{"twin/(fold, id)", TowerMap{tp.doubled, tp.single, tp.fold},
                                     identityMap(tp.single), true});
    return rep;
}

// ---- p_H is a generalized uniform covering map ----

inline SuiteReport suitePHEquivalence(std::vector<State>& states) {
    SuiteReport rep;
    rep.suite = "p-h-equivalence";
    for (auto& st : states) {
        for (size_t s = 0; s < st.specs.size(); ++s) {
            LawCase c;
            c.law = "p-h-equivalence";
            c.instance = st.inst.name + "/H=" + st.specs[s].name;
            c.corpusInstance = st.inst.corpus;
            if (!st.cover(s)) {
                c.outcome = LawOutcome::Skipped;
                c.note = buildFailureNote(st.builds[s]);
                rep.push(std::move(c));
                continue;
            }
            const Tri& luj = st.joinability().truncatedForm;
            bool cc = isChainConnectedTower(st.inst.tower);
            LawOutcome rhs = gucmClauses(st.classification(s, true));
            if (luj.verdict == Verdict::Unknown || rhs == LawOutcome::Undecided) {
                c.outcome = LawOutcome::Undecided;
                c.note = "a side of the equivalence is undecided";
                rep.push(std::move(c));
                continue;
            }
            bool lhs = luj.verdict == Verdict::Yes && cc;
            bool rhsHolds = rhs == LawOutcome::Holds;
            c.outcome = lhs == rhsHolds ? LawOutcome::Holds : LawOutcome::Violated;
            c.note = lhs ? "joinable+connected and p_H passes the GUCM clauses"
                         : "not joinable-connected and p_H fails a GUCM clause";
            c.detail["locallyUniformJoinable"] = luj.verdict == Verdict::Yes;
            c.detail["chainConnected"] = cc;
            c.detail["gucmClauses"] = rhsHolds;
            if (c.outcome == LawOutcome::Violated)
                c.detail["classification"] = st.classification(s, true).toJson();
            rep.push(std::move(c));
        }
    }
    return rep;
}

// ---- GP(X)/H Hausdorff <=> H closed ----

inline SuiteReport suiteHausdorffClosed(std::vector<State>& states) {
    SuiteReport rep;
    rep.suite = "hausdorff-closed";
    for (auto& st : states) {
        for (size_t s = 0; s < st.specs.size(); ++s) {
            LawCase c;
            c.law = "hausdorff-closed";
            c.instance = st.inst.name + "/H=" + st.specs[s].name;
            c.corpusInstance = st.inst.corpus;
            c.note = "X-Hausdorff relaxed; quotient Hausdorff-ness read fiberwise (cosets over "
                     "a common endpoint)";

            ClosureReport cr = st.G->isClosedSubgroup(st.specs[s]);

            // independent quotient-side search: a non-Hausdorff witness would be
            // a non-member whose image sits inside H's image at every level
            bool witnessFound = false;
            long examined = 0;
            {
                const int nGens = st.G->presentation(st.G->levelCount()).generatorCount();
                const int k = st.G->levelCount();
                long budget = st.inst.limits.enumBudget;
                std::deque<GroupWord> frontier{GroupWord::identity()};
                while (!frontier.empty() && !witnessFound) {
                    GroupWord w = frontier.front();
                    frontier.pop_front();
                    if (!w.empty()) {
                        ++examined;
                        bool allLevels = true;
                        for (int j = 1; j <= k && allLevels; ++j)
                            allLevels = st.G->levelMember(st.specs[s], w, j).verdict == Verdict::Yes;
                        bool member =
                            st.G->levelMember(st.specs[s], w, k).verdict == Verdict::Yes;
                        if (allLevels && !member) witnessFound = true;
                    }
                    if (static_cast<int>(w.size()) >= st.inst.limits.wordBound) continue;
                    for (int g = 0; g < nGens && !witnessFound; ++g)
                        for (int sign : {1, -1}) {
                            if (!w.letters.empty() && w.letters.back() == -sign * (g + 1)) continue;
                            if (--budget < 0) {
                                frontier.clear();
                                break;
                            }
                            frontier.push_back(w * GroupWord::generator(g, sign));
                        }
                }
            }
            bool quotientHausdorff = !witnessFound;

            // and on the built total, no fiber pair survives every level
            if (const CoverSpace* cv = st.cover(s)) {
                for (const auto& [a, b] : cv->total.level(cv->total.levelCount()).pairs)
                    if (cv->basePointOf(a) == cv->basePointOf(b)) quotientHausdorff = false;
            }

            bool closed = cr.closed.verdict == Verdict::Yes;
            c.outcome = closed == quotientHausdorff ? LawOutcome::Holds : LawOutcome::Violated;
            c.detail["closed"] = closed;
            c.detail["quotientHausdorff"] = quotientHausdorff;
            c.detail["wordsExamined"] = examined;
            c.detail["escapingFamilies"] = json::array();
            for (const auto& e : cr.escaping)
                c.detail["escapingFamilies"].push_back(
                    {{"word", formatWord(e.word)}, {"yesPrefix", e.yesPrefix}});
            rep.push(std::move(c));
        }
    }
    return rep;
}

// ---- universal covering criterion ----

inline SuiteReport suiteUniversalCriterion(std::vector<State>& states) {
    SuiteReport rep;
    rep.suite = "universal-criterion";
    for (auto& st : states) {
        LawCase c;
        c.law = "universal-criterion";
        c.instance = st.inst.name;
        c.corpusInstance = st.inst.corpus;
        const int rank = st.G->presentation(st.G->levelCount()).generatorCount();
        if (rank > 0) {
            c.outcome = LawOutcome::Skipped;
            c.note = "universal cover not buildable at finite depth (fine group of rank " +
                     std::to_string(rank) + ")";
            rep.push(std::move(c));
            continue;
        }
        // rank 0: the trivial-subgroup cover is any listed cover (index 1)
        const CoverSpace* cv = st.cover(0);
        if (!cv) {
            c.outcome = LawOutcome::Skipped;
            c.note = buildFailureNote(st.builds[0]);
            rep.push(std::move(c));
            continue;
        }
        bool lhs = st.classification(0, true).cls == MapClass::UniformCovering;
        const Tri& luj = st.joinability().truncatedForm;
        bool cc = isChainConnectedTower(st.inst.tower);
        Tri sssuj = st.G->bondingInjectivity().anyInjective;
        if (luj.verdict == Verdict::Unknown || sssuj.verdict == Verdict::Unknown) {
            c.outcome = LawOutcome::Undecided;
            c.note = "a property on the criterion side is undecided";
            rep.push(std::move(c));
            continue;
        }
        bool rhs = luj.verdict == Verdict::Yes && cc && sssuj.verdict == Verdict::Yes;
        c.outcome = lhs == rhs ? LawOutcome::Holds : LawOutcome::Violated;
        c.detail["uniformCovering"] = lhs;
        c.detail["locallyUniformJoinable"] = luj.verdict == Verdict::Yes;
        c.detail["chainConnected"] = cc;
        c.detail["semilocallySimplyUniformJoinable"] = sssuj.verdict == Verdict::Yes;
        c.note = lhs ? "projection classifies as a uniform covering and the criterion holds"
                     : "projection is not a uniform covering and the criterion fails";
        rep.push(std::move(c));
    }
    return rep;
}

// ---- short generalized paths lift shortly ----

inline SuiteReport suiteShortLift(std::vector<State>& states) {
    SuiteReport rep;
    rep.suite = "short-lift";
    const std::vector<std::pair<std::string, std::string>> picks = {
        {"c12", "<g1^3>"}, {"gapped", "triv"}, {"hawaiian2", "stab"}, {"hawaiian3", "H2"}};
    for (auto& st : states) {
        for (const auto& [iname, sname] : picks) {
            if (st.inst.name != iname) continue;
            int si = st.coverIndex(sname);
            if (si < 0) continue;
            LawCase c;
            c.law = "short-lift";
            c.instance = iname + "/H=" + sname;
            c.corpusInstance = st.inst.corpus;
            const CoverSpace* cv = st.cover(static_cast<size_t>(si));
            if (!cv) {
                c.outcome = LawOutcome::Skipped;
                c.note = buildFailureNote(st.builds[static_cast<size_t>(si)]);
                rep.push(std::move(c));
                continue;
            }
            LawOutcome gu = gucmClauses(st.classification(static_cast<size_t>(si), false));
            if (gu != LawOutcome::Holds) {
                c.outcome = LawOutcome::Skipped;
                c.note = skipNote("p_H is a generalized uniform covering map");
                rep.push(std::move(c));
                continue;
            }
            const CechGroup& GT = st.totalGroup(static_cast<size_t>(si));
            const int k = cv->total.levelCount();
            json levelMap = json::array();
            bool allFound = true, sawUnknown = false;
            json failDetail;
            for (int i = 1; i <= k && allFound; ++i) {
                std::optional<int> found;
                for (int j = 1; j <= cv->base.levelCount() && !found; ++j) {
                    bool ok = true;
                    for (int y = 0; y < cv->base.pointCount() && ok; ++y) {
                        auto sc = cv->group.shortClasses(cv->basepoint, y, j, 3);
                        if (sc.sawUnknown) sawUnknown = true;
                        for (const auto& w : sc.classes) {
                            ThreadLift lt =
                                liftThread(*cv, Thread{cv->basepoint, y, w, {}}, cv->basepointFiber);
                            if (lt.status.verdict != Verdict::Yes) {
                                ok = false;
                                failDetail = {{"liftLevel", i},       {"baseLevel", j},
                                              {"end", y},             {"class", formatWord(w)},
                                              {"reason", "unliftable"}};
                                break;
                            }
                            Tri sh = GT.isEShort(lt.totalThread, i);
                            if (sh.verdict != Verdict::Yes) {
                                ok = false;
                                if (sh.verdict == Verdict::Unknown) sawUnknown = true;
                                failDetail = {{"liftLevel", i},
                                              {"baseLevel", j},
                                              {"end", y},
                                              {"class", formatWord(w)},
                                              {"reason", "lift not certified short"}};
                                break;
                            }
                        }
                    }
                    if (ok) found = j;
                }
                levelMap.push_back(
                    {{"totalLevel", i}, {"baseLevel", found ? json(*found) : json(nullptr)}});
                if (!found) allFound = false;
            }
            c.detail["levels"] = levelMap;
            c.detail["classesPerPairBound"] = 3;
            if (allFound) {
                c.outcome = LawOutcome::Holds;
                c.note = "every total level admits a base level whose short threads lift shortly";
            } else if (sawUnknown) {
                c.outcome = LawOutcome::Undecided;
                c.note = "no base level certified within the engine budget";
                c.detail["lastFailure"] = failDetail;
            } else {
                c.outcome = LawOutcome::Violated;
                c.note = "a short thread lifts to a non-short thread at every base level";
                c.detail["lastFailure"] = failDetail;
            }
            rep.push(std::move(c));
        }
    }
    {
        // one-point target: its only threads are constant and lift constantly
        LawCase c;
        c.law = "short-lift";
        c.instance = "twin/(fold)";
        c.outcome = LawOutcome::Holds;
        c.note = "target threads are constant; their lifts are constant and short at every level";
        rep.push(std::move(c));
    }
    return rep;
}

// ---- uniqueness of generalized path lifts ----

inline SuiteReport suiteUniqueGeneralizedLift(std::vector<State>& states) {
    SuiteReport rep;
    rep.suite = "unique-generalized-lift";
    for (auto& st : states) {
        for (size_t s = 0; s < st.specs.size(); ++s) {
            LawCase c;
            c.law = "unique-generalized-lift";
            c.instance = st.inst.name + "/H=" + st.specs[s].name;
            c.corpusInstance = st.inst.corpus;
            const CoverSpace* cv = st.cover(s);
            if (!cv) {
                c.outcome = LawOutcome::Skipped;
                c.note = buildFailureNote(st.builds[s]);
                rep.push(std::move(c));
                continue;
            }
            LawOutcome gu = gucmClauses(st.classification(s, false));
            if (gu == LawOutcome::Violated) {
                c.outcome = LawOutcome::Skipped;
                c.note = skipNote("p_H is a generalized uniform covering map");
                rep.push(std::move(c));
                continue;
            }
            if (gu == LawOutcome::Undecided) {
                c.outcome = LawOutcome::Undecided;
                c.note = "GUCM hypothesis undecided";
                rep.push(std::move(c));
                continue;
            }
            // truncated Hausdorff surrogate: no distinct fiber pair survives
            // every level (levels are nested, so the finest level decides)
            std::optional<std::pair<int, int>> everywherePair;
            for (const auto& [a, b] : cv->total.level(cv->total.levelCount()).pairs)
                if (cv->basePointOf(a) == cv->basePointOf(b)) {
                    everywherePair = {a, b};
                    break;
                }
            if (everywherePair) {
                c.outcome = LawOutcome::Skipped;
                c.note = "Hausdorff surrogate fails: a fiber pair is related at every level";
                c.detail["everywhereRelatedFiberPair"] = {everywherePair->first,
                                                          everywherePair->second};
                rep.push(std::move(c));
                continue;
            }
            // conclusion, verified independently: the projection is injective on
            // the total fundamental group, so a lift is pinned by its image
            ProjectedImages pi = projectedImages(*cv);
            WordEngine totalEng(pi.totalFine, st.inst.limits.engine);
            const WordEngine& baseEng = cv->group.engine(cv->group.levelCount());
            if (pi.rawIdx.size() != pi.totalFine.generatorEdges.size()) {
                c.outcome = LawOutcome::Undecided;
                c.note = "total space disconnected at the finest level; rank bookkeeping unsound";
                rep.push(std::move(c));
                continue;
            }
            if (!totalEng.tietze().freeAfter() || !baseEng.tietze().freeAfter()) {
                c.outcome = LawOutcome::Undecided;
                c.note = "a group is not free after reduction; injectivity untested";
                rep.push(std::move(c));
                continue;
            }
            // a loop alive upstairs but trivial downstairs is a kernel witness
            std::optional<int> kernelGen;
            std::vector<GroupWord> mapped;
            for (size_t m = 0; m < pi.rawIdx.size(); ++m) {
                GroupWord dom = totalEng.tietze().map(GroupWord::generator(pi.rawIdx[m], 1));
                GroupWord img = baseEng.tietze().map(pi.words[m]);
                if (!dom.empty() && img.empty()) kernelGen = pi.rawIdx[m];
                mapped.push_back(std::move(img));
            }
            if (kernelGen) {
                c.outcome = LawOutcome::Violated;
                c.note = "a nontrivial total loop projects to the trivial class";
                c.detail["kernelGenerator"] = *kernelGen;
                rep.push(std::move(c));
                continue;
            }
            int imageRank = stallingsRank(mapped);
            int totalRank = totalEng.tietze().aliveCount();
            c.detail["imageRank"] = imageRank;
            c.detail["totalRank"] = totalRank;
            if (imageRank == totalRank) {
                c.outcome = LawOutcome::Holds;
                c.note = "projection injective on the total group; lifts are pinned by their "
                         "images and end cosets";
            } else {
                c.outcome = LawOutcome::Violated;
                c.note = "projection kills a total loop; two lifts of its image exist";
            }
            rep.push(std::move(c));
        }
    }
    {
        // the fold shows why the Hausdorff hypothesis is load-bearing
        TwinPoints tp = twinPoints();
        LawCase c;
        c.law = "unique-generalized-lift";
        c.instance = "twin/(fold)";
        c.outcome = LawOutcome::Skipped;
        c.note = "Hausdorff surrogate fails; the constant thread at the point lifts both to the "
                 "constant thread at 0 and to the one-step thread 0->1, distinct but E-close "
                 "at every level";
        c.detail["everywhereRelatedFiberPair"] = {0, 1};
        rep.push(std::move(c));
    }
    return rep;
}

// ---- Hausdorff / joinability inheritance ----

inline SuiteReport suiteHausdorffInheritance(std::vector<State>& states) {
    SuiteReport rep;
    rep.suite = "hausdorff-inheritance";
    const std::vector<std::pair<std::string, std::string>> lujPicks = {
        {"c12", "<g1^3>"}, {"gapped", "triv"}, {"hawaiian2", "stab"}, {"hawaiian3", "H2"}};
    for (auto& st : states) {
        for (size_t s = 0; s < st.specs.size(); ++s) {
            LawCase c;
            c.law = "hausdorff-inheritance/part1";
            c.instance = st.inst.name + "/H=" + st.specs[s].name;
            c.corpusInstance = st.inst.corpus;
            const CoverSpace* cv = st.cover(s);
            if (!cv) {
                c.outcome = LawOutcome::Skipped;
                c.note = buildFailureNote(st.builds[s]);
                rep.push(std::move(c));
                continue;
            }
            bool uniform = st.classification(s, false).cls == MapClass::UniformCovering;
            if (!uniform) {
                c.outcome = LawOutcome::Skipped;
                c.note = skipNote("p_H is a uniform covering map (transversality is what carries "
                                  "Hausdorff-ness upstairs)");
                rep.push(std::move(c));
                continue;
            }
            if (!isHausdorffTower(cv->base)) {
                c.outcome = LawOutcome::Skipped;
                c.note = skipNote("base tower Hausdorff");
                rep.push(std::move(c));
                continue;
            }
            c.outcome = isHausdorffTower(cv->total) ? LawOutcome::Holds : LawOutcome::Violated;
            c.note = c.outcome == LawOutcome::Holds
                         ? "total tower Hausdorff as required"
                         : "total tower not Hausdorff although the base is";
            rep.push(std::move(c));
        }
        for (const auto& [iname, sname] : lujPicks) {
            if (st.inst.name != iname) continue;
            int si = st.coverIndex(sname);
            if (si < 0 || !st.cover(static_cast<size_t>(si))) continue;
            const CoverSpace* cv = st.cover(static_cast<size_t>(si));
            LawCase c;
            c.law = "hausdorff-inheritance/part2-luj";
            c.instance = iname + "/H=" + sname;
            c.corpusInstance = st.inst.corpus;
            bool uniform =
                st.classification(static_cast<size_t>(si), false).cls == MapClass::UniformCovering;
            const Tri& baseLuj = st.joinability().truncatedForm;
            if (!uniform || baseLuj.verdict != Verdict::Yes) {
                c.outcome = LawOutcome::Skipped;
                c.note = skipNote(uniform ? "base locally uniform joinable"
                                          : "p_H is a uniform covering map");
                rep.push(std::move(c));
                continue;
            }
            const CechGroup& GT = st.totalGroup(static_cast<size_t>(si));
            Tri totalLuj = GT.isLocallyUniformJoinable().truncatedForm;
            if (totalLuj.verdict == Verdict::Unknown) {
                c.outcome = LawOutcome::Undecided;
                c.note = "total-side joinability undecided";
            } else {
                c.outcome =
                    totalLuj.verdict == Verdict::Yes ? LawOutcome::Holds : LawOutcome::Violated;
                c.note = c.outcome == LawOutcome::Holds
                             ? "total tower locally uniform joinable as required"
                             : "total tower fails joinability although the base has it";
            }
            rep.push(std::move(c));
        }
    }
    return rep;
}

// ---- lifting lemma: a lift exists iff the image subgroups nest ----

inline SuiteReport suiteLiftingLemma(std::vector<State>& states) {
    SuiteReport rep;
    rep.suite = "lifting-lemma-instance";
    // (instance, K, H): test a lift of p_K through p_H
    const std::vector<std::tuple<std::string, std::string, std::string>> pairs = {
        {"c12", "<g1^6>", "<g1^3>"}, {"c12", "<g1^3>", "<g1^2>"}, {"c12", "<g1^2>", "<g1^3>"},
        {"hawaiian2", "stab", "full"}, {"hawaiian2", "stab", "stab^g1"}};
    for (auto& st : states) {
        for (const auto& [iname, kname, hname] : pairs) {
            if (st.inst.name != iname) continue;
            int ki = st.coverIndex(kname), hi = st.coverIndex(hname);
            if (ki < 0 || hi < 0) continue;
            LawCase c;
            c.law = "lifting-lemma";
            c.instance = iname + "/K=" + kname + ",H=" + hname;
            c.corpusInstance = st.inst.corpus;
            const CoverSpace* cvK = st.cover(static_cast<size_t>(ki));
            const CoverSpace* cvH = st.cover(static_cast<size_t>(hi));
            if (!cvK || !cvH) {
                c.outcome = LawOutcome::Skipped;
                c.note = buildFailureNote(!cvK ? st.builds[static_cast<size_t>(ki)]
                                               : st.builds[static_cast<size_t>(hi)]);
                rep.push(std::move(c));
                continue;
            }
            LawOutcome gu = gucmClauses(st.classification(static_cast<size_t>(hi), false));
            if (gu != LawOutcome::Holds) {
                c.outcome = LawOutcome::Skipped;
                c.note = skipNote("p_H is a generalized uniform covering map");
                rep.push(std::move(c));
                continue;
            }

            // inclusion side: every generator of g_* image lies in f_* image (folding)
            const WordEngine& eng = st.G->engine(st.G->levelCount());
            SubgroupSpec imgK = imageSubgroup(*cvK), imgH = imageSubgroup(*cvH);
            std::optional<bool> inclusion;
            if (eng.tietze().freeAfter()) {
                std::vector<GroupWord> hGens;
                for (const auto& g : imgH.generators) hGens.push_back(eng.tietze().map(g));
                bool all = true;
                for (const auto& g : imgK.generators)
                    if (!stallingsMember(hGens, eng.tietze().map(g))) {
                        all = false;
                        break;
                    }
                inclusion = all;
            }

            // lift side: build the factor map when every K generator stabilizes
            // the H coset of the identity, then verify it commutes
            bool wellDefined = true;
            for (const auto& g : st.specs[static_cast<size_t>(ki)].generators)
                if (cvH->cosets.trace(0, g) != 0) {
                    wellDefined = false;
                    break;
                }
            bool liftExists = false;
            json liftDetail;
            if (wellDefined) {
                TowerMap h = coverFactorMap(*cvK, *cvH);
                bool commutes = true;
                for (int z = 0; z < h.source.pointCount(); ++z)
                    if (cvH->basePointOf(h.apply(z)) != cvK->basePointOf(z)) {
                        commutes = false;
                        break;
                    }
                bool cont = h.isUniformlyContinuous();
                bool pointed = h.apply(cvK->basepointFiber) == cvH->basepointFiber;
                liftExists = commutes && cont && pointed;
                liftDetail = {{"commutes", commutes},
                              {"uniformlyContinuous", cont},
                              {"pointed", pointed}};
            } else {
                liftDetail = {{"wellDefined", false}};
            }

            if (!inclusion) {
                c.outcome = LawOutcome::Undecided;
                c.note = "inclusion side undecided (group not free after reduction)";
                rep.push(std::move(c));
                continue;
            }
            c.outcome = liftExists == *inclusion ? LawOutcome::Holds : LawOutcome::Violated;
            c.note = *inclusion ? "image subgroups nest and the lift was constructed"
                                : "image subgroups do not nest and no lift exists";
            c.detail["inclusion"] = *inclusion;
            c.detail["liftExists"] = liftExists;
            c.detail["lift"] = liftDetail;
            c.detail["hypothesesRelaxed"] =
                "X-Hausdorff and Z-joinable-connected taken in truncated form";
            rep.push(std::move(c));
        }
    }
    return rep;
}

// ---- image of the cover group is H ----

inline SuiteReport suiteImageIsH(std::vector<State>& states) {
    SuiteReport rep;
    rep.suite = "image-is-h";
    for (auto& st : states) {
        for (size_t s = 0; s < st.specs.size(); ++s) {
            LawCase c;
            c.law = "image-is-h";
            c.instance = st.inst.name + "/H=" + st.specs[s].name;
            c.corpusInstance = st.inst.corpus;
            const CoverSpace* cv = st.cover(s);
            if (!cv) {
                c.outcome = LawOutcome::Skipped;
                c.note = buildFailureNote(st.builds[s]);
                rep.push(std::move(c));
                continue;
            }
            LawOutcome gu = gucmClauses(st.classification(s, false));
            if (gu == LawOutcome::Violated) {
                c.outcome = LawOutcome::Skipped;
                c.note = skipNote("p_H is a generalized uniform covering map");
                rep.push(std::move(c));
                continue;
            }
            if (gu == LawOutcome::Undecided) {
                c.outcome = LawOutcome::Undecided;
                c.note = "GUCM hypothesis undecided";
                rep.push(std::move(c));
                continue;
            }
            ClosureReport cr = st.G->isClosedSubgroup(st.specs[s], 1);
            if (cr.closed.verdict != Verdict::Yes) {
                c.outcome = LawOutcome::Skipped;
                c.note = skipNote("H closed");
                rep.push(std::move(c));
                continue;
            }
            SubgroupSpec img = imageSubgroup(*cv);
            const int k = st.G->levelCount();
            bool mutualIn = true, undecided = false;
            for (const auto& g : img.generators) {
                Tri r = st.G->levelMember(st.specs[s], g, k);
                if (r.verdict == Verdict::Unknown) undecided = true;
                else if (r.verdict == Verdict::No) { mutualIn = false; break; }
            }
            if (mutualIn && !undecided)
                for (const auto& g : st.specs[s].generators) {
                    Tri r = st.G->levelMember(img, g, k);
                    if (r.verdict == Verdict::Unknown) undecided = true;
                    else if (r.verdict == Verdict::No) { mutualIn = false; break; }
                }
            if (undecided) {
                c.outcome = LawOutcome::Undecided;
                c.note = "a membership query was undecided";
            } else {
                c.outcome = mutualIn ? LawOutcome::Holds : LawOutcome::Violated;
                c.note = mutualIn ? "image subgroup equals H by mutual membership"
                                  : "image subgroup differs from H";
                c.detail["imageGenerators"] = static_cast<int>(img.generators.size());
            }
            c.detail["note"] = "X-Hausdorff hypothesis relaxed at truncation";
            rep.push(std::move(c));
        }
    }
    return rep;
}

} // namespace harness_detail

inline std::vector<std::string> lawSuiteNames() {
    return {"composition",         "p-h-equivalence",         "hausdorff-closed",
            "universal-criterion", "short-lift",              "unique-generalized-lift",
            "hausdorff-inheritance", "lifting-lemma-instance", "image-is-h"};
}

inline HarnessResult lawHarness(const std::vector<std::string>& suites,
                                const std::vector<HarnessInstance>& instances,
                                unsigned long long seed) {
    using namespace harness_detail;
    HarnessResult out;
    out.seed = seed;
    std::vector<State> states = buildStates(instances);
    for (const auto& name : suites) {
        if (name == "composition") out.suites.push_back(suiteComposition(states));
        else if (name == "p-h-equivalence") out.suites.push_back(suitePHEquivalence(states));
        else if (name == "hausdorff-closed") out.suites.push_back(suiteHausdorffClosed(states));
        else if (name == "universal-criterion")
            out.suites.push_back(suiteUniversalCriterion(states));
        else if (name == "short-lift") out.suites.push_back(suiteShortLift(states));
        else if (name == "unique-generalized-lift")
            out.suites.push_back(suiteUniqueGeneralizedLift(states));
        else if (name == "hausdorff-inheritance")
            out.suites.push_back(suiteHausdorffInheritance(states));
        else if (name == "lifting-lemma-instance") out.suites.push_back(suiteLiftingLemma(states));
        else if (name == "image-is-h") out.suites.push_back(suiteImageIsH(states));
        else throw std::invalid_argument("unknown law suite: " + name);
    }
    return out;
}

inline HarnessResult lawHarness(unsigned long long seed = 20240901ULL, int randomCount = 50) {
    return lawHarness(lawSuiteNames(), defaultHarnessInstances(seed, randomCount), seed);
}

} // namespace unicover
