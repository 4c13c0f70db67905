#pragma once

// Generalized paths ("threads") over a scale tower and the truncated Cech
// fundamental group.
//
// With finitely many levels a generalized path is determined by its class at
// the finest level — the Truncation Principle — so a thread stores endpoints
// plus one finest-level word; every coarser term is its image under the
// bonding homomorphisms.
//
// Coarse words of a thread drop out of two per-level caches:
//   a[p]   = level word of the finest forest path basepoint -> p
//   phi[g] = level word of the finest generator loop g
// For a thread (s, e, w) the level-j chain class rel endpoints is
// a[s]^-1 · phi(w) · a[e] (an exact free-word identity, not just a group
// one), which is what the E-shortness test compares against a one-step
// chain.
//
// Properties whose paper form quantifies over an infinite filtration
// (completeness, semilocal simple joinability, local joinability) are
// reported as per-level profiles plus a verdict valid for the truncated
// tower; profiles are never extrapolated.

#include <optional>

#include "pi1.hpp"

namespace unicover {

struct SubgroupSpec {
    std::string name;
    std::vector<GroupWord> generators;   // words at the finest level
};

struct Thread {
    int start = 0;
    int end = 0;
    GroupWord fineClass;   // closed-up word at the finest level
    // per-level image cache, filled by CechGroup::coarseImage
    mutable std::vector<std::optional<GroupWord>> coarseImages;
};

inline Thread concatThreads(const Thread& a, const Thread& b) {
    if (a.end != b.start) throw ChainError("concatThreads: junction mismatch");
    return Thread{a.start, b.end, a.fineClass * b.fineClass, {}};
}

inline Thread invertThread(const Thread& t) {
    return Thread{t.end, t.start, t.fineClass.inverse(), {}};
}

struct LevelTri {
    int level = 0;
    Tri tri;
};

struct StarLevelResult {
    Verdict verdict = Verdict::No;    // Yes: level set; No: not short anywhere
    std::optional<int> level;         // deepest j with isEShort = Yes
    std::vector<int> unknownLevels;   // finer levels whose verdict was Unknown
    // dyadic gauge d* = 2^-starLevel; 1 when no level qualifies
    Rational gauge() const {
        if (!level) return Rational(1);
        return Rational(1, 1LL << std::min(*level, 62));
    }
};

struct MembershipProfile {
    std::vector<LevelTri> perLevel;   // coarsest first
    Tri overall;
    int yesPrefix = 0;   // maximal m with levels 1..m all Yes
};

struct EscapingWitness {
    GroupWord word;
    int yesPrefix = 0;
    MembershipProfile profile;
};

struct ClosureReport {
    Tri closed;   // for the truncated tower
    std::vector<EscapingWitness> escaping;
    long long wordsExamined = 0;
    int lengthBound = 0;
    bool searchExhausted = false;
};

struct InjectivityProfile {
    std::vector<LevelTri> perLevel;   // bonding k -> j injective?
    Tri anyInjective;                 // truncated-tower verdict
    int wordBound = 0;
};

struct JoinabilityReport {
    // headline: every pair of E_i is joined by an E_i-short thread, per level
    Tri ownScale;
    std::vector<LevelTri> perLevel;
    struct Witness {
        int level = 0;
        std::pair<int, int> pair{0, 0};
    };
    std::optional<Witness> witness;
    // the literal "some finer level j supplies the joining threads" form,
    // evaluated at truncation (j = finest always qualifies when the engine
    // certifies one-step threads short)
    Tri truncatedForm;
    int wordBound = 0;
    long nodeBudget = 0;
};

struct GpLimits {
    EngineLimits engine;
    int wordBound = 16;        // word-length bound for searches
    long enumBudget = 20000;   // node cap for thread/word enumeration
    int maxCosets = 10000;
};

class CechGroup {
public:
    CechGroup(const ScaleTower& tower, int basepoint, GpLimits limits = {}) : limits_(limits) {
        tower.validateOrThrow();
        tower.checkPoint(basepoint);
        std::vector<int> comp = finestComponentOf(tower, basepoint);
        restricted_ = static_cast<int>(comp.size()) != tower.pointCount();
        if (restricted_) {
            tower_ = restrictToPoints(tower, comp);
            pointOrig_ = comp;
            basepoint_ = static_cast<int>(std::lower_bound(comp.begin(), comp.end(), basepoint) -
                                          comp.begin());
        } else {
            tower_ = tower;
            basepoint_ = basepoint;
            pointOrig_.resize(static_cast<size_t>(tower.pointCount()));
            for (size_t p = 0; p < pointOrig_.size(); ++p) pointOrig_[p] = static_cast<int>(p);
        }

        const int k = tower_.levelCount();
        const int n = tower_.pointCount();
        pres_.reserve(static_cast<size_t>(k));
        eng_.reserve(static_cast<size_t>(k));
        for (int i = 1; i <= k; ++i) {
            pres_.push_back(presentPi1(tower_, i, basepoint_));
            eng_.emplace_back(pres_.back(), limits_.engine);
        }
        const Presentation& fine = pres_.back();

        // forest order: parents before children
        std::vector<int> order;
        order.push_back(basepoint_);
        {
            std::vector<std::vector<int>> kids(static_cast<size_t>(n));
            for (int p = 0; p < n; ++p)
                if (fine.forestParent[static_cast<size_t>(p)] >= 0)
                    kids[static_cast<size_t>(fine.forestParent[static_cast<size_t>(p)])].push_back(p);
            for (size_t q = 0; q < order.size(); ++q)
                for (int c : kids[static_cast<size_t>(order[q])]) order.push_back(c);
        }

        a_.assign(static_cast<size_t>(k), std::vector<GroupWord>(static_cast<size_t>(n)));
        phi_.assign(static_cast<size_t>(k), {});
        for (int i = 1; i <= k; ++i) {
            auto& av = a_[static_cast<size_t>(i - 1)];
            for (int p : order) {
                int par = fine.forestParent[static_cast<size_t>(p)];
                if (par < 0) continue;
                av[static_cast<size_t>(p)] = av[static_cast<size_t>(par)] * stepWordAt(i, par, p);
            }
            auto& ph = phi_[static_cast<size_t>(i - 1)];
            for (auto [u, v] : fine.generatorEdges)
                ph.push_back(av[static_cast<size_t>(u)] * stepWordAt(i, u, v) *
                             av[static_cast<size_t>(v)].inverse());
        }

        for (int i = 1; i < k; ++i)
            projections_.push_back(bondingHom(fine, pres_[static_cast<size_t>(i - 1)],
                                              eng_[static_cast<size_t>(i - 1)]));
    }

    const ScaleTower& tower() const { return tower_; }
    int basepoint() const { return basepoint_; }
    int levelCount() const { return tower_.levelCount(); }
    bool restrictedToComponent() const { return restricted_; }
    int originalPoint(int p) const { return pointOrig_[static_cast<size_t>(p)]; }
    const GpLimits& limits() const { return limits_; }

    const Presentation& presentation(int level) const { return pres_[static_cast<size_t>(level - 1)]; }
    const WordEngine& engine(int level) const { return eng_[static_cast<size_t>(level - 1)]; }
    const std::vector<BondingHom>& projections() const { return projections_; }

    // level word of a single finest step, identity for stutters/forest edges
    GroupWord stepWordAt(int level, int u, int v) const {
        int l = pres_[static_cast<size_t>(level - 1)].letterOfStep(u, v);
        if (l == 0) return GroupWord::identity();
        return GroupWord::generator(std::abs(l) - 1, l > 0 ? 1 : -1);
    }

    const GroupWord& pathWord(int level, int p) const {
        return a_[static_cast<size_t>(level - 1)][static_cast<size_t>(p)];
    }

    // ----- thread construction -----

    Thread makeThread(const Chain& c) const {
        const int k = levelCount();
        if (c.level != k) throw ChainError("makeThread: chain must be at the finest level");
        if (!isChain(tower_, c)) throw ChainError("makeThread: not a chain at the finest level");
        return Thread{c.start(), c.end(), pres_.back().wordOfPointSeq(c.seq), {}};
    }

    Thread identityThread(int at) const {
        tower_.checkPoint(at);
        return Thread{at, at, GroupWord::identity(), {}};
    }

    Thread threadFromWord(int s, int e, const GroupWord& w) const {
        tower_.checkPoint(s);
        tower_.checkPoint(e);
        if (w.maxGeneratorIndex() >= pres_.back().generatorCount())
            throw WordError("threadFromWord: letter outside the finest generator range");
        return Thread{s, e, w, {}};
    }

    Thread loopThread(const GroupWord& w) const { return threadFromWord(basepoint_, basepoint_, w); }

    // finest chain realizing the thread: forest paths between generator edges
    Chain realizeChain(const Thread& t) const {
        const Presentation& fine = pres_.back();
        std::vector<int> seq{t.start};
        int cur = t.start;
        auto walkTo = [&](int target) {
            std::vector<int> p = fine.forestPath(cur, target);
            seq.insert(seq.end(), p.begin() + 1, p.end());
            cur = target;
        };
        for (int l : t.fineClass.letters) {
            auto [u, v] = fine.generatorEdges[static_cast<size_t>(std::abs(l) - 1)];
            int from = l > 0 ? u : v, to = l > 0 ? v : u;
            walkTo(from);
            seq.push_back(to);
            cur = to;
        }
        walkTo(t.end);
        return Chain{levelCount(), std::move(seq)};
    }

    // ----- images -----

    GroupWord imageOfWord(const GroupWord& w, int level) const {
        if (level == levelCount()) return w;
        const auto& ph = phi_[static_cast<size_t>(level - 1)];
        GroupWord out = GroupWord::identity();
        for (int l : w.letters) {
            const GroupWord& im = ph[static_cast<size_t>(std::abs(l) - 1)];
            out = out * (l > 0 ? im : im.inverse());
        }
        return out;
    }

    const GroupWord& coarseImage(const Thread& t, int level) const {
        auto& cache = t.coarseImages;
        if (cache.size() != static_cast<size_t>(levelCount()))
            cache.assign(static_cast<size_t>(levelCount()), std::nullopt);
        auto& slot = cache[static_cast<size_t>(level - 1)];
        if (!slot) slot = imageOfWord(t.fineClass, level);
        return *slot;
    }

    // level word of the realized chain, for Truncation Principle cross-checks
    GroupWord recomputedImage(const Thread& t, int level) const {
        return pres_[static_cast<size_t>(level - 1)].wordOfPointSeq(realizeChain(t).seq);
    }

    Tri classesEqual(const Thread& a, const Thread& b) const {
        if (a.start != b.start || a.end != b.end)
            throw ChainError("classesEqual: endpoint mismatch");
        return eng_.back().isTrivial(a.fineClass * b.fineClass.inverse());
    }

    // ----- E* structure -----

    Tri isEShort(const Thread& t, int level) const {
        if (!tower_.level(level).contains(t.start, t.end))
            return Tri::no("endpoints not related at level " + std::to_string(level));
        GroupWord test = pathWord(level, t.start).inverse() * coarseImage(t, level) *
                         pathWord(level, t.end) * stepWordAt(level, t.start, t.end).inverse();
        Tri r = eng_[static_cast<size_t>(level - 1)].isTrivial(test);
        r.evidence = "level " + std::to_string(level) + ": " + r.evidence;
        return r;
    }

    StarLevelResult starLevel(const Thread& a, const Thread& b) const {
        if (a.start != b.start) throw ChainError("starLevel: threads must share a start point");
        Thread diff = concatThreads(invertThread(a), b);
        StarLevelResult out;
        for (int j = levelCount(); j >= 1; --j) {
            Tri r = isEShort(diff, j);
            if (r.verdict == Verdict::Yes) {
                out.verdict = Verdict::Yes;
                out.level = j;
                return out;
            }
            if (r.verdict == Verdict::Unknown) out.unknownLevels.push_back(j);
        }
        out.verdict = out.unknownLevels.empty() ? Verdict::No : Verdict::Unknown;
        return out;
    }

    // ----- subgroup closure analysis -----

    // level-j membership of w's image in the image of <H>
    Tri levelMember(const SubgroupSpec& H, const GroupWord& w, int level) const {
        const WordEngine& eng = eng_[static_cast<size_t>(level - 1)];
        GroupWord iw = eng.tietze().map(imageOfWord(w, level));
        std::vector<GroupWord> ih;
        for (const auto& h : H.generators) ih.push_back(eng.tietze().map(imageOfWord(h, level)));
        if (eng.tietze().freeAfter()) {
            bool in = stallingsMember(ih, iw);
            return in ? Tri::yes("Stallings membership in the reduced free presentation")
                      : Tri::no("Stallings non-membership in the reduced free presentation");
        }
        CosetTable t = cosetEnumerate(eng.tietze().aliveCount(), eng.tietze().reducedRelators(),
                                      ih, limits_.maxCosets);
        if (!t.closed)
            return Tri::unknown("coset enumeration overflow beyond " +
                                std::to_string(limits_.maxCosets) + " cosets");
        return t.trace(0, iw) == 0
                   ? Tri::yes("coset table of index " + std::to_string(t.cosetCount))
                   : Tri::no("word lands outside the subgroup coset (index " +
                             std::to_string(t.cosetCount) + ")");
    }

    MembershipProfile closureMember(const SubgroupSpec& H, const GroupWord& w) const {
        MembershipProfile out;
        bool anyNo = false, anyUnknown = false;
        for (int j = 1; j <= levelCount(); ++j) {
            Tri r = levelMember(H, w, j);
            if (r.verdict == Verdict::No) anyNo = true;
            if (r.verdict == Verdict::Unknown) anyUnknown = true;
            if (out.yesPrefix == j - 1 && r.verdict == Verdict::Yes) out.yesPrefix = j;
            out.perLevel.push_back({j, std::move(r)});
        }
        if (anyNo)
            out.overall = Tri::no("image membership fails at some level");
        else if (anyUnknown)
            out.overall = Tri::unknown("some level undecided");
        else
            out.overall = Tri::yes("image membership holds at every level");
        return out;
    }

    // closed ⟺ complete at truncation: the finest-level profile entry is exact
    // membership itself, so Cl(H) = <H> and the verdict is Yes; the content is
    // the escaping families (words outside <H> whose coarse images stay inside)
    ClosureReport isClosedSubgroup(const SubgroupSpec& H, int maxWitnesses = 3) const {
        ClosureReport out;
        out.lengthBound = limits_.wordBound;
        const int nGens = pres_.back().generatorCount();
        long budget = limits_.enumBudget;
        std::deque<GroupWord> frontier{GroupWord::identity()};
        bool truncatedByBudget = false;
        while (!frontier.empty()) {
            GroupWord w = frontier.front();
            frontier.pop_front();
            if (!w.empty()) {
                ++out.wordsExamined;
                MembershipProfile p = closureMember(H, w);
                const Tri& finest = p.perLevel.back().tri;
                if (finest.verdict == Verdict::No && p.yesPrefix >= 1) {
                    out.escaping.push_back({w, p.yesPrefix, p});
                    if (static_cast<int>(out.escaping.size()) >= maxWitnesses) break;
                }
            }
            if (static_cast<int>(w.size()) >= out.lengthBound) continue;
            for (int g = 0; g < nGens; ++g)
                for (int sign : {1, -1}) {
                    if (!w.letters.empty() && w.letters.back() == -sign * (g + 1)) continue;
                    if (--budget < 0) {
                        truncatedByBudget = true;
                        frontier.clear();
                        break;
                    }
                    frontier.push_back(w * GroupWord::generator(g, sign));
                }
        }
        out.searchExhausted =
            !truncatedByBudget && static_cast<int>(out.escaping.size()) < maxWitnesses;
        out.closed = Tri::yes(
            "finest-level membership is exact, so the closure adds nothing at finite depth");
        return out;
    }

    // injectivity of the bonding k -> j, per level
    InjectivityProfile bondingInjectivity() const {
        InjectivityProfile out;
        out.wordBound = limits_.wordBound;
        const int k = levelCount();
        // source rank after reduction; sound because reduction preserves the group
        const int n = eng_.back().tietze().aliveCount();
        const bool fineFree = eng_.back().tietze().freeAfter();
        for (int j = 1; j <= k; ++j) {
            if (j == k) {
                out.perLevel.push_back({j, Tri::yes("identity projection")});
                continue;
            }
            const WordEngine& eng = eng_[static_cast<size_t>(j - 1)];
            if (fineFree && eng.tietze().freeAfter()) {
                std::vector<GroupWord> imgs;
                for (const auto& im : phi_[static_cast<size_t>(j - 1)])
                    imgs.push_back(eng.tietze().map(im));
                int r = stallingsRank(imgs);
                out.perLevel.push_back(
                    {j, r == n ? Tri::yes("image rank " + std::to_string(r) +
                                          " equals source rank (free groups are Hopfian)")
                               : Tri::no("image rank " + std::to_string(r) + " < source rank " +
                                         std::to_string(n))});
                continue;
            }
            out.perLevel.push_back({j, kernelSearch(j)});
        }
        out.anyInjective =
            Tri::yes("the finest-level projection is the identity (truncated-tower verdict)");
        return out;
    }

    // bounded enumeration of E_i-short classes joining x to y: the forest-path
    // and one-step candidates first, then words read off walks through the
    // finest graph; every returned class carries an engine certificate
    struct ShortClassSearch {
        std::vector<GroupWord> classes;
        bool sawUnknown = false;
    };

    ShortClassSearch shortClasses(int x, int y, int i, int maxClasses = 4) const {
        ShortClassSearch out;
        std::set<std::vector<int>> accepted;
        auto consider = [&](const GroupWord& w) {
            if (static_cast<int>(out.classes.size()) >= maxClasses) return;
            if (accepted.count(w.letters)) return;
            Tri r = isEShort(Thread{x, y, w, {}}, i);
            if (r.verdict == Verdict::Yes) {
                accepted.insert(w.letters);
                out.classes.push_back(w);
            } else if (r.verdict == Verdict::Unknown) {
                out.sawUnknown = true;
            }
        };
        consider(GroupWord::identity());
        if (tower_.level(levelCount()).contains(x, y))
            consider(pres_.back().wordOfPointSeq({x, y}));
        const Presentation& fine = pres_.back();
        std::vector<std::vector<int>> nbr(static_cast<size_t>(tower_.pointCount()));
        for (const auto& [a, b] : fine.edges) {
            nbr[static_cast<size_t>(a)].push_back(b);
            nbr[static_cast<size_t>(b)].push_back(a);
        }
        std::deque<std::pair<int, GroupWord>> frontier{{x, GroupWord::identity()}};
        std::set<std::pair<int, std::vector<int>>> seen{{x, {}}};
        long budget = limits_.enumBudget;
        while (!frontier.empty() && static_cast<int>(out.classes.size()) < maxClasses) {
            auto [p, w] = frontier.front();
            frontier.pop_front();
            if (--budget < 0) break;
            if (p == y && !w.empty()) consider(w);
            if (static_cast<int>(w.size()) >= limits_.wordBound) continue;
            for (int q : nbr[static_cast<size_t>(p)]) {
                GroupWord nw = w * stepWordAt(levelCount(), p, q);
                if (seen.insert({q, nw.letters}).second) frontier.push_back({q, nw});
            }
        }
        return out;
    }

    JoinabilityReport isLocallyUniformJoinable() const {
        JoinabilityReport out;
        out.wordBound = limits_.wordBound;
        out.nodeBudget = limits_.enumBudget;
        const int k = levelCount();
        int compRank = pres_.back().generatorCount();
        bool anyUnknown = false;
        for (int i = 1; i <= k; ++i) {
            Tri levelTri = Tri::yes("every pair joined by an E-short thread");
            for (const auto& [x, y] : tower_.level(i).pairs) {
                Tri r = pairJoinable(x, y, i, compRank == 0);
                if (r.verdict == Verdict::Yes) continue;
                if (r.verdict == Verdict::No) {
                    levelTri = std::move(r);
                    if (!out.witness) out.witness = {i, {x, y}};
                } else if (levelTri.verdict == Verdict::Yes) {
                    levelTri = std::move(r);
                }
                if (levelTri.verdict == Verdict::No) break;
            }
            if (levelTri.verdict == Verdict::Unknown) anyUnknown = true;
            out.perLevel.push_back({i, std::move(levelTri)});
        }
        if (out.witness)
            out.ownScale = Tri::no("pair (" + std::to_string(out.witness->pair.first) + "," +
                                   std::to_string(out.witness->pair.second) + ") at level " +
                                   std::to_string(out.witness->level) +
                                   " admits no E-short joining thread");
        else if (anyUnknown)
            out.ownScale = Tri::unknown("some pair undecided within the enumeration budget");
        else
            out.ownScale = Tri::yes("all levels joined at their own scale");
        out.truncatedForm = truncatedJoinability();
        return out;
    }

private:
    Tri kernelSearch(int j) const {
        const WordEngine& fineEng = eng_.back();
        const WordEngine& eng = eng_[static_cast<size_t>(j - 1)];
        const int n = pres_.back().generatorCount();
        long budget = limits_.enumBudget;
        std::deque<GroupWord> frontier{GroupWord::identity()};
        while (!frontier.empty() && budget > 0) {
            GroupWord w = frontier.front();
            frontier.pop_front();
            if (!w.empty()) {
                --budget;
                if (eng.isTrivial(imageOfWord(w, j)).verdict == Verdict::Yes &&
                    fineEng.isTrivial(w).verdict == Verdict::No)
                    return Tri::no("kernel witness " + formatWord(w));
            }
            if (static_cast<int>(w.size()) >= limits_.wordBound) continue;
            for (int g = 0; g < n; ++g)
                for (int sign : {1, -1}) {
                    if (!w.letters.empty() && w.letters.back() == -sign * (g + 1)) continue;
                    frontier.push_back(w * GroupWord::generator(g, sign));
                }
        }
        return Tri::unknown("no kernel witness within bound " + std::to_string(limits_.wordBound));
    }

    // is the pair (x, y) in E_i joined by some E_i-short thread?
    Tri pairJoinable(int x, int y, int i, bool uniqueClasses) const {
        // the forest-path class; when the finest group is trivial in this
        // component it is the only class, so its verdict is exact
        Tri forest = isEShort(Thread{x, y, GroupWord::identity(), {}}, i);
        if (forest.verdict == Verdict::Yes || uniqueClasses) return forest;
        ShortClassSearch s = shortClasses(x, y, i, 1);
        if (!s.classes.empty())
            return Tri::yes("class " + formatWord(s.classes.front()) +
                            " joins the pair within the entourage");
        return Tri::unknown(s.sawUnknown ? "shortness undecided within the search budget"
                                         : "class enumeration inconclusive for the pair");
    }

    // literal form at truncation: j = finest joins every level i when the
    // engine certifies the one-step threads short
    Tri truncatedJoinability() const {
        const int k = levelCount();
        for (int i = 1; i <= k; ++i)
            for (const auto& [x, y] : tower_.level(k).pairs) {
                Tri r = isEShort(Thread{x, y, pres_.back().wordOfPointSeq({x, y}), {}}, i);
                if (r.verdict != Verdict::Yes)
                    return Tri{r.verdict,
                               "one-step thread (" + std::to_string(x) + "," + std::to_string(y) +
                                   ") not certified short at level " + std::to_string(i),
                               {},
                               {}};
            }
        return Tri::yes("the finest level joins every level's pairs (truncated form)");
    }

    GpLimits limits_;
    ScaleTower tower_;
    int basepoint_ = 0;
    bool restricted_ = false;
    std::vector<int> pointOrig_;
    std::vector<Presentation> pres_;
    std::vector<WordEngine> eng_;
    std::vector<std::vector<GroupWord>> a_;     // [level-1][point]
    std::vector<std::vector<GroupWord>> phi_;   // [level-1][fine generator]
    std::vector<BondingHom> projections_;       // finest -> each coarser level
};

inline CechGroup cechGroup(const ScaleTower& tower, int basepoint, GpLimits limits = {}) {
    return CechGroup(tower, basepoint, limits);
}

} // namespace unicover
