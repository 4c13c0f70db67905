#pragma once

// Covering spaces GP(X,x0)/H realized as scale towers.
//
// Points of the total space are (base point, coset) pairs, cosets coming
// from enumeration of H at the finest presentation. A level-i pair of the
// total space connects (u,c) to (v, c·w) where w is the canonical advance
// word of the base edge (u,v) — the one-step class when (u,v) is a finest
// pair, the forest-path class otherwise — and only when the engine certifies
// that connecting class E_i-short. That shortness gate is the quotient of
// the E* entourage; pairs whose class is short at a finer level are
// inherited downward, which keeps nesting structural. One consequence is
// honest incompleteness: a base pair whose canonical class is not short at
// a level simply has no total pairs there (the gapped-circle bridge), and a
// class short only up to a different coset advance than the canonical one
// is not materialized.

#include <variant>

#include "gp.hpp"

namespace unicover {

struct TowerMap {
    ScaleTower source;
    ScaleTower target;
    std::vector<int> vertexMap;

    void validateOrThrow() const {
        source.validateOrThrow();
        target.validateOrThrow();
        if (static_cast<int>(vertexMap.size()) != source.pointCount())
            throw TowerError("TowerMap: vertex map size mismatch");
        for (int v : vertexMap)
            if (v < 0 || v >= target.pointCount())
                throw TowerError("TowerMap: vertex map image out of range");
    }

    int apply(int p) const { return vertexMap[static_cast<size_t>(p)]; }

    // image of a source level as a pair set on the target
    std::vector<std::pair<int, int>> imagePairs(int i) const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [a, b] : source.level(i).pairs) {
            int fa = apply(a), fb = apply(b);
            if (fa != fb) out.emplace_back(std::min(fa, fb), std::max(fa, fb));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // coarsest source level whose image sits inside target level j
    std::optional<int> continuityLevelFor(int j) const {
        for (int i = 1; i <= source.levelCount(); ++i) {
            bool ok = true;
            for (const auto& [a, b] : imagePairs(i))
                if (!target.level(j).contains(a, b)) {
                    ok = false;
                    break;
                }
            if (ok) return i;
        }
        return std::nullopt;
    }

    bool isUniformlyContinuous() const {
        for (int j = 1; j <= target.levelCount(); ++j)
            if (!continuityLevelFor(j)) return false;
        return true;
    }
};

struct CoverSpace {
    CechGroup group;    // base-side machinery (presentations, engines, images)
    ScaleTower base;    // = group.tower(), possibly restricted to the basepoint component
    ScaleTower total;
    TowerMap projection;   // total -> base, first coordinate
    SubgroupSpec H;
    CosetTable cosets;
    int basepoint = 0;        // base id
    int basepointFiber = 0;   // total id of (basepoint, trivial coset)
    int cosetCount = 0;
    // certified-short classes per level (1-based) and base pair (u < v),
    // oriented u -> v; the total pairs are exactly their coset translates
    std::vector<std::map<std::pair<int, int>, std::vector<GroupWord>>> levelClasses;
    // first certified class per base pair, from the finest level carrying it
    std::map<std::pair<int, int>, GroupWord> advance;
    // pairs left undecided by the search (non-strict builds)
    std::vector<std::tuple<int, int, int>> unknownPairs;

    int totalId(int basePt, int coset) const { return basePt * cosetCount + coset; }
    int basePointOf(int tp) const { return tp / cosetCount; }
    int cosetOf(int tp) const { return tp % cosetCount; }

    GroupWord advanceWord(int u, int v) const {
        auto it = advance.find({std::min(u, v), std::max(u, v)});
        if (it == advance.end()) throw ChainError("advanceWord: pair never related in the base");
        return u < v ? it->second : it->second.inverse();
    }
};

struct CoverBuild {
    enum class Status { Ok, Overflow, UnknownShortness };
    Status status = Status::Ok;
    std::optional<CoverSpace> cover;
    long long cosetsDefined = 0;                          // Overflow diagnostics
    std::vector<std::tuple<int, int, int>> unknownPairs;  // (level, u, v)
};

inline CoverBuild buildCover(const ScaleTower& tower, int basepoint, const SubgroupSpec& H,
                             int maxCosets = 10000, bool strict = true, GpLimits limits = {},
                             int maxClassesPerPair = 4) {
    CoverBuild out;
    CechGroup G(tower, basepoint, limits);
    const int k = G.levelCount();
    const Presentation& fine = G.presentation(k);
    for (const auto& h : H.generators)
        if (h.maxGeneratorIndex() >= fine.generatorCount())
            throw WordError("buildCover: subgroup word outside the finest generator range");

    CosetTable ct = cosetEnumerate(fine.generatorCount(), fine.relators, H.generators, maxCosets);
    if (!ct.closed) {
        out.status = CoverBuild::Status::Overflow;
        out.cosetsDefined = ct.definedTotal;
        return out;
    }
    const int m = ct.cosetCount;
    const ScaleTower base = G.tower();
    const int bp = G.basepoint();
    const bool uniqueClasses = fine.generatorCount() == 0;

    // short classes per pair and level, inherited fine -> coarse (shortness
    // is monotone under coarsening) and extended by fresh searches
    std::vector<std::map<std::pair<int, int>, std::vector<GroupWord>>> levelClasses(
        static_cast<size_t>(k));
    std::map<std::pair<int, int>, std::vector<GroupWord>> finer;
    for (int i = k; i >= 1; --i) {
        std::map<std::pair<int, int>, std::vector<GroupWord>> here;
        for (const auto& [u, v] : base.level(i).pairs) {
            std::vector<GroupWord> cls;
            std::set<std::vector<int>> seenW;
            if (auto f = finer.find({u, v}); f != finer.end())
                for (const auto& w : f->second)
                    if (seenW.insert(w.letters).second) cls.push_back(w);
            if (uniqueClasses) {
                // a trivial finest group has a single class per pair
                if (cls.empty() &&
                    G.isEShort(Thread{u, v, GroupWord::identity(), {}}, i).verdict == Verdict::Yes)
                    cls.push_back(GroupWord::identity());
            } else if (static_cast<int>(cls.size()) < maxClassesPerPair) {
                auto s = G.shortClasses(u, v, i, maxClassesPerPair);
                for (const auto& w : s.classes)
                    if (seenW.insert(w.letters).second) cls.push_back(w);
                if (cls.empty()) out.unknownPairs.emplace_back(i, u, v);
            }
            if (!cls.empty()) here[{u, v}] = std::move(cls);
        }
        levelClasses[static_cast<size_t>(i - 1)] = here;
        finer = std::move(here);
    }
    if (strict && !out.unknownPairs.empty()) {
        out.status = CoverBuild::Status::UnknownShortness;
        return out;
    }

    std::map<std::pair<int, int>, GroupWord> advance;
    for (int i = k; i >= 1; --i)
        for (const auto& [pr, cls] : levelClasses[static_cast<size_t>(i - 1)])
            advance.emplace(pr, cls.front());

    ScaleTower total;
    for (int p = 0; p < base.pointCount(); ++p)
        for (int c = 0; c < m; ++c)
            total.labels.push_back(base.labels[static_cast<size_t>(p)] + "|" + std::to_string(c));
    for (int i = 1; i <= k; ++i) {
        std::vector<std::pair<int, int>> ps;
        for (const auto& [pr, cls] : levelClasses[static_cast<size_t>(i - 1)]) {
            std::set<std::vector<int>> traces;   // classes acting alike give the same pairs
            for (const auto& w : cls) {
                std::vector<int> tr(static_cast<size_t>(m));
                for (int c = 0; c < m; ++c) tr[static_cast<size_t>(c)] = ct.trace(c, w);
                if (!traces.insert(tr).second) continue;
                for (int c = 0; c < m; ++c)
                    ps.emplace_back(pr.first * m + c, pr.second * m + tr[static_cast<size_t>(c)]);
            }
        }
        total.levels.push_back(Entourage::fromPairs(std::move(ps)));
    }
    total.scales = base.scales;
    total.validateOrThrow();

    std::vector<int> vmap(static_cast<size_t>(total.pointCount()));
    for (size_t tp = 0; tp < vmap.size(); ++tp) vmap[tp] = static_cast<int>(tp) / m;

    out.cover = CoverSpace{std::move(G),
                           base,
                           total,
                           TowerMap{total, base, std::move(vmap)},
                           H,
                           std::move(ct),
                           bp,
                           bp * m,
                           m,
                           std::move(levelClasses),
                           std::move(advance),
                           out.unknownPairs};
    return out;
}

struct ChainLift {
    Tri status;
    Chain lift{1, {}};
    bool unique = true;       // no step admitted an alternative at the level
    int stuckAt = -1;         // chain position where no admissible step existed
};

inline ChainLift liftChain(const CoverSpace& cv, const Chain& c, int startTotal) {
    if (c.seq.empty()) throw ChainError("liftChain: empty chain");
    if (!isChain(cv.base, c)) throw ChainError("liftChain: not a base chain");
    if (cv.basePointOf(startTotal) != c.start())
        throw ChainError("liftChain: start does not project to the chain's first point");
    ChainLift out;
    out.lift.level = c.level;
    out.lift.seq.push_back(startTotal);
    const Entourage& lvl = cv.total.level(c.level);
    for (size_t t = 0; t + 1 < c.seq.size(); ++t) {
        int u = c.seq[t], v = c.seq[t + 1];
        int cur = out.lift.seq.back();
        if (u == v) {
            out.lift.seq.push_back(cur);
            continue;
        }
        std::vector<int> nexts;
        for (int cc = 0; cc < cv.cosetCount; ++cc)
            if (lvl.contains(cur, cv.totalId(v, cc))) nexts.push_back(cv.totalId(v, cc));
        if (nexts.empty()) {
            out.status = Tri::no("no admissible step over (" + std::to_string(u) + "," +
                                 std::to_string(v) + ") at level " + std::to_string(c.level));
            out.stuckAt = static_cast<int>(t);
            return out;
        }
        if (nexts.size() > 1) out.unique = false;
        out.lift.seq.push_back(nexts.front());
    }
    out.status = Tri::yes("stepwise lift");
    return out;
}

struct ThreadLift {
    Tri status;
    Chain totalChain{1, {}};
    int endTotal = -1;
    Thread totalThread;   // wrapped over the total space's finest presentation
};

inline ThreadLift liftThread(const CoverSpace& cv, const Thread& t, int startTotal) {
    if (cv.basePointOf(startTotal) != t.start)
        throw ChainError("liftThread: start does not project to the thread's start");
    ThreadLift out;
    Chain rep = cv.group.realizeChain(t);
    ChainLift cl = liftChain(cv, rep, startTotal);
    out.status = cl.status;
    if (cl.status.verdict != Verdict::Yes) return out;
    out.totalChain = cl.lift;
    out.endTotal = cl.lift.end();
    Presentation totalFine = presentPi1(cv.total, cv.total.levelCount(), cv.basepointFiber);
    out.totalThread =
        Thread{cl.lift.start(), cl.lift.end(), totalFine.wordOfPointSeq(cl.lift.seq), {}};
    return out;
}

// generators of the projection image of the total space's finest-level group
inline SubgroupSpec imageSubgroup(const CoverSpace& cv) {
    Presentation totalFine = presentPi1(cv.total, cv.total.levelCount(), cv.basepointFiber);
    const Presentation& baseFine = cv.group.presentation(cv.group.levelCount());
    SubgroupSpec out;
    out.name = "image(" + (cv.H.name.empty() ? std::string("H") : cv.H.name) + ")";
    int baseComp = totalFine.componentOf[static_cast<size_t>(cv.basepointFiber)];
    for (auto [a, b] : totalFine.generatorEdges) {
        if (totalFine.componentOf[static_cast<size_t>(a)] != baseComp) continue;
        std::vector<int> seq = totalFine.forestPath(cv.basepointFiber, a);
        seq.push_back(b);
        std::vector<int> back = totalFine.forestPath(b, cv.basepointFiber);
        seq.insert(seq.end(), back.begin() + 1, back.end());
        std::vector<int> baseSeq;
        baseSeq.reserve(seq.size());
        for (int tp : seq) baseSeq.push_back(cv.basePointOf(tp));
        GroupWord w = baseFine.wordOfPointSeq(baseSeq);
        if (!w.empty()) out.generators.push_back(std::move(w));
    }
    return out;
}

// conjugacy of finite-index subgroups of a free group, by rebasing one coset
// table onto every coset of the other and extending label-preservingly
inline Tri conjugateSubgroups(const CosetTable& t1, const CosetTable& t2) {
    if (!t1.closed || !t2.closed) return Tri::unknown("coset table not closed");
    if (t1.cosetCount != t2.cosetCount)
        return Tri::no("indices differ: " + std::to_string(t1.cosetCount) + " vs " +
                       std::to_string(t2.cosetCount));
    const int n = t1.cosetCount;
    const int cols = 2 * t1.generatorCount;
    for (int c = 0; c < n; ++c) {
        std::vector<int> map(static_cast<size_t>(n), -1), used(static_cast<size_t>(n), 0);
        map[0] = c;
        used[static_cast<size_t>(c)] = 1;
        std::vector<int> queue{0};
        bool ok = true;
        for (size_t q = 0; q < queue.size() && ok; ++q) {
            int a = queue[q], b = map[static_cast<size_t>(a)];
            for (int col = 0; col < cols && ok; ++col) {
                int ta = t1.table[static_cast<size_t>(a)][static_cast<size_t>(col)];
                int tb = t2.table[static_cast<size_t>(b)][static_cast<size_t>(col)];
                int& slot = map[static_cast<size_t>(ta)];
                if (slot < 0) {
                    if (used[static_cast<size_t>(tb)]) {
                        ok = false;
                        break;
                    }
                    slot = tb;
                    used[static_cast<size_t>(tb)] = 1;
                    queue.push_back(ta);
                } else if (slot != tb) {
                    ok = false;
                }
            }
        }
        if (ok && static_cast<int>(queue.size()) == n)
            return Tri::yes("coset tables isomorphic after rebasing to coset " + std::to_string(c));
    }
    return Tri::no("no rebasing yields a coset-table isomorphism");
}

inline Tri areCoversEquivalent(const CoverSpace& a, const CoverSpace& b, int maxCosets = 10000) {
    if (a.base.labels != b.base.labels || a.basepoint != b.basepoint)
        throw TowerError("areCoversEquivalent: different bases");
    const WordEngine& eng = a.group.engine(a.group.levelCount());
    if (!eng.tietze().freeAfter())
        return Tri::unknown("finest-level group not free after reduction");
    auto tableOf = [&](const CoverSpace& cv) {
        std::vector<GroupWord> gens;
        for (const auto& g : imageSubgroup(cv).generators) gens.push_back(eng.tietze().map(g));
        return cosetEnumerate(eng.tietze().aliveCount(), {}, gens, maxCosets);
    };
    CosetTable t1 = tableOf(a), t2 = tableOf(b);
    if (!t1.closed || !t2.closed) return Tri::unknown("image subgroup index beyond the coset cap");
    return conjugateSubgroups(t1, t2);
}

// factor map between covers of the same base for nested subgroups
// H_fine ⊆ H_coarse: (p, c) ↦ (p, coarse coset of c's representative word)
inline TowerMap coverFactorMap(const CoverSpace& finer, const CoverSpace& coarser) {
    if (finer.base.labels != coarser.base.labels || finer.basepoint != coarser.basepoint)
        throw TowerError("coverFactorMap: different bases");
    std::vector<int> vmap(static_cast<size_t>(finer.total.pointCount()));
    for (int p = 0; p < finer.base.pointCount(); ++p)
        for (int c = 0; c < finer.cosetCount; ++c) {
            int cc = coarser.cosets.trace(0, finer.cosets.repWords[static_cast<size_t>(c)]);
            if (cc < 0) throw ChainError("coverFactorMap: representative word does not trace");
            vmap[static_cast<size_t>(finer.totalId(p, c))] = coarser.totalId(p, cc);
        }
    return TowerMap{finer.total, coarser.total, std::move(vmap)};
}

} // namespace unicover
