#pragma once

// Mechanical checkers for the covering-map axioms on tower maps, and the
// classification verdict built from them.
//
// Every checker is a finite game on the towers, so verdicts are exact except
// where a fiber blow-up forces an honest Unknown. Universal quantifiers over
// chains are decided by reachability closures: the chain-lifting clause runs
// a subset game (which fiber points can carry the lift after this prefix),
// approximate uniqueness runs a product game over simultaneous lifts. Fail
// reports carry the offending chain data and replay deterministically.
//
// Where a clause reads "there is an entourage of the target", the search
// ranges over tower levels only; levels form the basis of the structure, so
// this is sufficient for basis statements, and every trace records it.

#include <json.hpp>

#include "cover.hpp"

namespace unicover {

using json = nlohmann::ordered_json;

enum class ReportVerdict { Pass, Fail, Unknown };

inline const char* reportVerdictName(ReportVerdict v) {
    switch (v) {
        case ReportVerdict::Pass: return "Pass";
        case ReportVerdict::Fail: return "Fail";
        default: return "Unknown";
    }
}

struct Report {
    std::string check;
    ReportVerdict verdict = ReportVerdict::Unknown;
    json witness;   // structured counterexample data; replayable when Fail
    json trace;     // which exists-levels satisfied which forall-levels
    json bounds;

    bool pass() const { return verdict == ReportVerdict::Pass; }
    bool fail() const { return verdict == ReportVerdict::Fail; }

    json toJson() const {
        json j;
        j["check"] = check;
        j["verdict"] = reportVerdictName(verdict);
        j["witness"] = witness;
        j["trace"] = trace;
        j["bounds"] = bounds;
        return j;
    }
};

namespace detail {

inline std::vector<std::vector<int>> levelAdjacency(const ScaleTower& tw, int i) {
    std::vector<std::vector<int>> nbr(static_cast<size_t>(tw.pointCount()));
    for (const auto& [a, b] : tw.level(i).pairs) {
        nbr[static_cast<size_t>(a)].push_back(b);
        nbr[static_cast<size_t>(b)].push_back(a);
    }
    return nbr;
}

inline std::vector<std::vector<int>> fibersOf(const TowerMap& f) {
    std::vector<std::vector<int>> fiber(static_cast<size_t>(f.target.pointCount()));
    for (int x = 0; x < f.source.pointCount(); ++x)
        fiber[static_cast<size_t>(f.apply(x))].push_back(x);
    return fiber;
}

constexpr int kMaxFiberForSubsetGame = 12;

// The lifting game for one (lift level i, image level j) choice: a chain over
// the target level j is lifted greedily while tracking the full set of fiber
// points the lift could occupy. The adversary wins (lifting fails) iff some
// image step empties that set.
struct GameWitness {
    int startX = -1;
    std::vector<int> chain;   // target points; the last step is the stuck one
};

inline std::optional<GameWitness> chainLiftGame(const TowerMap& f, int i, int j,
                                                const std::vector<std::vector<int>>& fiber) {
    const auto nbrY = levelAdjacency(f.target, j);
    const Entourage& Ei = f.source.level(i);
    using Key = std::pair<int, std::vector<int>>;
    for (int x = 0; x < f.source.pointCount(); ++x) {
        std::map<Key, int> id;
        std::vector<Key> states;
        std::vector<std::pair<int, int>> parent;   // (state, via target point)
        Key start{f.apply(x), {x}};
        id[start] = 0;
        states.push_back(start);
        parent.emplace_back(-1, -1);
        for (size_t q = 0; q < states.size(); ++q) {
            const auto [y, A] = states[q];
            for (int yy : nbrY[static_cast<size_t>(y)]) {
                std::vector<int> B;
                for (int cand : fiber[static_cast<size_t>(yy)])
                    for (int a : A)
                        if (a == cand || Ei.contains(a, cand)) {
                            B.push_back(cand);
                            break;
                        }
                if (B.empty()) {
                    GameWitness w;
                    w.startX = x;
                    std::vector<int> rev{yy};
                    for (int s = static_cast<int>(q); s >= 0; s = parent[static_cast<size_t>(s)].first)
                        rev.push_back(states[static_cast<size_t>(s)].first);
                    w.chain.assign(rev.rbegin(), rev.rend());
                    return w;
                }
                Key next{yy, std::move(B)};
                if (id.emplace(next, static_cast<int>(states.size())).second) {
                    states.push_back(next);
                    parent.emplace_back(static_cast<int>(q), yy);
                }
            }
        }
    }
    return std::nullopt;
}

// replay: rerun the subset automaton on the witness chain; true iff it
// reproduces the stuck step
inline bool replayChainLiftWitness(const TowerMap& f, int i, const GameWitness& w) {
    const auto fiber = fibersOf(f);
    const Entourage& Ei = f.source.level(i);
    if (w.chain.empty() || f.apply(w.startX) != w.chain.front()) return false;
    std::vector<int> A{w.startX};
    for (size_t t = 0; t + 1 < w.chain.size(); ++t) {
        std::vector<int> B;
        for (int cand : fiber[static_cast<size_t>(w.chain[t + 1])])
            for (int a : A)
                if (a == cand || Ei.contains(a, cand)) {
                    B.push_back(cand);
                    break;
                }
        if (B.empty()) return t + 2 == w.chain.size();   // stuck exactly at the end
        A = std::move(B);
    }
    return false;
}

} // namespace detail

// clause (a): every target level absorbs the image of some source level;
// clause (b): every source level's image absorbs some target level
inline Report checkGeneratesStructure(const TowerMap& f) {
    f.validateOrThrow();
    Report rep;
    rep.check = "generates-structure";
    rep.trace["quantifiers"] = "exists searches tower levels (basis) from the coarse end";
    json ta = json::array(), tb = json::array();
    std::optional<json> firstFail;
    for (int j = 1; j <= f.target.levelCount(); ++j) {
        auto i = f.continuityLevelFor(j);
        ta.push_back({{"target", j}, {"source", i ? json(*i) : json(nullptr)}});
        if (!i && !firstFail) {
            json w;
            w["clause"] = "a";
            w["target"] = j;
            auto img = f.imagePairs(f.source.levelCount());
            for (const auto& [a, b] : img)
                if (!f.target.level(j).contains(a, b)) {
                    w["pair"] = {a, b};
                    break;
                }
            firstFail = w;
        }
    }
    // F_j contains the full diagonal of the target, so F_j ⊆ f(E_i) already
    // forces every target point to be attained
    std::optional<int> unattained;
    {
        std::vector<char> hit(static_cast<size_t>(f.target.pointCount()), 0);
        for (int x = 0; x < f.source.pointCount(); ++x) hit[static_cast<size_t>(f.apply(x))] = 1;
        for (size_t y = 0; y < hit.size(); ++y)
            if (!hit[y]) {
                unattained = static_cast<int>(y);
                break;
            }
    }
    for (int i = 1; i <= f.source.levelCount(); ++i) {
        auto img = f.imagePairs(i);
        auto inImage = [&](int a, int b) {
            return a == b ||
                   std::binary_search(img.begin(), img.end(),
                                      std::make_pair(std::min(a, b), std::max(a, b)));
        };
        std::optional<int> found;
        for (int j = 1; j <= f.target.levelCount() && !found && !unattained; ++j) {
            bool ok = true;
            for (const auto& [a, b] : f.target.level(j).pairs)
                if (!inImage(a, b)) {
                    ok = false;
                    break;
                }
            if (ok) found = j;
        }
        tb.push_back({{"source", i}, {"target", found ? json(*found) : json(nullptr)}});
        if (!found && !firstFail) {
            json w;
            w["clause"] = "b";
            w["source"] = i;
            for (const auto& [a, b] : f.target.level(f.target.levelCount()).pairs)
                if (!inImage(a, b)) {
                    w["missingPair"] = {a, b};
                    break;
                }
            if (unattained) w["unattainedPoint"] = *unattained;
            firstFail = w;
        }
    }
    rep.trace["a"] = ta;
    rep.trace["b"] = tb;
    if (firstFail) {
        rep.verdict = ReportVerdict::Fail;
        rep.witness = *firstFail;
    } else {
        rep.verdict = ReportVerdict::Pass;
    }
    return rep;
}

// for each lift level i, some target level j must make every j-chain from
// f(x) liftable to an i-chain from x, for every x
inline Report checkChainLifting(const TowerMap& f) {
    f.validateOrThrow();
    Report rep;
    rep.check = "chain-lifting";
    const auto fiber = detail::fibersOf(f);
    size_t maxFiber = 0;
    for (const auto& fb : fiber) maxFiber = std::max(maxFiber, fb.size());
    rep.bounds["subsetStates"] = "exact reachability closure";
    rep.bounds["maxFiber"] = maxFiber;
    if (static_cast<int>(maxFiber) > detail::kMaxFiberForSubsetGame) {
        rep.verdict = ReportVerdict::Unknown;
        rep.trace["reason"] = "fiber too large for the subset game";
        return rep;
    }
    json tr = json::array();
    bool allPass = true;
    for (int i = 1; i <= f.source.levelCount(); ++i) {
        std::optional<int> works;
        std::optional<detail::GameWitness> finestWitness;
        json row = json::array();
        for (int j = 1; j <= f.target.levelCount(); ++j) {
            auto w = detail::chainLiftGame(f, i, j, fiber);
            row.push_back(!w.has_value());
            if (!w && !works) works = j;
            if (w && j == f.target.levelCount()) finestWitness = w;
        }
        tr.push_back({{"forall", i},
                      {"exists", works ? json(*works) : json(nullptr)},
                      {"perTarget", row}});
        if (!works) {
            allPass = false;
            if (finestWitness && rep.witness.is_null()) {
                rep.witness["liftLevel"] = i;
                rep.witness["imageLevel"] = f.target.levelCount();
                rep.witness["startX"] = finestWitness->startX;
                rep.witness["imageChain"] = finestWitness->chain;
            }
        }
    }
    rep.trace["levels"] = tr;
    rep.verdict = allPass ? ReportVerdict::Pass : ReportVerdict::Fail;
    return rep;
}

// coarsest level on which distinct related points are separated by f; every
// finer level inherits transversality by nesting
inline std::optional<int> findTransverseEntourage(const TowerMap& f) {
    for (int i = 1; i <= f.source.levelCount(); ++i) {
        bool ok = true;
        for (const auto& [a, b] : f.source.level(i).pairs)
            if (f.apply(a) == f.apply(b)) {
                ok = false;
                break;
            }
        if (ok) return i;
    }
    return std::nullopt;
}

inline Report checkUniquenessOfChainLifts(const TowerMap& f) {
    f.validateOrThrow();
    Report rep;
    rep.check = "uniqueness-of-chain-lifts";
    auto lvl = findTransverseEntourage(f);
    json per = json::array();
    for (int i = 1; i <= f.source.levelCount(); ++i) {
        bool ok = true;
        for (const auto& [a, b] : f.source.level(i).pairs)
            if (f.apply(a) == f.apply(b)) { ok = false; break; }
        per.push_back(ok);
    }
    rep.trace["transversePerLevel"] = per;
    if (lvl) {
        rep.verdict = ReportVerdict::Pass;
        rep.trace["transverseLevel"] = *lvl;
    } else {
        rep.verdict = ReportVerdict::Fail;
        for (const auto& [a, b] : f.source.level(f.source.levelCount()).pairs)
            if (f.apply(a) == f.apply(b)) {
                rep.witness["fiberPair"] = {a, b};
                rep.witness["level"] = f.source.levelCount();
                break;
            }
    }
    return rep;
}

// any two E_{i'}-chains from the same point with identical images must stay
// E_i-close; decided by the product game over simultaneous lifts
inline Report checkApproxUniqueness(const TowerMap& f) {
    f.validateOrThrow();
    Report rep;
    rep.check = "approximate-uniqueness";
    const int n = f.source.pointCount();
    rep.bounds["declaredChainBound"] = 2 * n;
    rep.bounds["method"] = "product reachability (all chain lengths)";
    json tr = json::array();
    bool allPass = true;
    for (int i = 1; i <= f.source.levelCount(); ++i) {
        std::optional<int> works;
        json row = json::array();
        std::optional<json> finestWitness;
        for (int ip = i; ip <= f.source.levelCount(); ++ip) {
            const auto nbr = detail::levelAdjacency(f.source, ip);
            const Entourage& Ei = f.source.level(i);
            std::optional<json> bad;
            std::vector<std::vector<int>> id(static_cast<size_t>(n),
                                             std::vector<int>(static_cast<size_t>(n), -1));
            std::vector<std::pair<int, int>> states;
            std::vector<int> parent;
            auto push = [&](int a, int b, int par) {
                if (id[static_cast<size_t>(a)][static_cast<size_t>(b)] >= 0) return;
                id[static_cast<size_t>(a)][static_cast<size_t>(b)] = static_cast<int>(states.size());
                states.emplace_back(a, b);
                parent.push_back(par);
            };
            for (int x = 0; x < n && !bad; ++x) push(x, x, -1);
            for (size_t q = 0; q < states.size() && !bad; ++q) {
                auto [a, b] = states[q];
                auto stepsFrom = [&](int p) {
                    std::vector<int> out{p};
                    out.insert(out.end(), nbr[static_cast<size_t>(p)].begin(),
                               nbr[static_cast<size_t>(p)].end());
                    return out;
                };
                for (int aa : stepsFrom(a)) {
                    for (int bb : stepsFrom(b)) {
                        if (f.apply(aa) != f.apply(bb)) continue;
                        if (aa != bb && !Ei.contains(aa, bb)) {
                            json w;
                            w["divergedPair"] = {aa, bb};
                            std::vector<int> ca{aa}, cb{bb};
                            for (int s = static_cast<int>(q); s >= 0;
                                 s = parent[static_cast<size_t>(s)]) {
                                ca.push_back(states[static_cast<size_t>(s)].first);
                                cb.push_back(states[static_cast<size_t>(s)].second);
                            }
                            std::reverse(ca.begin(), ca.end());
                            std::reverse(cb.begin(), cb.end());
                            w["chainA"] = ca;
                            w["chainB"] = cb;
                            w["closenessLevel"] = i;
                            w["chainLevel"] = ip;
                            bad = w;
                            break;
                        }
                        push(aa, bb, static_cast<int>(q));
                    }
                    if (bad) break;
                }
            }
            row.push_back(!bad.has_value());
            if (!bad && !works) works = ip;
            if (bad && ip == f.source.levelCount()) finestWitness = bad;
        }
        tr.push_back({{"forall", i},
                      {"exists", works ? json(*works) : json(nullptr)},
                      {"perFiner", row}});
        if (!works) {
            allPass = false;
            if (finestWitness && rep.witness.is_null()) rep.witness = *finestWitness;
        }
    }
    rep.trace["levels"] = tr;
    rep.verdict = allPass ? ReportVerdict::Pass : ReportVerdict::Fail;
    return rep;
}

// threads of the target from f(x) must lift from x. Pass is certified by the
// finest-level lifting game (then every realizing chain lifts stepwise);
// Fail is certified by a target point reachable from f(x) with empty fiber
// (every thread ending there is unliftable); anything else stays Unknown.
inline Report checkGeneralizedPathLifting(const TowerMap& f, int wordBound = 8) {
    f.validateOrThrow();
    Report rep;
    rep.check = "generalized-path-lifting";
    rep.bounds["wordBound"] = wordBound;
    const auto fiber = detail::fibersOf(f);
    const int k = f.target.levelCount();
    const auto nbrY = detail::levelAdjacency(f.target, k);
    for (int x = 0; x < f.source.pointCount(); ++x) {
        std::vector<int> prev(static_cast<size_t>(f.target.pointCount()), -2);
        std::vector<int> queue{f.apply(x)};
        prev[static_cast<size_t>(f.apply(x))] = -1;
        for (size_t q = 0; q < queue.size(); ++q)
            for (int yy : nbrY[static_cast<size_t>(queue[q])])
                if (prev[static_cast<size_t>(yy)] == -2) {
                    prev[static_cast<size_t>(yy)] = queue[q];
                    queue.push_back(yy);
                }
        for (int y = 0; y < f.target.pointCount(); ++y)
            if (prev[static_cast<size_t>(y)] != -2 && fiber[static_cast<size_t>(y)].empty()) {
                rep.verdict = ReportVerdict::Fail;
                rep.witness["startX"] = x;
                std::vector<int> path;
                for (int p = y; p >= 0; p = prev[static_cast<size_t>(p)]) path.push_back(p);
                std::reverse(path.begin(), path.end());
                rep.witness["unliftableTargetChain"] = path;
                rep.witness["emptyFiberPoint"] = y;
                return rep;
            }
    }
    size_t maxFiber = 0;
    for (const auto& fb : fiber) maxFiber = std::max(maxFiber, fb.size());
    if (static_cast<int>(maxFiber) > detail::kMaxFiberForSubsetGame) {
        rep.verdict = ReportVerdict::Unknown;
        rep.trace["reason"] = "fiber too large for the subset game";
        return rep;
    }
    auto w = detail::chainLiftGame(f, f.source.levelCount(), k, fiber);
    if (!w) {
        rep.verdict = ReportVerdict::Pass;
        rep.trace["certificate"] =
            "finest-level chains lift stepwise, so every realizing chain of a thread lifts";
    } else {
        rep.verdict = ReportVerdict::Unknown;
        rep.trace["reason"] = "some realizing chain is stuck but other representatives may lift";
        rep.trace["stuckImageChain"] = w->chain;
        rep.trace["startX"] = w->startX;
    }
    return rep;
}

enum class MapClass { UniformCovering, GeneralizedUniformCovering, Neither, Undetermined };

inline const char* mapClassName(MapClass c) {
    switch (c) {
        case MapClass::UniformCovering: return "UniformCovering";
        case MapClass::GeneralizedUniformCovering: return "GeneralizedUniformCovering";
        case MapClass::Neither: return "Neither";
        default: return "Undetermined";
    }
}

struct Classification {
    MapClass cls = MapClass::Undetermined;
    std::vector<Report> bundle;

    const Report& sub(const std::string& name) const {
        for (const auto& r : bundle)
            if (r.check == name) return r;
        throw std::out_of_range("no sub-report " + name);
    }

    json toJson() const {
        json j;
        j["class"] = mapClassName(cls);
        j["reports"] = json::array();
        for (const auto& r : bundle) j["reports"].push_back(r.toJson());
        return j;
    }
};

inline Classification classifyMap(const TowerMap& f, int wordBound = 8) {
    Classification out;
    out.bundle.push_back(checkGeneratesStructure(f));
    out.bundle.push_back(checkChainLifting(f));
    out.bundle.push_back(checkUniquenessOfChainLifts(f));
    out.bundle.push_back(checkApproxUniqueness(f));
    out.bundle.push_back(checkGeneralizedPathLifting(f, wordBound));
    const Report& gen = out.bundle[0];
    const Report& chain = out.bundle[1];
    const Report& uniq = out.bundle[2];
    const Report& approx = out.bundle[3];
    const Report& gpl = out.bundle[4];
    if (gen.pass() && chain.pass() && uniq.pass())
        out.cls = MapClass::UniformCovering;
    else if (gen.pass() && chain.pass() && approx.pass() && gpl.pass())
        out.cls = MapClass::GeneralizedUniformCovering;
    else if (gen.fail() || chain.fail() ||
             (uniq.fail() && (approx.fail() || gpl.fail())))
        out.cls = MapClass::Neither;
    else
        out.cls = MapClass::Undetermined;
    return out;
}

// ===== map factories =====

inline TowerMap identityMap(const ScaleTower& tw) {
    std::vector<int> v(static_cast<size_t>(tw.pointCount()));
    for (size_t p = 0; p < v.size(); ++p) v[p] = static_cast<int>(p);
    return TowerMap{tw, tw, std::move(v)};
}

inline ScaleTower onePointTower(int levelCount, const std::vector<std::optional<Rational>>& scales) {
    ScaleTower t;
    t.labels = {"pt"};
    for (int i = 0; i < levelCount; ++i) t.levels.push_back(Entourage::fromPairs({}));
    t.scales = scales;
    return t;
}

inline TowerMap collapseMap(const ScaleTower& tw) {
    std::vector<int> v(static_cast<size_t>(tw.pointCount()), 0);
    return TowerMap{tw, onePointTower(tw.levelCount(), tw.scales), std::move(v)};
}

inline TowerMap composeMaps(const TowerMap& g, const TowerMap& f) {
    if (f.target.labels != g.source.labels) throw TowerError("composeMaps: middle towers differ");
    std::vector<int> v(static_cast<size_t>(f.source.pointCount()));
    for (size_t p = 0; p < v.size(); ++p) v[p] = g.apply(f.apply(static_cast<int>(p)));
    return TowerMap{f.source, g.target, std::move(v)};
}

// projection of a cover onto the tower the cover was requested for; differs
// from cv.projection when the base was restricted to the basepoint component
inline TowerMap fullProjection(const CoverSpace& cv, const ScaleTower& original) {
    std::vector<int> v(static_cast<size_t>(cv.total.pointCount()));
    for (size_t tp = 0; tp < v.size(); ++tp)
        v[tp] = cv.group.originalPoint(cv.basePointOf(static_cast<int>(tp)));
    return TowerMap{cv.total, original, std::move(v)};
}

} // namespace unicover
