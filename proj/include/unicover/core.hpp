#pragma once

// Scale towers: a finite point set with a nested descending family of
// entourages, plus the chains and Rips 2-skeletons built on them.
// Level indices are 1-based; level 1 is the coarsest, level k the finest.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unicover {

struct TowerError : std::runtime_error {
    explicit TowerError(const std::string& what) : std::runtime_error(what) {}
};

struct ChainError : std::invalid_argument {
    explicit ChainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised specifically when two chains are compared positionwise but have
// different lengths; that is a caller bug, not a geometric fact.
struct ChainLengthMismatch : ChainError {
    explicit ChainLengthMismatch(const std::string& what) : ChainError(what) {}
};

// ===== exact scale annotations =====

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }
    explicit Rational(long long n) : num(n), den(1) {}

    void normalize() {
        if (den == 0) throw TowerError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    bool operator<=(const Rational& o) const { return *this == o || *this < o; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw TowerError("bad rational literal: " + s);
        }
    }
};

// ===== entourages =====

// Symmetric reflexive relation on point ids. Only off-diagonal pairs are
// stored, canonically sorted with u < v; the diagonal is implicit.
struct Entourage {
    std::vector<std::pair<int, int>> pairs;

    static Entourage fromPairs(std::vector<std::pair<int, int>> raw) {
        Entourage e;
        e.pairs.reserve(raw.size());
        for (auto [a, b] : raw) {
            if (a == b) continue;          // diagonal is implicit
            if (a > b) std::swap(a, b);
            e.pairs.emplace_back(a, b);
        }
        std::sort(e.pairs.begin(), e.pairs.end());
        e.pairs.erase(std::unique(e.pairs.begin(), e.pairs.end()), e.pairs.end());
        return e;
    }

    bool contains(int u, int v) const {
        if (u == v) return true;
        if (u > v) std::swap(u, v);
        return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(u, v));
    }

    // true when every off-diagonal pair of this entourage also lies in outer
    bool subsetOf(const Entourage& outer) const {
        for (const auto& p : pairs)
            if (!outer.contains(p.first, p.second)) return false;
        return true;
    }

    std::optional<std::pair<int, int>> firstNotIn(const Entourage& outer) const {
        for (const auto& p : pairs)
            if (!outer.contains(p.first, p.second)) return p;
        return std::nullopt;
    }

    size_t size() const { return pairs.size(); }
    bool operator==(const Entourage& o) const { return pairs == o.pairs; }
};

// ===== scale towers =====

struct ScaleTower {
    std::vector<std::string> labels;                 // one per point, index = id
    std::vector<Entourage> levels;                   // coarsest first
    std::vector<std::optional<Rational>> scales;     // optional annotation per level

    int pointCount() const { return static_cast<int>(labels.size()); }
    int levelCount() const { return static_cast<int>(levels.size()); }

    // 1-based: level(1) is the coarsest, level(levelCount()) the finest
    const Entourage& level(int i) const {
        if (i < 1 || i > levelCount()) throw TowerError("level index out of range: " + std::to_string(i));
        return levels[static_cast<size_t>(i - 1)];
    }
    int finestLevel() const { return levelCount(); }

    void checkPoint(int p) const {
        if (p < 0 || p >= pointCount()) throw TowerError("point id out of range: " + std::to_string(p));
    }

    // Validates the descending-nesting invariant and pair ranges.
    // Returns the offending (level, pair) on failure instead of throwing so
    // loaders can report a witness.
    std::optional<std::pair<int, std::pair<int, int>>> nestingViolation() const {
        for (int i = 0; i + 1 < levelCount(); ++i) {
            if (auto w = levels[static_cast<size_t>(i) + 1].firstNotIn(levels[static_cast<size_t>(i)]))
                return std::make_pair(i + 2, *w);
        }
        return std::nullopt;
    }

    void validateOrThrow() const {
        if (labels.empty()) throw TowerError("tower has no points");
        if (levels.empty()) throw TowerError("tower has no levels");
        if (!scales.empty() && scales.size() != levels.size())
            throw TowerError("scale annotations do not match level count");
        for (const auto& lv : levels)
            for (const auto& p : lv.pairs) {
                if (p.first < 0 || p.second >= pointCount())
                    throw TowerError("entourage pair out of range");
            }
        if (auto v = nestingViolation()) {
            throw TowerError("levels not nested: level " + std::to_string(v->first) + " pair (" +
                             std::to_string(v->second.first) + "," + std::to_string(v->second.second) +
                             ") missing from the coarser level");
        }
    }
};

// Builds a tower from a finite metric (full symmetric distance matrix) and a
// strictly descending list of thresholds: level i relates pairs at distance
// <= thresholds[i-1].
inline ScaleTower fromMetric(const std::vector<std::string>& labels,
                             const std::vector<std::vector<double>>& dist,
                             const std::vector<Rational>& thresholds) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw TowerError("fromMetric: no points");
    if (dist.size() != static_cast<size_t>(n)) throw TowerError("fromMetric: matrix size mismatch");
    for (int i = 0; i < n; ++i) {
        if (dist[static_cast<size_t>(i)].size() != static_cast<size_t>(n))
            throw TowerError("fromMetric: matrix row size mismatch");
        if (dist[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0.0)
            throw TowerError("fromMetric: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (dist[static_cast<size_t>(i)][static_cast<size_t>(j)] < 0.0)
                throw TowerError("fromMetric: negative distance");
            if (dist[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                dist[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw TowerError("fromMetric: asymmetric matrix");
        }
    }
    if (thresholds.empty()) throw TowerError("fromMetric: no thresholds");
    for (size_t t = 0; t + 1 < thresholds.size(); ++t)
        if (!(thresholds[t + 1] < thresholds[t]))
            throw TowerError("fromMetric: thresholds must be strictly descending");

    ScaleTower tw;
    tw.labels = labels;
    for (const auto& eps : thresholds) {
        std::vector<std::pair<int, int>> ps;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (dist[static_cast<size_t>(a)][static_cast<size_t>(b)] * static_cast<double>(eps.den) <=
                    static_cast<double>(eps.num))
                    ps.emplace_back(a, b);
        tw.levels.push_back(Entourage::fromPairs(std::move(ps)));
        tw.scales.push_back(eps);
    }
    tw.validateOrThrow();
    return tw;
}

// ===== chains =====

// An E-chain: consecutive points related at a fixed level. Stutters (repeated
// points) are legal since the diagonal belongs to every entourage.
struct Chain {
    int level = 1;
    std::vector<int> seq;

    size_t length() const { return seq.empty() ? 0 : seq.size() - 1; }
    int start() const { return seq.front(); }
    int end() const { return seq.back(); }
};

inline bool isChain(const ScaleTower& tw, const Chain& c) {
    if (c.seq.empty()) return false;
    if (c.level < 1 || c.level > tw.levelCount()) return false;
    const Entourage& e = tw.level(c.level);
    for (int p : c.seq)
        if (p < 0 || p >= tw.pointCount()) return false;
    for (size_t t = 0; t + 1 < c.seq.size(); ++t)
        if (!e.contains(c.seq[t], c.seq[t + 1])) return false;
    return true;
}

inline Chain concatChains(const ScaleTower& tw, const Chain& a, const Chain& b) {
    if (a.level != b.level) throw ChainError("concatChains: level mismatch");
    if (!isChain(tw, a) || !isChain(tw, b)) throw ChainError("concatChains: not chains");
    if (a.end() != b.start()) throw ChainError("concatChains: junction mismatch");
    Chain out;
    out.level = a.level;
    out.seq = a.seq;
    out.seq.insert(out.seq.end(), b.seq.begin() + 1, b.seq.end());
    return out;
}

inline Chain invertChain(const Chain& a) {
    Chain out = a;
    std::reverse(out.seq.begin(), out.seq.end());
    return out;
}

// positionwise E_i-closeness; length mismatch is a distinct caller error
inline bool areChainsEClose(const ScaleTower& tw, const Chain& a, const Chain& b, int i) {
    if (a.seq.size() != b.seq.size())
        throw ChainLengthMismatch("areChainsEClose: chains of different length");
    const Entourage& e = tw.level(i);
    for (size_t t = 0; t < a.seq.size(); ++t)
        if (!e.contains(a.seq[t], b.seq[t])) return false;
    return true;
}

// ===== connectivity =====

// component ids of the level-i relation graph, labelled 0,1,.. by least point id
inline std::vector<int> componentsAtLevel(const ScaleTower& tw, int i) {
    const int n = tw.pointCount();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& p : tw.level(i).pairs) {
        adj[static_cast<size_t>(p.first)].push_back(p.second);
        adj[static_cast<size_t>(p.second)].push_back(p.first);
    }
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        comp[static_cast<size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<size_t>(v)])
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

inline bool isChainConnected(const ScaleTower& tw, int i) {
    auto comp = componentsAtLevel(tw, i);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

// connected at every level; with nested levels this is decided by the finest
inline bool isChainConnectedTower(const ScaleTower& tw) {
    for (int i = 1; i <= tw.levelCount(); ++i)
        if (!isChainConnected(tw, i)) return false;
    return true;
}

// Hausdorff at truncation: the intersection of all levels is the diagonal.
// Returns a witness pair when it fails.
inline std::optional<std::pair<int, int>> hausdorffWitness(const ScaleTower& tw) {
    for (const auto& p : tw.level(tw.levelCount()).pairs) {
        bool everywhere = true;
        for (int i = 1; i < tw.levelCount() && everywhere; ++i)
            everywhere = tw.level(i).contains(p.first, p.second);
        if (everywhere) return p;
    }
    return std::nullopt;
}

inline bool isHausdorffTower(const ScaleTower& tw) { return !hausdorffWitness(tw).has_value(); }

// ===== Rips 2-skeleton =====

// Vertices, edges and triangles of the level-i Rips complex. Dimension stops
// at 2: the edge-path group only sees the 2-skeleton.
struct RipsSkeleton {
    int level = 1;
    int vertexCount = 0;
    std::vector<std::pair<int, int>> edges;                  // sorted, u < v
    std::vector<std::array<int, 3>> triangles;               // sorted, a < b < c
};

inline RipsSkeleton buildSkeleton(const ScaleTower& tw, int i) {
    RipsSkeleton sk;
    sk.level = i;
    sk.vertexCount = tw.pointCount();
    const Entourage& e = tw.level(i);
    sk.edges = e.pairs;
    // adjacency sets for triangle enumeration
    std::vector<std::vector<int>> nbr(static_cast<size_t>(tw.pointCount()));
    for (const auto& p : e.pairs) {
        nbr[static_cast<size_t>(p.first)].push_back(p.second);
        nbr[static_cast<size_t>(p.second)].push_back(p.first);
    }
    for (auto& v : nbr) std::sort(v.begin(), v.end());
    for (const auto& [a, b] : e.pairs) {
        // common neighbours c > b keep triangles canonical (a < b < c)
        const auto& na = nbr[static_cast<size_t>(a)];
        const auto& nb = nbr[static_cast<size_t>(b)];
        size_t ia = 0, ib = 0;
        while (ia < na.size() && ib < nb.size()) {
            if (na[ia] < nb[ib]) ++ia;
            else if (nb[ib] < na[ia]) ++ib;
            else {
                if (na[ia] > b) sk.triangles.push_back({a, b, na[ia]});
                ++ia; ++ib;
            }
        }
    }
    std::sort(sk.triangles.begin(), sk.triangles.end());
    return sk;
}

// ===== derived towers =====

// single-level subtower (used to study one scale in isolation)
inline ScaleTower towerAtLevel(const ScaleTower& tw, int i) {
    ScaleTower out;
    out.labels = tw.labels;
    out.levels = {tw.level(i)};
    if (!tw.scales.empty()) out.scales = {tw.scales[static_cast<size_t>(i - 1)]};
    return out;
}

// induced tower on a subset of points; ids are renumbered in ascending order
inline ScaleTower restrictToPoints(const ScaleTower& tw, const std::vector<int>& keep) {
    std::vector<int> pts = keep;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<int> newId(static_cast<size_t>(tw.pointCount()), -1);
    ScaleTower out;
    for (int p : pts) {
        tw.checkPoint(p);
        newId[static_cast<size_t>(p)] = static_cast<int>(out.labels.size());
        out.labels.push_back(tw.labels[static_cast<size_t>(p)]);
    }
    for (int i = 1; i <= tw.levelCount(); ++i) {
        std::vector<std::pair<int, int>> ps;
        for (const auto& p : tw.level(i).pairs) {
            int a = newId[static_cast<size_t>(p.first)], b = newId[static_cast<size_t>(p.second)];
            if (a >= 0 && b >= 0) ps.emplace_back(a, b);
        }
        out.levels.push_back(Entourage::fromPairs(std::move(ps)));
    }
    out.scales = tw.scales;
    return out;
}

// points of the basepoint's finest-level chain component
inline std::vector<int> finestComponentOf(const ScaleTower& tw, int basepoint) {
    tw.checkPoint(basepoint);
    auto comp = componentsAtLevel(tw, tw.levelCount());
    std::vector<int> pts;
    for (int p = 0; p < tw.pointCount(); ++p)
        if (comp[static_cast<size_t>(p)] == comp[static_cast<size_t>(basepoint)]) pts.push_back(p);
    return pts;
}

} // namespace unicover
