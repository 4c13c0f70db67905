#pragma once

// Edge-path group presentation of a level's Rips 2-skeleton.
//
// The spanning forest is grown breadth-first from the basepoint, then from
// the least-id vertex of every remaining component, visiting neighbours in
// ascending id order. Generators are the non-forest edges (ascending (u,v),
// positive when traversed u -> v with u < v); each triangle contributes its
// boundary word as a relator. Forest edges read as the identity, which keeps
// chain words independent of the closing-up paths.

#include <array>
#include <map>
#include <queue>

#include "core.hpp"
#include "words.hpp"

namespace unicover {

struct Presentation {
    int level = 1;
    int basepoint = 0;
    int vertexCount = 0;
    int componentCount = 0;
    std::vector<std::pair<int, int>> edges;            // all skeleton edges, sorted
    std::vector<int> forestParent;                     // -1 at component roots
    std::vector<int> componentOf;                      // component id per vertex
    std::vector<std::pair<int, int>> generatorEdges;   // non-forest edges, ascending
    std::vector<GroupWord> relators;                   // one per triangle, cyclically reduced
    std::vector<std::array<int, 3>> relatorTriangles;

    int generatorCount() const { return static_cast<int>(generatorEdges.size()); }

    // 0 for stutters and forest edges, otherwise the signed letter of the step
    int letterOfStep(int u, int v) const {
        if (u == v) return 0;
        if (forestParent[static_cast<size_t>(u)] == v || forestParent[static_cast<size_t>(v)] == u) return 0;
        int a = u < v ? u : v, b = u < v ? v : u;
        auto it = std::lower_bound(generatorEdges.begin(), generatorEdges.end(), std::make_pair(a, b));
        if (it == generatorEdges.end() || *it != std::make_pair(a, b))
            throw ChainError("step (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is not an edge at level " + std::to_string(level));
        int idx = static_cast<int>(it - generatorEdges.begin());
        return (u < v) ? idx + 1 : -(idx + 1);
    }

    GroupWord wordOfPointSeq(const std::vector<int>& seq) const {
        std::vector<int> ls;
        for (size_t t = 0; t + 1 < seq.size(); ++t) {
            int l = letterOfStep(seq[t], seq[t + 1]);
            if (l != 0) ls.push_back(l);
        }
        return GroupWord::fromLetters(std::move(ls));
    }

    // forest path from u up to its component root, inclusive
    std::vector<int> pathToRoot(int u) const {
        std::vector<int> p{u};
        while (forestParent[static_cast<size_t>(p.back())] >= 0)
            p.push_back(forestParent[static_cast<size_t>(p.back())]);
        return p;
    }

    // forest path u -> v through the lowest common ancestor; u, v must share a component
    std::vector<int> forestPath(int u, int v) const {
        if (componentOf[static_cast<size_t>(u)] != componentOf[static_cast<size_t>(v)])
            throw ChainError("forestPath endpoints in different components");
        auto ru = pathToRoot(u), rv = pathToRoot(v);
        size_t cut = 0;   // length of shared tail
        while (cut < ru.size() && cut < rv.size() &&
               ru[ru.size() - 1 - cut] == rv[rv.size() - 1 - cut])
            ++cut;
        std::vector<int> out(ru.begin(), ru.end() - static_cast<long>(cut) + 1);
        for (size_t t = rv.size() - cut; t-- > 0;) out.push_back(rv[t]);
        return out;
    }
};

inline Presentation presentPi1(const RipsSkeleton& sk, int basepoint) {
    const int n = sk.vertexCount;
    if (basepoint < 0 || basepoint >= n) throw TowerError("presentPi1: basepoint out of range");

    Presentation pr;
    pr.level = sk.level;
    pr.basepoint = basepoint;
    pr.vertexCount = n;
    pr.edges = sk.edges;
    pr.forestParent.assign(static_cast<size_t>(n), -1);
    pr.componentOf.assign(static_cast<size_t>(n), -1);

    std::vector<std::vector<int>> nbr(static_cast<size_t>(n));
    for (const auto& [a, b] : sk.edges) {
        nbr[static_cast<size_t>(a)].push_back(b);
        nbr[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& v : nbr) std::sort(v.begin(), v.end());

    auto sweep = [&](int root) {
        pr.componentOf[static_cast<size_t>(root)] = pr.componentCount;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : nbr[static_cast<size_t>(v)]) {
                if (pr.componentOf[static_cast<size_t>(w)] >= 0) continue;
                pr.componentOf[static_cast<size_t>(w)] = pr.componentCount;
                pr.forestParent[static_cast<size_t>(w)] = v;
                q.push(w);
            }
        }
        ++pr.componentCount;
    };
    sweep(basepoint);
    for (int v = 0; v < n; ++v)
        if (pr.componentOf[static_cast<size_t>(v)] < 0) sweep(v);

    for (const auto& [a, b] : sk.edges)
        if (pr.forestParent[static_cast<size_t>(a)] != b && pr.forestParent[static_cast<size_t>(b)] != a)
            pr.generatorEdges.emplace_back(a, b);
    // sk.edges is sorted, so generatorEdges is too

    for (const auto& t : sk.triangles) {
        pr.relatorTriangles.push_back(t);
        pr.relators.push_back(cyclicReduce(pr.wordOfPointSeq({t[0], t[1], t[2], t[0]})));
    }
    return pr;
}

inline Presentation presentPi1(const ScaleTower& tw, int levelIdx, int basepoint) {
    tw.checkPoint(basepoint);
    return presentPi1(buildSkeleton(tw, levelIdx), basepoint);
}

// Raw word of a chain relative to a presentation at the same level. The
// closed-up class at the basepoint carries the same word because forest
// edges read as the identity; it exists only when the chain runs in the
// basepoint's component.
struct ChainWord {
    GroupWord word;
    int start = 0;
    int end = 0;
    bool inBasepointComponent = false;
};

inline ChainWord chainToWord(const ScaleTower& tw, const Presentation& pr, const Chain& c) {
    if (c.level != pr.level) throw ChainError("chainToWord: level mismatch");
    if (!isChain(tw, c)) throw ChainError("chainToWord: not a chain");
    ChainWord out;
    out.word = pr.wordOfPointSeq(c.seq);
    out.start = c.start();
    out.end = c.end();
    out.inBasepointComponent =
        pr.componentOf[static_cast<size_t>(c.start())] == pr.componentOf[static_cast<size_t>(pr.basepoint)];
    return out;
}

} // namespace unicover
