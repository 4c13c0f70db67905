#pragma once

// Folded subgroup graphs over a free basis. Membership in a finitely
// generated subgroup of a free group is decided exactly by tracing the word
// through the folded wedge of generator loops; the graph's first Betti
// number is the subgroup's rank.

#include <map>
#include <tuple>

#include "words.hpp"

namespace unicover {

class SubgroupGraph {
public:
    explicit SubgroupGraph(const std::vector<GroupWord>& generators) {
        parent_.push_back(0);   // vertex 0 = base
        for (const auto& g : generators) {
            int at = 0;
            for (size_t i = 0; i < g.letters.size(); ++i) {
                int next = (i + 1 == g.letters.size()) ? 0 : newVertex();
                edges_.emplace_back(at, g.letters[i], next);
                at = next;
            }
        }
        fold();
    }

    bool member(const GroupWord& w) const {
        int at = 0;
        for (int l : w.letters) {
            auto it = adj_.find({at, l});
            if (it == adj_.end()) return false;
            at = it->second;
        }
        return at == 0;
    }

    int vertexCount() const { return liveCount_; }
    int edgeCount() const { return static_cast<int>(foldedEdges_.size()); }
    // connected graph, so rank = E - V + 1
    int rank() const { return edgeCount() - vertexCount() + 1; }

private:
    int newVertex() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(parent_.size()) - 1;
    }

    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }

    void fold() {
        bool merged = true;
        while (merged) {
            merged = false;
            std::map<std::pair<int, int>, int> seen;   // (vertex, letter) -> target
            for (auto& [u, l, v] : edges_) {
                int fu = find(u), fv = find(v);
                for (auto [from, letter, to] : {std::tuple{fu, l, fv}, std::tuple{fv, -l, fu}}) {
                    auto [it, fresh] = seen.try_emplace({from, letter}, to);
                    if (!fresh && find(it->second) != find(to)) {
                        int a = find(it->second), b = find(to);
                        parent_[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
                        merged = true;
                    }
                }
            }
        }
        // canonical folded edge set, positive letters only
        std::vector<std::tuple<int, int, int>> out;
        for (auto& [u, l, v] : edges_) {
            int a = find(u), b = find(v);
            if (l > 0) out.emplace_back(a, l, b);
            else out.emplace_back(b, -l, a);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        foldedEdges_ = out;
        std::vector<int> live;
        live.push_back(find(0));
        for (auto& [u, l, v] : foldedEdges_) {
            live.push_back(u);
            live.push_back(v);
        }
        std::sort(live.begin(), live.end());
        live.erase(std::unique(live.begin(), live.end()), live.end());
        liveCount_ = static_cast<int>(live.size());
        for (auto& [u, l, v] : foldedEdges_) {
            adj_[{u, l}] = v;
            adj_[{v, -l}] = u;
        }
        // merging always keeps the smaller id, so the base stays vertex 0
    }

    std::vector<int> parent_;
    std::vector<std::tuple<int, int, int>> edges_;        // raw, pre-fold
    std::vector<std::tuple<int, int, int>> foldedEdges_;  // (u, +letter, v)
    std::map<std::pair<int, int>, int> adj_;
    int liveCount_ = 0;
};

// membership in <generators> inside a free group (exact)
inline bool stallingsMember(const std::vector<GroupWord>& generators, const GroupWord& w) {
    return SubgroupGraph(generators).member(w);
}

// rank of <generators> inside a free group (exact, Nielsen-Schreier)
inline int stallingsRank(const std::vector<GroupWord>& generators) {
    return SubgroupGraph(generators).rank();
}

} // namespace unicover
