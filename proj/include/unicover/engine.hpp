#pragma once

// Budgeted word-problem engine over a finite presentation.
//
// Verdicts are three-valued and sound in both directions:
//   Yes      - the word provably reduces to the identity (free reduction,
//              Tietze substitution into a free presentation, or an explicit
//              relator-insertion rewrite found by bounded search; the rewrite
//              path is attached and replayable)
//   No       - a certificate exists (nonzero abelianized image outside the
//              relator lattice, or a nonempty word in a free presentation)
//   Unknown  - the budget ran out; the exhausted bound is reported
//
// Presentations are Tietze-reduced up front: single-letter relators kill
// their generator, length-two relators alias one generator to another.
// Cone-like levels (complete blobs) collapse to free presentations this way,
// which keeps verdicts exact on them.

#include <deque>
#include <set>
#include <sstream>

#include "intmat.hpp"
#include "presentation.hpp"

namespace unicover {

enum class Verdict { Yes, No, Unknown };

inline const char* verdictName(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "unknown";
    }
}

struct RewriteStep {
    int pos = 0;        // insertion offset in the word the step applies to
    int variant = 0;    // index into the engine's relator-variant list
};

struct Tri {
    Verdict verdict = Verdict::Unknown;
    std::string evidence;
    std::vector<RewriteStep> trace;   // nonempty only for search-found Yes
    GroupWord tracedStart;            // Tietze image of the query, for replay

    static Tri yes(std::string ev) { return Tri{Verdict::Yes, std::move(ev), {}, {}}; }
    static Tri no(std::string ev) { return Tri{Verdict::No, std::move(ev), {}, {}}; }
    static Tri unknown(std::string ev) { return Tri{Verdict::Unknown, std::move(ev), {}, {}}; }
};

// ===== Tietze reduction =====

class TietzeReduction {
public:
    TietzeReduction() = default;

    TietzeReduction(int nGens, const std::vector<GroupWord>& relators) : state_(static_cast<size_t>(nGens)) {
        for (size_t g = 0; g < state_.size(); ++g) state_[g] = {Kind::Alive, 0, 1};
        std::vector<GroupWord> work;
        for (const auto& r : relators) work.push_back(cyclicReduce(r));

        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& r : work) {
                GroupWord m = cyclicReduce(apply(r));
                if (m.size() == 1) {
                    if (kill(std::abs(m.letters[0]) - 1)) changed = true;
                } else if (m.size() == 2) {
                    int l0 = m.letters[0], l1 = m.letters[1];
                    int g0 = std::abs(l0) - 1, g1 = std::abs(l1) - 1;
                    if (g0 != g1 && identify(g0, l0 > 0 ? 1 : -1, g1, l1 > 0 ? 1 : -1))
                        changed = true;
                    // a^{+-2} is torsion; the searcher keeps it
                }
            }
        }

        // compact surviving generators
        newIndex_.assign(state_.size(), -1);
        for (size_t g = 0; g < state_.size(); ++g)
            if (state_[g].kind == Kind::Alive) {
                newIndex_[g] = aliveCount_;
                ++aliveCount_;
            }
        for (const auto& r : work) {
            GroupWord m = cyclicReduce(renumber(apply(r)));
            if (!m.empty()) reducedRelators_.push_back(m);
        }
        std::sort(reducedRelators_.begin(), reducedRelators_.end());
        reducedRelators_.erase(std::unique(reducedRelators_.begin(), reducedRelators_.end()),
                               reducedRelators_.end());
    }

    int aliveCount() const { return aliveCount_; }
    bool freeAfter() const { return reducedRelators_.empty(); }
    const std::vector<GroupWord>& reducedRelators() const { return reducedRelators_; }

    // maps a word over the original generators to the reduced ones
    GroupWord map(const GroupWord& w) const { return renumber(apply(w)); }

private:
    enum class Kind { Alive, Dead, Alias };
    struct State {
        Kind kind = Kind::Alive;
        int target = 0;   // alias target generator
        int sign = 1;
    };

    // resolve one original letter to at most one original alive letter
    bool resolve(int gen, int& outGen, int& outSign) const {
        int sign = 1;
        while (true) {
            const State& st = state_[static_cast<size_t>(gen)];
            if (st.kind == Kind::Dead) return false;
            if (st.kind == Kind::Alive) {
                outGen = gen;
                outSign = sign;
                return true;
            }
            sign *= st.sign;
            gen = st.target;
        }
    }

    GroupWord apply(const GroupWord& w) const {
        std::vector<int> ls;
        for (int l : w.letters) {
            int g, s;
            if (!resolve(std::abs(l) - 1, g, s)) continue;
            int sign = (l > 0 ? 1 : -1) * s;
            ls.push_back(sign * (g + 1));
        }
        return GroupWord::fromLetters(std::move(ls));
    }

    GroupWord renumber(const GroupWord& w) const {
        std::vector<int> ls;
        for (int l : w.letters) {
            int ni = newIndex_[static_cast<size_t>(std::abs(l) - 1)];
            ls.push_back((l > 0 ? 1 : -1) * (ni + 1));
        }
        return GroupWord::fromLetters(std::move(ls));
    }

    bool kill(int gen) {
        int g, s;
        if (!resolve(gen, g, s)) return false;
        state_[static_cast<size_t>(g)] = {Kind::Dead, 0, 1};
        return true;
    }

    // imposes x^p y^q = 1; returns true when a new rule was recorded
    bool identify(int x, int p, int y, int q) {
        int gx, sx, gy, sy;
        bool ax = resolve(x, gx, sx), ay = resolve(y, gy, sy);
        if (!ax && !ay) return false;
        if (!ax) return kill(gy);   // relation degenerates to y^q = 1
        if (!ay) return kill(gx);
        if (gx == gy) return false; // same survivor: trivial or torsion
        int P = p * sx, Q = q * sy; // gx^P gy^Q = 1 over survivors
        int hi = std::max(gx, gy), lo = std::min(gx, gy);
        // either orientation gives exponent -P*Q for the hi -> lo rule
        state_[static_cast<size_t>(hi)] = {Kind::Alias, lo, -P * Q};
        return true;
    }

    std::vector<State> state_;
    std::vector<int> newIndex_;
    std::vector<GroupWord> reducedRelators_;
    int aliveCount_ = 0;
};

// ===== the engine =====

struct EngineLimits {
    long nodeBudget = 100000;   // rewrite-search nodes
    int lengthSlack = 8;        // admissible growth over the start word
};

class WordEngine {
public:
    WordEngine() = default;

    WordEngine(int nGens, std::vector<GroupWord> relators, EngineLimits limits = {})
        : nGens_(nGens), relators_(std::move(relators)), limits_(limits),
          tietze_(nGens, relators_) {
        // relator-insertion variants over the reduced presentation
        for (size_t ri = 0; ri < tietze_.reducedRelators().size(); ++ri) {
            const GroupWord& r = tietze_.reducedRelators()[ri];
            for (int inv = 0; inv < 2; ++inv) {
                GroupWord base = inv ? r.inverse() : r;
                for (size_t rot = 0; rot < base.size(); ++rot) {
                    std::vector<int> ls(base.letters.begin() + static_cast<long>(rot), base.letters.end());
                    ls.insert(ls.end(), base.letters.begin(), base.letters.begin() + static_cast<long>(rot));
                    variants_.push_back(GroupWord::fromLetters(std::move(ls)));
                }
            }
        }
        std::sort(variants_.begin(), variants_.end());
        variants_.erase(std::unique(variants_.begin(), variants_.end()), variants_.end());
        maxVariantLen_ = 0;
        for (const auto& v : variants_) maxVariantLen_ = std::max(maxVariantLen_, v.size());

        IntMatrix rows;
        for (const auto& r : tietze_.reducedRelators())
            rows.push_back(r.abelianized(tietze_.aliveCount()));
        abelianBasis_ = rowLatticeBasis(std::move(rows));
    }

    explicit WordEngine(const Presentation& pr, EngineLimits limits = {})
        : WordEngine(pr.generatorCount(), pr.relators, limits) {}

    int generatorCount() const { return nGens_; }
    const TietzeReduction& tietze() const { return tietze_; }
    const std::vector<GroupWord>& searchVariants() const { return variants_; }

    Tri isTrivial(const GroupWord& w) const { return isTrivial(w, limits_.nodeBudget); }

    Tri isTrivial(const GroupWord& w, long budget) const {
        if (w.empty()) return Tri::yes("freely reduces to the identity");
        GroupWord m = tietze_.map(w);
        if (m.empty()) return Tri::yes("identity after presentation reduction");
        if (tietze_.freeAfter())
            return Tri::no("nonempty word in a relator-free presentation");
        if (!inRowLattice(abelianBasis_, m.abelianized(tietze_.aliveCount())))
            return Tri::no("abelianized image lies outside the relator lattice");
        return search(m, budget);
    }

    // replays a search trace mechanically; true when it lands on the identity
    bool replay(const GroupWord& start, const std::vector<RewriteStep>& steps) const {
        GroupWord cur = start;
        for (const auto& st : steps) {
            if (st.variant < 0 || st.variant >= static_cast<int>(variants_.size())) return false;
            if (st.pos < 0 || st.pos > static_cast<int>(cur.size())) return false;
            std::vector<int> ls(cur.letters.begin(), cur.letters.begin() + st.pos);
            const auto& v = variants_[static_cast<size_t>(st.variant)];
            ls.insert(ls.end(), v.letters.begin(), v.letters.end());
            ls.insert(ls.end(), cur.letters.begin() + st.pos, cur.letters.end());
            cur = GroupWord::fromLetters(std::move(ls));
        }
        return cur.empty();
    }

private:
    Tri search(const GroupWord& start, long budget) const {
        if (variants_.empty())
            return Tri::unknown("torsion-only presentation rules out the lattice certificate");
        struct Node {
            GroupWord word;
            int parent;
            RewriteStep step;
        };
        const size_t maxLen = start.size() + maxVariantLen_ + static_cast<size_t>(limits_.lengthSlack);
        std::vector<Node> nodes{{start, -1, {}}};
        // shortest-first frontier: (length, node index) keeps the search stable
        std::set<std::pair<size_t, int>> frontier{{start.size(), 0}};
        std::set<std::vector<int>> seen{start.letters};
        long expanded = 0;

        while (!frontier.empty()) {
            auto [len, idx] = *frontier.begin();
            frontier.erase(frontier.begin());
            if (++expanded > budget)
                return Tri::unknown("rewrite budget exhausted after " + std::to_string(budget) + " nodes");
            const GroupWord cur = nodes[static_cast<size_t>(idx)].word;
            for (int vi = 0; vi < static_cast<int>(variants_.size()); ++vi) {
                const GroupWord& v = variants_[static_cast<size_t>(vi)];
                for (int pos = 0; pos <= static_cast<int>(cur.size()); ++pos) {
                    std::vector<int> ls(cur.letters.begin(), cur.letters.begin() + pos);
                    ls.insert(ls.end(), v.letters.begin(), v.letters.end());
                    ls.insert(ls.end(), cur.letters.begin() + pos, cur.letters.end());
                    GroupWord child = GroupWord::fromLetters(std::move(ls));
                    if (child.size() > maxLen) continue;
                    if (!seen.insert(child.letters).second) continue;
                    nodes.push_back({child, idx, {pos, vi}});
                    int ci = static_cast<int>(nodes.size()) - 1;
                    if (child.empty()) {
                        Tri out = Tri::yes("rewrite path to the identity (" +
                                           std::to_string(expanded) + " nodes examined)");
                        std::vector<RewriteStep> steps;
                        for (int at = ci; nodes[static_cast<size_t>(at)].parent >= 0;
                             at = nodes[static_cast<size_t>(at)].parent)
                            steps.push_back(nodes[static_cast<size_t>(at)].step);
                        std::reverse(steps.begin(), steps.end());
                        out.trace = std::move(steps);
                        out.tracedStart = start;
                        return out;
                    }
                    frontier.insert({child.size(), ci});
                }
            }
        }
        return Tri::unknown("rewrite frontier exhausted within the length window");
    }

    int nGens_ = 0;
    std::vector<GroupWord> relators_;
    EngineLimits limits_;
    TietzeReduction tietze_;
    std::vector<GroupWord> variants_;
    size_t maxVariantLen_ = 0;
    IntMatrix abelianBasis_;
};

// E-homotopy of chains with shared endpoints, decided through the engine
inline Tri areChainsEHomotopic(const ScaleTower& tw, const Presentation& pr, const WordEngine& eng,
                               const Chain& a, const Chain& b, long budget) {
    if (a.level != b.level || a.level != pr.level) throw ChainError("areChainsEHomotopic: level mismatch");
    if (!isChain(tw, a) || !isChain(tw, b)) throw ChainError("areChainsEHomotopic: not chains");
    if (a.start() != b.start() || a.end() != b.end())
        throw ChainError("areChainsEHomotopic: endpoint mismatch");
    GroupWord q = pr.wordOfPointSeq(a.seq) * pr.wordOfPointSeq(b.seq).inverse();
    return eng.isTrivial(q, budget);
}

} // namespace unicover
