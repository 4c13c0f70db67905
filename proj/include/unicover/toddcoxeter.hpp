#pragma once

// HLT-style coset enumeration with coincidence handling and gap filling.
// Enumerates cosets of a finitely generated subgroup H of a finitely
// presented group. Termination is capped by maxCosets; hitting the cap is
// reported as an overflow value, not an error. A closed table is renumbered
// canonically (breadth-first from the subgroup coset through columns in
// order), so equal inputs always produce byte-identical tables.

#include <deque>
#include <optional>

#include "words.hpp"

namespace unicover {

struct CosetTable {
    bool closed = false;      // false = overflow: table is partial, counts unreliable
    int cosetCount = 0;       // live cosets (= index of H when closed)
    int generatorCount = 0;
    long long definedTotal = 0;
    // table[c][2*g + d]: coset reached from c by generator g+1 (d=0) or its
    // inverse (d=1); -1 only in partial tables
    std::vector<std::vector<int>> table;
    std::vector<GroupWord> repWords;   // canonical representative word per coset

    // follow a word through the table; -1 if it runs off a partial table
    int trace(int from, const GroupWord& w) const {
        int at = from;
        for (int l : w.letters) {
            if (at < 0) return -1;
            int g = std::abs(l) - 1;
            if (g >= generatorCount) return -1;
            at = table[static_cast<size_t>(at)][static_cast<size_t>(2 * g + (l > 0 ? 0 : 1))];
        }
        return at;
    }

    bool sameCoset(const GroupWord& a, const GroupWord& b) const {
        int ca = trace(0, a), cb = trace(0, b);
        return ca >= 0 && ca == cb;
    }
};

namespace detail {

class HltEnumerator {
public:
    HltEnumerator(int nGens, const std::vector<GroupWord>& relators,
                  const std::vector<GroupWord>& subgroupGens, int maxCosets)
        : nGens_(nGens), maxCosets_(maxCosets) {
        for (const auto& r : relators) {
            GroupWord c = cyclicReduce(r);
            if (!c.empty()) relators_.push_back(c);
        }
        subgens_ = subgroupGens;
        define();   // coset 0 = H
    }

    CosetTable run() {
        for (const auto& w : subgens_) {
            if (!scanAndFill(0, w)) return overflow();
            processCoincidences();
        }
        for (int c = 0; c < defined(); ++c) {
            if (!isLive(c)) continue;
            for (const auto& r : relators_) {
                if (!scanAndFill(c, r)) return overflow();
                processCoincidences();
                if (!isLive(c)) break;
            }
            if (!isLive(c)) continue;
            for (int col = 0; col < 2 * nGens_; ++col) {
                if (entry(c, col) >= 0) continue;
                std::optional<int> n = define();
                if (!n) return overflow();
                link(c, col, *n);
            }
        }
        return canonical();
    }

private:
    int defined() const { return static_cast<int>(table_.size()); }
    bool isLive(int c) { return find(c) == c; }

    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }

    int entry(int c, int col) {
        int t = table_[static_cast<size_t>(c)][static_cast<size_t>(col)];
        if (t < 0) return -1;
        t = find(t);
        table_[static_cast<size_t>(c)][static_cast<size_t>(col)] = t;
        return t;
    }

    static int inverseCol(int col) { return col ^ 1; }

    static int colOf(int letter) {
        return 2 * (std::abs(letter) - 1) + (letter > 0 ? 0 : 1);
    }

    void link(int c, int col, int d) {
        c = find(c);
        d = find(d);
        int ex = entry(c, col);
        if (ex >= 0) {
            if (ex != d) coincidences_.emplace_back(ex, d);
            return;
        }
        table_[static_cast<size_t>(c)][static_cast<size_t>(col)] = d;
        int back = entry(d, inverseCol(col));
        if (back >= 0) {
            if (back != c) coincidences_.emplace_back(back, c);
        } else {
            table_[static_cast<size_t>(d)][static_cast<size_t>(inverseCol(col))] = c;
        }
    }

    std::optional<int> define() {
        if (defined() >= maxCosets_) return std::nullopt;
        table_.emplace_back(static_cast<size_t>(2 * nGens_), -1);
        parent_.push_back(defined() - 1);
        ++definedTotal_;
        return defined() - 1;
    }

    // scan the word as a loop at c, filling gaps with new cosets;
    // false = coset cap reached
    bool scanAndFill(int c, const GroupWord& w) {
        c = find(c);
        const auto& ls = w.letters;
        size_t i = 0, j = ls.size();
        int f = c, b = c;
        for (;;) {
            while (i < j) {
                int t = entry(f, colOf(ls[i]));
                if (t < 0) break;
                f = t;
                ++i;
            }
            if (i == j) {
                if (f != b) coincidences_.emplace_back(f, b);
                return true;
            }
            while (j > i + 1) {
                int t = entry(b, colOf(-ls[j - 1]));
                if (t < 0) break;
                b = t;
                --j;
            }
            if (j == i + 1) {
                link(f, colOf(ls[i]), b);
                return true;
            }
            std::optional<int> n = define();
            if (!n) return false;
            link(f, colOf(ls[i]), *n);
            f = find(f);
            f = entry(f, colOf(ls[i]));
            ++i;
            b = find(b);
        }
    }

    void processCoincidences() {
        while (!coincidences_.empty()) {
            auto [x, y] = coincidences_.front();
            coincidences_.pop_front();
            int a = find(x), b = find(y);
            if (a == b) continue;
            int s = std::min(a, b), d = std::max(a, b);
            parent_[static_cast<size_t>(d)] = s;
            for (int col = 0; col < 2 * nGens_; ++col) {
                int t = table_[static_cast<size_t>(d)][static_cast<size_t>(col)];
                if (t < 0) continue;
                t = find(t);
                int ex = entry(s, col);
                if (ex < 0) {
                    table_[static_cast<size_t>(s)][static_cast<size_t>(col)] = t;
                    int back = entry(t, inverseCol(col));
                    if (back < 0) {
                        table_[static_cast<size_t>(t)][static_cast<size_t>(inverseCol(col))] = s;
                    } else if (back != s) {
                        coincidences_.emplace_back(back, s);
                    }
                } else if (ex != t) {
                    coincidences_.emplace_back(ex, t);
                }
            }
        }
    }

    CosetTable overflow() {
        CosetTable out;
        out.closed = false;
        out.generatorCount = nGens_;
        out.definedTotal = definedTotal_;
        int live = 0;
        for (int c = 0; c < defined(); ++c)
            if (find(c) == c) ++live;
        out.cosetCount = live;
        return out;
    }

    CosetTable canonical() {
        processCoincidences();
        CosetTable out;
        out.closed = true;
        out.generatorCount = nGens_;
        out.definedTotal = definedTotal_;
        std::vector<int> number(static_cast<size_t>(defined()), -1);
        std::vector<int> order;
        number[static_cast<size_t>(find(0))] = 0;
        order.push_back(find(0));
        out.repWords.push_back(GroupWord::identity());
        for (size_t q = 0; q < order.size(); ++q) {
            int c = order[q];
            for (int col = 0; col < 2 * nGens_; ++col) {
                int t = entry(c, col);
                if (t < 0 || number[static_cast<size_t>(t)] >= 0) continue;
                number[static_cast<size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
                out.repWords.push_back(out.repWords[q] *
                                       GroupWord::generator(col / 2, col % 2 == 0 ? 1 : -1));
            }
        }
        out.cosetCount = static_cast<int>(order.size());
        out.table.assign(order.size(), std::vector<int>(static_cast<size_t>(2 * nGens_), -1));
        for (size_t q = 0; q < order.size(); ++q)
            for (int col = 0; col < 2 * nGens_; ++col) {
                int t = entry(order[q], col);
                out.table[q][static_cast<size_t>(col)] = t < 0 ? -1 : number[static_cast<size_t>(t)];
            }
        return out;
    }

    int nGens_;
    int maxCosets_;
    long long definedTotal_ = 0;
    std::vector<GroupWord> relators_;
    std::vector<GroupWord> subgens_;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;
    std::deque<std::pair<int, int>> coincidences_;
};

} // namespace detail

inline CosetTable cosetEnumerate(int nGens, const std::vector<GroupWord>& relators,
                                 const std::vector<GroupWord>& subgroupGens,
                                 int maxCosets = 10000) {
    if (nGens == 0) {
        CosetTable out;
        out.closed = true;
        out.cosetCount = 1;
        out.generatorCount = 0;
        out.definedTotal = 1;
        out.table.assign(1, {});
        out.repWords.push_back(GroupWord::identity());
        return out;
    }
    return detail::HltEnumerator(nGens, relators, subgroupGens, maxCosets).run();
}

} // namespace unicover
