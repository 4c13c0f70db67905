#pragma once

// Group-level views of edge-path groups: abelian invariants, bonding
// homomorphisms between scales, and exact membership back-ends (Stallings
// folding for free presentations, coset enumeration elsewhere).

#include "engine.hpp"
#include "presentation.hpp"
#include "stallings.hpp"
#include "toddcoxeter.hpp"

namespace unicover {

struct AbelianInvariants {
    int rank = 0;                          // free rank of the abelianization
    std::vector<long long> torsion;        // invariant factors > 1, ascending
};

inline AbelianInvariants abelianInvariants(const Presentation& p) {
    AbelianInvariants out;
    int n = static_cast<int>(p.generatorEdges.size());
    if (n == 0) return out;
    IntMatrix m;
    for (const auto& r : p.relators) m.push_back(r.abelianized(n));
    if (m.empty()) {
        out.rank = n;
        return out;
    }
    std::vector<long long> d = smithDiagonal(m);
    int nonzero = 0;
    for (long long v : d)
        if (v != 0) {
            ++nonzero;
            if (v > 1) out.torsion.push_back(v);
        }
    out.rank = n - nonzero;
    return out;
}

// homomorphism between edge-path groups induced by refining entourages:
// every chain at the finer scale is a chain at the coarser one
struct BondingHom {
    int fromLevel = 0;   // finer
    int toLevel = 0;     // coarser
    std::vector<GroupWord> images;   // per generator of the finer presentation
    std::vector<Tri> relatorChecks;  // images of finer relators are trivial

    GroupWord apply(const GroupWord& w) const {
        GroupWord out = GroupWord::identity();
        for (int l : w.letters) {
            const GroupWord& im = images[static_cast<size_t>(std::abs(l) - 1)];
            out = out * (l > 0 ? im : im.inverse());
        }
        return out;
    }

    bool allChecksYes() const {
        for (const auto& t : relatorChecks)
            if (t.verdict != Verdict::Yes) return false;
        return true;
    }
};

// image of a finer generator loop: base path out, the generating step, base
// path home, all read as a chain at the coarser scale
inline BondingHom bondingHom(const Presentation& fine, const Presentation& coarse,
                             const WordEngine& coarseEngine) {
    if (fine.level <= coarse.level)
        throw ChainError("bondingHom: source must be strictly finer than target");
    if (fine.basepoint != coarse.basepoint)
        throw ChainError("bondingHom: basepoint mismatch");
    BondingHom hom;
    hom.fromLevel = fine.level;
    hom.toLevel = coarse.level;
    for (auto [u, v] : fine.generatorEdges) {
        std::vector<int> seq = fine.forestPath(fine.basepoint, u);
        seq.push_back(v);
        std::vector<int> back = fine.forestPath(v, fine.basepoint);
        seq.insert(seq.end(), back.begin() + 1, back.end());
        hom.images.push_back(coarse.wordOfPointSeq(seq));
    }
    for (const auto& r : fine.relators)
        hom.relatorChecks.push_back(coarseEngine.isTrivial(hom.apply(r)));
    return hom;
}

// exact triviality for presentations the engine reduced to free form is
// already in WordEngine; these are the subgroup-level queries

// membership of w in <gens> when the ambient presentation is free
inline bool freeSubgroupMember(const std::vector<GroupWord>& gens, const GroupWord& w) {
    return stallingsMember(gens, w);
}

struct CosetQueryResult {
    bool decided = false;   // enumeration closed
    bool member = false;
    int index = 0;          // subgroup index when decided
};

// membership of w in <gens> by enumerating cosets of <gens>
inline CosetQueryResult cosetMember(const Presentation& p, const std::vector<GroupWord>& gens,
                                    const GroupWord& w, int maxCosets = 10000) {
    CosetTable t = cosetEnumerate(static_cast<int>(p.generatorEdges.size()), p.relators,
                                  gens, maxCosets);
    CosetQueryResult out;
    if (!t.closed) return out;
    out.decided = true;
    out.index = t.cosetCount;
    out.member = t.trace(0, w) == 0;
    return out;
}

} // namespace unicover
