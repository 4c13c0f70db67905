#pragma once

// Deterministic generators for the example spaces the tests are anchored to.
// Every recipe regenerates bit-identically from its parameters.

#include <random>

#include "core.hpp"

namespace unicover {

// cycle graph with the hop metric
inline ScaleTower cycleSpace(int n, const std::vector<Rational>& thresholds) {
    if (n < 3) throw TowerError("cycleSpace: need at least 3 points");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::vector<double>> d(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int h = std::abs(i - j);
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::min(h, n - h);
        }
    return fromMetric(labels, d, thresholds);
}

// wedge of N discrete circles sharing point 0; circle m has 4m points and is
// entourage-bounded (all pairs related) at every level coarser than m. The
// finest level carries plain hop adjacency, so its group is free of rank N.
inline ScaleTower hawaiianTower(int N) {
    if (N < 1) throw TowerError("hawaiianTower: depth must be >= 1");
    ScaleTower tw;
    tw.labels.push_back("w");
    std::vector<std::vector<int>> circle(static_cast<size_t>(N));   // full cycles incl. wedge
    for (int m = 1; m <= N; ++m) {
        auto& c = circle[static_cast<size_t>(m - 1)];
        c.push_back(0);
        for (int t = 1; t < 4 * m; ++t) {
            c.push_back(static_cast<int>(tw.labels.size()));
            tw.labels.push_back("c" + std::to_string(m) + "." + std::to_string(t));
        }
    }
    std::vector<std::pair<int, int>> hop;
    for (const auto& c : circle)
        for (size_t t = 0; t < c.size(); ++t) hop.emplace_back(c[t], c[(t + 1) % c.size()]);
    for (int j = 1; j <= N; ++j) {
        std::vector<std::pair<int, int>> ps = hop;
        for (int m = j + 1; m <= N; ++m) {
            const auto& c = circle[static_cast<size_t>(m - 1)];
            for (size_t a = 0; a < c.size(); ++a)
                for (size_t b = a + 1; b < c.size(); ++b) ps.emplace_back(c[a], c[b]);
        }
        tw.levels.push_back(Entourage::fromPairs(std::move(ps)));
        tw.scales.push_back(Rational(1, j));
    }
    tw.validateOrThrow();
    return tw;
}

// path graph whose endpoints are bridged at the coarse levels only: the
// coarse circle has no fine path across the gap
inline ScaleTower gappedCycle(int n, int gapLevel) {
    if (n < 4) throw TowerError("gappedCycle: need at least 4 points");
    if (gapLevel < 1) throw TowerError("gappedCycle: gap level must be >= 1");
    ScaleTower tw;
    for (int i = 0; i < n; ++i) tw.labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> path;
    for (int i = 0; i + 1 < n; ++i) path.emplace_back(i, i + 1);
    for (int j = 1; j <= gapLevel + 1; ++j) {
        std::vector<std::pair<int, int>> ps = path;
        if (j <= gapLevel) ps.emplace_back(0, n - 1);
        tw.levels.push_back(Entourage::fromPairs(std::move(ps)));
        tw.scales.push_back(Rational(1, j));
    }
    tw.validateOrThrow();
    return tw;
}

// two points related at every level, folding onto a single point; the
// smallest non-Hausdorff tower
struct TwinPoints {
    ScaleTower doubled;
    ScaleTower single;
    std::vector<int> fold;   // vertex map doubled -> single
};

inline TwinPoints twinPoints() {
    TwinPoints out;
    out.doubled.labels = {"a", "b"};
    out.doubled.levels.push_back(Entourage::fromPairs({{0, 1}}));
    out.doubled.scales.push_back(Rational(1));
    out.single.labels = {"p"};
    out.single.levels.push_back(Entourage::fromPairs({}));
    out.single.scales.push_back(Rational(1));
    out.fold = {0, 0};
    return out;
}

// discrete torus grid with the L1 hop metric; a threshold-2 level carries
// triangles, exercising presentations with relators
inline ScaleTower torusGrid(int m, int n, const std::vector<Rational>& thresholds) {
    if (m < 3 || n < 3) throw TowerError("torusGrid: need at least 3x3");
    std::vector<std::string> labels;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) labels.push_back(std::to_string(a) + "," + std::to_string(b));
    auto wrap = [](int x, int mod) {
        int h = std::abs(x);
        return std::min(h, mod - h);
    };
    const int total = m * n;
    std::vector<std::vector<double>> d(static_cast<size_t>(total),
                                       std::vector<double>(static_cast<size_t>(total)));
    for (int p = 0; p < total; ++p)
        for (int q = 0; q < total; ++q)
            d[static_cast<size_t>(p)][static_cast<size_t>(q)] =
                wrap(p / n - q / n, m) + wrap(p % n - q % n, n);
    return fromMetric(labels, d, thresholds);
}

// seeded tower: one uniform draw per pair, compared against a descending
// density ladder, so nesting holds by construction
inline ScaleTower randomTower(unsigned long long seed, int n, const std::vector<double>& densities) {
    if (n < 1) throw TowerError("randomTower: need at least 1 point");
    if (densities.empty()) throw TowerError("randomTower: need at least one density");
    for (size_t i = 0; i + 1 < densities.size(); ++i)
        if (densities[i + 1] > densities[i])
            throw TowerError("randomTower: densities must be non-increasing");
    std::mt19937_64 rng(seed);
    ScaleTower tw;
    for (int i = 0; i < n; ++i) tw.labels.push_back(std::to_string(i));
    std::vector<std::vector<std::pair<int, int>>> levels(densities.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            for (size_t j = 0; j < densities.size(); ++j)
                if (u < densities[j]) levels[j].emplace_back(a, b);
        }
    for (auto& ps : levels) tw.levels.push_back(Entourage::fromPairs(std::move(ps)));
    tw.validateOrThrow();
    return tw;
}

struct CorpusRecipe {
    std::string name;
    std::string parameters;   // human-readable parameter summary
    std::string notes;
};

inline std::vector<CorpusRecipe> corpusRecipes() {
    return {
        {"cycle", "<n> <threshold...>", "cycle graph, hop metric; cycle 12 1 is the standard example"},
        {"hawaiian", "<depth>", "wedge of circles, circle m bounded at levels coarser than m"},
        {"gapped", "<n> <gapLevel>", "path bridged into a circle at coarse levels only"},
        {"twin", "", "two everywhere-related points (emit the doubled tower)"},
        {"torus", "<m> <n> <threshold...>", "discrete torus, L1 hop metric"},
        {"random", "<seed> <n> <density...>", "seeded random tower, densities non-increasing"},
    };
}

} // namespace unicover
