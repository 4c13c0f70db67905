#pragma once

// JSON ingestion and emission. Loaders reject floating-point scale values
// (exact rationals only, as integers or "p/q" strings) and report the JSON
// element path of the offending value. Emitters keep key order stable so
// reports diff cleanly across runs.

#include <json.hpp>

#include "cover.hpp"

namespace unicover {

using json = nlohmann::ordered_json;

// malformed document shape/types: a caller-input problem, distinct from
// semantic tower violations (TowerError) so the CLI can map exit codes
struct JsonFormatError : std::runtime_error {
    explicit JsonFormatError(const std::string& what) : std::runtime_error(what) {}
};

namespace json_detail {

inline const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw JsonFormatError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw JsonFormatError(path + ": missing field \"" + key + "\"");
    return *it;
}

inline long long intAt(const json& j, const std::string& path) {
    if (j.is_number_float())
        throw JsonFormatError(path + ": floating-point value rejected (exact integers only)");
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw JsonFormatError(path + ": expected an integer");
    return j.get<long long>();
}

inline std::string stringAt(const json& j, const std::string& path) {
    if (!j.is_string()) throw JsonFormatError(path + ": expected a string");
    return j.get<std::string>();
}

} // namespace json_detail

// ----- towers -----

inline json towerToJson(const ScaleTower& tw) {
    json j;
    j["points"] = tw.labels;
    j["levels"] = json::array();
    for (int i = 0; i < tw.levelCount(); ++i) {
        json lv;
        std::optional<Rational> sc;
        if (!tw.scales.empty()) sc = tw.scales[static_cast<size_t>(i)];
        if (!sc) lv["scale"] = nullptr;
        else if (sc->den == 1) lv["scale"] = sc->num;
        else lv["scale"] = sc->str();
        lv["pairs"] = json::array();
        for (const auto& [a, b] : tw.levels[static_cast<size_t>(i)].pairs)
            lv["pairs"].push_back(json::array({a, b}));
        j["levels"].push_back(std::move(lv));
    }
    return j;
}

// shape/type checking only; run validateOrThrow() for the semantic invariants
inline ScaleTower towerFromJson(const json& j, const std::string& path = "tower") {
    using namespace json_detail;
    ScaleTower tw;
    const json& pts = field(j, "points", path);
    if (!pts.is_array()) throw JsonFormatError(path + ".points: expected an array");
    for (size_t p = 0; p < pts.size(); ++p)
        tw.labels.push_back(stringAt(pts[p], path + ".points[" + std::to_string(p) + "]"));
    const json& lvls = field(j, "levels", path);
    if (!lvls.is_array()) throw JsonFormatError(path + ".levels: expected an array");
    for (size_t i = 0; i < lvls.size(); ++i) {
        std::string lp = path + ".levels[" + std::to_string(i) + "]";
        const json& lv = lvls[i];
        const json& sc = field(lv, "scale", lp);
        if (sc.is_null()) {
            tw.scales.push_back(std::nullopt);
        } else if (sc.is_string()) {
            try {
                tw.scales.push_back(Rational::parse(sc.get<std::string>()));
            } catch (const TowerError& e) {
                throw JsonFormatError(lp + ".scale: " + e.what());
            }
        } else {
            tw.scales.push_back(Rational(intAt(sc, lp + ".scale")));
        }
        const json& prs = field(lv, "pairs", lp);
        if (!prs.is_array()) throw JsonFormatError(lp + ".pairs: expected an array");
        std::vector<std::pair<int, int>> pairs;
        for (size_t e = 0; e < prs.size(); ++e) {
            std::string pp = lp + ".pairs[" + std::to_string(e) + "]";
            const json& pr = prs[e];
            if (!pr.is_array() || pr.size() != 2)
                throw JsonFormatError(pp + ": expected a pair [a, b]");
            pairs.emplace_back(static_cast<int>(intAt(pr[0], pp + "[0]")),
                               static_cast<int>(intAt(pr[1], pp + "[1]")));
        }
        tw.levels.push_back(Entourage::fromPairs(std::move(pairs)));
    }
    return tw;
}

// ----- subgroup specs -----

inline json subgroupToJson(const SubgroupSpec& s) {
    json j;
    j["name"] = s.name;
    j["generators"] = json::array();
    for (const auto& g : s.generators) j["generators"].push_back(formatWord(g));
    return j;
}

inline SubgroupSpec subgroupFromJson(const json& j, const std::string& path = "subgroup") {
    using namespace json_detail;
    SubgroupSpec s;
    s.name = stringAt(field(j, "name", path), path + ".name");
    const json& gens = field(j, "generators", path);
    if (!gens.is_array()) throw JsonFormatError(path + ".generators: expected an array");
    for (size_t i = 0; i < gens.size(); ++i) {
        std::string gp = path + ".generators[" + std::to_string(i) + "]";
        try {
            s.generators.push_back(parseWord(stringAt(gens[i], gp)));
        } catch (const WordError& e) {
            throw JsonFormatError(gp + ": " + e.what());
        }
    }
    return s;
}

// ----- vertex maps -----

// accepts a bare array of target ids or {"map": [...]}
inline std::vector<int> vertexMapFromJson(const json& j, const std::string& path = "map") {
    using namespace json_detail;
    const json* arr = &j;
    if (j.is_object()) arr = &field(j, "map", path);
    if (!arr->is_array()) throw JsonFormatError(path + ": expected an array of target ids");
    std::vector<int> out;
    for (size_t i = 0; i < arr->size(); ++i)
        out.push_back(static_cast<int>(intAt((*arr)[i], path + "[" + std::to_string(i) + "]")));
    return out;
}

// ----- covers -----

// self-contained dump: the sidecar fields plus everything needed to rebuild
// the cover deterministically (base tower, basepoint, H, budget)
inline json coverToJson(const CoverSpace& cv, int maxCosets) {
    json j;
    j["base"] = towerToJson(cv.base);
    j["basepoint"] = cv.basepoint;
    j["H"] = subgroupToJson(cv.H);
    j["maxCosets"] = maxCosets;
    j["cosets"] = cv.cosetCount;
    j["basepointFiber"] = cv.basepointFiber;
    j["projection"] = cv.projection.vertexMap;
    j["total"] = towerToJson(cv.total);
    return j;
}

struct CoverContext {
    ScaleTower base;
    int basepoint = 0;
    SubgroupSpec H;
    int maxCosets = 10000;
};

inline CoverContext coverContextFromJson(const json& j, const std::string& path = "cover") {
    using namespace json_detail;
    CoverContext out;
    out.base = towerFromJson(field(j, "base", path), path + ".base");
    out.basepoint = static_cast<int>(intAt(field(j, "basepoint", path), path + ".basepoint"));
    out.H = subgroupFromJson(field(j, "H", path), path + ".H");
    out.maxCosets = static_cast<int>(intAt(field(j, "maxCosets", path), path + ".maxCosets"));
    return out;
}

// ----- analysis reports -----

inline json triToJson(const Tri& t) {
    json j;
    j["verdict"] = verdictName(t.verdict);
    j["evidence"] = t.evidence;
    return j;
}

inline json levelTrisToJson(const std::vector<LevelTri>& v) {
    json arr = json::array();
    for (const auto& lt : v) {
        json e;
        e["level"] = lt.level;
        e["verdict"] = verdictName(lt.tri.verdict);
        e["evidence"] = lt.tri.evidence;
        arr.push_back(std::move(e));
    }
    return arr;
}

inline json membershipProfileToJson(const MembershipProfile& p) {
    json j;
    j["perLevel"] = levelTrisToJson(p.perLevel);
    j["overall"] = triToJson(p.overall);
    j["yesPrefix"] = p.yesPrefix;
    return j;
}

inline json closureReportToJson(const ClosureReport& r) {
    json j;
    j["closed"] = triToJson(r.closed);
    j["escaping"] = json::array();
    for (const auto& e : r.escaping) {
        json w;
        w["word"] = formatWord(e.word);
        w["yesPrefix"] = e.yesPrefix;
        w["profile"] = membershipProfileToJson(e.profile);
        j["escaping"].push_back(std::move(w));
    }
    j["wordsExamined"] = r.wordsExamined;
    j["lengthBound"] = r.lengthBound;
    j["searchExhausted"] = r.searchExhausted;
    return j;
}

inline json injectivityProfileToJson(const InjectivityProfile& p) {
    json j;
    j["perLevel"] = levelTrisToJson(p.perLevel);
    j["anyInjective"] = triToJson(p.anyInjective);
    j["wordBound"] = p.wordBound;
    return j;
}

inline json joinabilityToJson(const JoinabilityReport& r) {
    json j;
    j["ownScale"] = triToJson(r.ownScale);
    j["perLevel"] = levelTrisToJson(r.perLevel);
    if (r.witness) {
        j["witness"] = {{"level", r.witness->level},
                        {"pair", {r.witness->pair.first, r.witness->pair.second}}};
    } else {
        j["witness"] = nullptr;
    }
    j["truncatedForm"] = triToJson(r.truncatedForm);
    j["wordBound"] = r.wordBound;
    j["nodeBudget"] = r.nodeBudget;
    return j;
}

inline json presentationToJson(const Presentation& p) {
    json j;
    j["basepoint"] = p.basepoint;
    j["componentCount"] = p.componentCount;
    j["generators"] = json::array();
    for (const auto& [u, v] : p.generatorEdges) j["generators"].push_back(json::array({u, v}));
    j["rank"] = p.generatorCount();
    j["relators"] = json::array();
    for (const auto& r : p.relators) j["relators"].push_back(formatWord(r));
    return j;
}

} // namespace unicover
