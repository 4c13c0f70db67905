// unicover — command-line frontend. Every command writes one JSON report to
// stdout (or --output); a one-line summary goes to stderr. `corpus emit`
// writes the bare tower instead of a report so it can be piped back in.
//
// Exit codes: 0 success / all checks pass, 1 usage or input error, 2 some
// check failed (or a build overflowed), 3 a verdict stayed Unknown within
// the configured budgets.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unicover/harness.hpp>
#include <unicover/json_io.hpp>
#include <unicover/version.hpp>

using namespace unicover;

namespace {

std::string isoTimestamp() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Output {
    std::string command;
    std::string path;   // empty = stdout
    json budgets;

    void write(const json& doc) const {
        if (path.empty()) {
            std::cout << doc.dump(2) << "\n";
            return;
        }
        std::ofstream file(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        file << doc.dump(2) << "\n";
    }

    int report(const json& payload, int code, const std::string& summary) const {
        json doc;
        doc["schema"] = kReportSchema;
        doc["version"] = kVersion;
        doc["command"] = command;
        doc["generatedAt"] = isoTimestamp();   // the one non-reproducible field
        if (!budgets.is_null()) doc["budgets"] = budgets;
        for (const auto& [k, v] : payload.items()) doc[k] = v;
        write(doc);
        std::cerr << summary << "\n";
        return code;
    }

    int error(const std::string& kind, const std::string& message, int code) const {
        json payload;
        payload["error"] = json{{"kind", kind}, {"message", message}};
        return report(payload, code, "error (" + kind + "): " + message);
    }

    // bare artifact, no report header: pipelines feed it back in as input
    int artifact(const json& doc, const std::string& summary) const {
        write(doc);
        std::cerr << summary << "\n";
        return 0;
    }
};

std::string inputName(const std::string& path) { return path == "-" ? "stdin" : path; }

json readJsonInput(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw JsonFormatError("cannot open input: " + path);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw JsonFormatError("JSON parse error in " + inputName(path) + ": " + e.what());
    }
}

ScaleTower loadTower(const std::string& path) {
    ScaleTower tw = towerFromJson(readJsonInput(path), inputName(path));
    tw.validateOrThrow();
    return tw;
}

// a path to a subgroup JSON when the file exists, inline comma-separated
// generator words otherwise
SubgroupSpec loadSubgroup(const std::string& arg) {
    if (arg == "-") return subgroupFromJson(readJsonInput(arg), "stdin");
    if (std::ifstream probe(arg); probe.good()) return subgroupFromJson(readJsonInput(arg), arg);
    SubgroupSpec s;
    s.name = "H";
    std::istringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = tok.find_last_not_of(" \t");
        s.generators.push_back(parseWord(tok.substr(b, e - b + 1)));
    }
    if (s.generators.empty()) throw WordError("subgroup spec has no generators: " + arg);
    return s;
}

struct BudgetFlags {
    long nodeBudget = 100000;
    int wordBound = 16;
    long enumBudget = 20000;
    int maxCosets = 10000;

    void attach(CLI::App* cmd) {
        cmd->add_option("--node-budget", nodeBudget, "rewriting-engine node budget");
        cmd->add_option("--word-bound", wordBound, "word-length bound for searches");
        cmd->add_option("--enum-budget", enumBudget, "thread/word enumeration budget");
        cmd->add_option("--max-cosets", maxCosets, "coset table size cap");
    }

    GpLimits limits() const {
        GpLimits l;
        l.engine.nodeBudget = nodeBudget;
        l.wordBound = wordBound;
        l.enumBudget = enumBudget;
        l.maxCosets = maxCosets;
        return l;
    }

    json toJson() const {
        return json{{"nodeBudget", nodeBudget},
                    {"wordBound", wordBound},
                    {"enumBudget", enumBudget},
                    {"maxCosets", maxCosets}};
    }
};

// ----- commands -----

int cmdSpaceValidate(Output& out, const std::string& file) {
    ScaleTower tw = towerFromJson(readJsonInput(file), inputName(file));
    json payload;
    payload["check"] = "space-validate";
    try {
        tw.validateOrThrow();
    } catch (const TowerError& e) {
        payload["verdict"] = "Fail";
        payload["witness"] = json{{"message", e.what()}};
        return out.report(payload, 2, std::string("space validate: Fail — ") + e.what());
    }
    json pairs = json::array();
    for (int i = 1; i <= tw.levelCount(); ++i)
        pairs.push_back(tw.level(i).pairs.size());
    payload["verdict"] = "Pass";
    payload["summary"] = json{{"points", tw.pointCount()},
                              {"levels", tw.levelCount()},
                              {"pairsPerLevel", pairs},
                              {"hausdorff", isHausdorffTower(tw)},
                              {"chainConnected", isChainConnectedTower(tw)}};
    return out.report(payload, 0,
                      "space validate: Pass (" + std::to_string(tw.pointCount()) + " points, " +
                          std::to_string(tw.levelCount()) + " levels)");
}

int cmdPi1(Output& out, const std::string& file, int level, int basepoint) {
    ScaleTower tw = loadTower(file);
    if (level == 0) level = tw.levelCount();
    if (level < 1 || level > tw.levelCount())
        throw TowerError("level index out of range: " + std::to_string(level));
    tw.checkPoint(basepoint);
    Presentation pr = presentPi1(tw, level, basepoint);
    json payload;
    payload["check"] = "pi1";
    payload["level"] = level;
    payload["basepoint"] = basepoint;
    payload["presentation"] = presentationToJson(pr);
    return out.report(payload, 0,
                      "pi1: level " + std::to_string(level) + ", " +
                          std::to_string(pr.generatorCount()) + " generators, " +
                          std::to_string(pr.relators.size()) + " relators");
}

int cmdCech(Output& out, const std::string& file, int basepoint, const GpLimits& limits) {
    ScaleTower tw = loadTower(file);
    CechGroup G(tw, basepoint, limits);
    json payload;
    payload["check"] = "cech";
    payload["basepoint"] = basepoint;
    payload["restricted"] = G.restrictedToComponent();
    json levels = json::array();
    for (int i = 1; i <= G.levelCount(); ++i) {
        const Presentation& pr = G.presentation(i);
        levels.push_back(json{{"level", i},
                              {"generators", pr.generatorCount()},
                              {"relators", pr.relators.size()}});
    }
    payload["levels"] = levels;
    InjectivityProfile inj = G.bondingInjectivity();
    payload["bondingInjectivity"] = injectivityProfileToJson(inj);
    JoinabilityReport joins = G.isLocallyUniformJoinable();
    payload["joinability"] = joinabilityToJson(joins);
    bool unknown = inj.anyInjective.verdict == Verdict::Unknown ||
                   joins.ownScale.verdict == Verdict::Unknown ||
                   joins.truncatedForm.verdict == Verdict::Unknown;
    return out.report(payload, unknown ? 3 : 0,
                      std::string("cech: ") + std::to_string(G.levelCount()) +
                          " levels, joinable at own scale: " + verdictName(joins.ownScale.verdict) +
                          ", some bonding injective: " + verdictName(inj.anyInjective.verdict));
}

int cmdCoverBuild(Output& out, const std::string& file, const std::string& subgroupArg,
                  int basepoint, int maxCosets, const GpLimits& limits) {
    ScaleTower tw = loadTower(file);
    SubgroupSpec H = loadSubgroup(subgroupArg);
    CoverBuild b = buildCover(tw, basepoint, H, maxCosets, true, limits);
    json payload;
    payload["check"] = "cover-build";
    switch (b.status) {
        case CoverBuild::Status::Overflow:
            payload["verdict"] = "Fail";
            payload["status"] = "overflow";
            payload["cosetsDefined"] = b.cosetsDefined;
            return out.report(payload, 2,
                              "cover build: coset enumeration overflowed (" +
                                  std::to_string(b.cosetsDefined) + " cosets defined, cap " +
                                  std::to_string(maxCosets) + ")");
        case CoverBuild::Status::UnknownShortness: {
            payload["verdict"] = "Unknown";
            payload["status"] = "unknown-shortness";
            json up = json::array();
            for (const auto& [lvl, u, v] : b.unknownPairs) up.push_back(json::array({lvl, u, v}));
            payload["unknownPairs"] = up;
            return out.report(payload, 3,
                              "cover build: " + std::to_string(b.unknownPairs.size()) +
                                  " pairs had no short class within budget");
        }
        case CoverBuild::Status::Ok:
            break;
    }
    payload["verdict"] = "Pass";
    payload["cosets"] = b.cover->cosetCount;
    payload["totalPoints"] = b.cover->total.pointCount();
    payload["cover"] = coverToJson(*b.cover, maxCosets);
    return out.report(payload, 0,
                      "cover build: " + std::to_string(b.cover->cosetCount) + " cosets, " +
                          std::to_string(b.cover->total.pointCount()) + " total points");
}

int cmdCoverLift(Output& out, const std::string& coverFile, const std::string& chainStr,
                 int level, int start) {
    json cj = readJsonInput(coverFile);
    // accept a `cover build` report directly: the dump sits under "cover"
    if (!cj.contains("base") && cj.contains("cover")) cj = cj.at("cover");
    CoverContext ctx = coverContextFromJson(cj, inputName(coverFile));
    ctx.base.validateOrThrow();
    out.budgets = json{{"maxCosets", ctx.maxCosets}};
    CoverBuild b = buildCover(ctx.base, ctx.basepoint, ctx.H, ctx.maxCosets);
    if (b.status != CoverBuild::Status::Ok)
        return out.error("cover", "recorded cover context does not rebuild", 2);
    const CoverSpace& cv = *b.cover;
    if (json(cv.projection.vertexMap) != cj.at("projection") ||
        towerToJson(cv.total) != cj.at("total"))
        return out.error("cover", "cover dump does not match its deterministic rebuild", 2);

    Chain c;
    c.level = level == 0 ? cv.base.levelCount() : level;
    std::istringstream ss(chainStr);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int p = std::stoi(tok, &pos);
        if (pos != tok.size()) throw ChainError("bad chain point: " + tok);
        c.seq.push_back(p);
    }
    int startTotal = start >= 0 ? start : cv.basepointFiber;
    if (startTotal >= cv.total.pointCount())
        throw ChainError("start point outside the total space: " + std::to_string(startTotal));

    ChainLift lift = liftChain(cv, c, startTotal);
    json payload;
    payload["check"] = "cover-lift";
    payload["level"] = c.level;
    payload["chain"] = c.seq;
    payload["start"] = startTotal;
    payload["status"] = triToJson(lift.status);
    if (lift.status.verdict == Verdict::Yes) {
        payload["lift"] = lift.lift.seq;
        payload["end"] = lift.lift.end();
        payload["unique"] = lift.unique;
        return out.report(payload, 0,
                          "cover lift: lifted to end " + std::to_string(lift.lift.end()) +
                              (lift.unique ? " (unique)" : " (not unique)"));
    }
    payload["stuckAt"] = lift.stuckAt;
    return out.report(payload, 2, "cover lift: stuck at position " + std::to_string(lift.stuckAt));
}

int cmdVerifyMap(Output& out, const std::string& srcFile, const std::string& dstFile,
                 const std::string& mapFile, bool classify, int wordBound) {
    ScaleTower src = loadTower(srcFile);
    ScaleTower dst = loadTower(dstFile);
    std::vector<int> vmap = vertexMapFromJson(readJsonInput(mapFile), inputName(mapFile));
    TowerMap f{src, dst, std::move(vmap)};
    f.validateOrThrow();
    out.budgets = json{{"wordBound", wordBound}};
    Classification cls = classifyMap(f, wordBound);
    json payload;
    payload["check"] = "verify-map";
    payload["reports"] = json::array();
    int fails = 0, unknowns = 0;
    for (const Report& r : cls.bundle) {
        payload["reports"].push_back(r.toJson());
        if (r.fail()) ++fails;
        else if (!r.pass()) ++unknowns;
    }
    auto lvl = findTransverseEntourage(f);
    payload["transverseLevel"] = lvl ? json(*lvl) : json(nullptr);
    // without --classify the verified claim is the check bundle; with it, the
    // classification itself (a generalized covering may fail plain uniqueness)
    int code = fails > 0 ? 2 : unknowns > 0 ? 3 : 0;
    std::string summary = "verify map: " + std::to_string(cls.bundle.size()) + " checks, " +
                          std::to_string(fails) + " fail, " + std::to_string(unknowns) + " unknown";
    if (classify) {
        payload["classification"] = mapClassName(cls.cls);
        code = cls.cls == MapClass::Neither        ? 2
               : cls.cls == MapClass::Undetermined ? 3
                                                   : 0;
        summary += std::string(", class ") + mapClassName(cls.cls);
    }
    return out.report(payload, code, summary);
}

int cmdVerifyLaws(Output& out, const std::string& suite, unsigned long long seed, int instances) {
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = lawSuiteNames();
    } else {
        auto names = lawSuiteNames();
        if (std::find(names.begin(), names.end(), suite) == names.end())
            throw std::invalid_argument("unknown law suite: " + suite);
        suites = {suite};
    }
    out.budgets = json{{"seed", seed}, {"instances", instances}};
    HarnessResult hr = lawHarness(suites, defaultHarnessInstances(seed, instances), seed);
    json payload;
    payload["check"] = "verify-laws";
    json hj = hr.toJson();
    for (const auto& [k, v] : hj.items()) payload[k] = v;
    int holds = 0, skipped = 0, undecided = 0;
    for (const auto& s : hr.suites) {
        holds += s.holds;
        skipped += s.skipped;
        undecided += s.undecided;
    }
    int code = hr.conclusionFailures() > 0 ? 2 : hr.corpusUndecided() > 0 ? 3 : 0;
    return out.report(payload, code,
                      "verify laws: " + std::to_string(hr.suites.size()) + " suites, " +
                          std::to_string(holds) + " hold, " +
                          std::to_string(hr.conclusionFailures()) + " conclusion failures, " +
                          std::to_string(skipped) + " skipped, " + std::to_string(undecided) +
                          " undecided");
}

int cmdAnalyzeSubgroup(Output& out, const std::string& file, const std::string& subgroupArg,
                       int basepoint, const std::string& word, const GpLimits& limits) {
    ScaleTower tw = loadTower(file);
    CechGroup G(tw, basepoint, limits);
    SubgroupSpec H = loadSubgroup(subgroupArg);
    ClosureReport cr = G.isClosedSubgroup(H);
    json payload;
    payload["check"] = "analyze-subgroup";
    payload["basepoint"] = basepoint;
    payload["H"] = subgroupToJson(H);
    payload["closure"] = closureReportToJson(cr);
    if (!cr.escaping.empty()) payload["note"] = "escaping family detected";
    if (!word.empty()) {
        GroupWord w = parseWord(word);
        payload["word"] = json{{"word", word},
                               {"profile", membershipProfileToJson(G.closureMember(H, w))}};
    }
    int code = cr.closed.verdict == Verdict::Unknown ? 3 : 0;
    return out.report(payload, code,
                      std::string("analyze subgroup: closed=") + verdictName(cr.closed.verdict) +
                          ", " + std::to_string(cr.escaping.size()) + " escaping families");
}

int cmdCorpusList(Output& out) {
    json payload;
    payload["check"] = "corpus-list";
    payload["recipes"] = json::array();
    for (const auto& r : corpusRecipes())
        payload["recipes"].push_back(
            json{{"name", r.name}, {"parameters", r.parameters}, {"notes", r.notes}});
    return out.report(payload, 0,
                      "corpus list: " + std::to_string(corpusRecipes().size()) + " recipes");
}

long long asInt(const std::string& s) {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

double asDouble(const std::string& s) {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
    return v;
}

ScaleTower makeCorpusTower(const std::string& name, const std::vector<std::string>& params) {
    auto need = [&](size_t atLeast, const char* usage) {
        if (params.size() < atLeast)
            throw std::invalid_argument("corpus emit " + name + ": expected parameters " + usage);
    };
    if (name == "cycle") {
        need(2, "<n> <threshold...>");
        std::vector<Rational> th;
        for (size_t i = 1; i < params.size(); ++i) th.push_back(Rational::parse(params[i]));
        return cycleSpace(static_cast<int>(asInt(params[0])), th);
    }
    if (name == "hawaiian") {
        need(1, "<depth>");
        return hawaiianTower(static_cast<int>(asInt(params[0])));
    }
    if (name == "gapped") {
        need(2, "<n> <gapLevel>");
        return gappedCycle(static_cast<int>(asInt(params[0])), static_cast<int>(asInt(params[1])));
    }
    if (name == "twin") return twinPoints().doubled;
    if (name == "torus") {
        need(3, "<m> <n> <threshold...>");
        std::vector<Rational> th;
        for (size_t i = 2; i < params.size(); ++i) th.push_back(Rational::parse(params[i]));
        return torusGrid(static_cast<int>(asInt(params[0])), static_cast<int>(asInt(params[1])), th);
    }
    if (name == "random") {
        need(3, "<seed> <n> <density...>");
        std::vector<double> dens;
        for (size_t i = 2; i < params.size(); ++i) dens.push_back(asDouble(params[i]));
        return randomTower(static_cast<unsigned long long>(asInt(params[0])),
                           static_cast<int>(asInt(params[1])), dens);
    }
    throw std::invalid_argument("unknown corpus recipe: " + name + " (see `unicover corpus list`)");
}

int cmdCorpusEmit(Output& out, const std::string& name, const std::vector<std::string>& params) {
    ScaleTower tw = makeCorpusTower(name, params);
    return out.artifact(towerToJson(tw),
                        "corpus emit " + name + ": " + std::to_string(tw.pointCount()) +
                            " points, " + std::to_string(tw.levelCount()) + " levels");
}

} // namespace

int main(int argc, char** argv) {
    Output out;
    for (int i = 0; i < argc; ++i) {
        if (i) out.command += ' ';
        out.command += argv[i];
    }

    CLI::App app{"finite scale towers: groups, covers, verification"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string outPath;
    app.add_option("-o,--output", outPath, "write the JSON report here instead of stdout");

    std::function<int()> run;

    auto* space = app.add_subcommand("space", "tower-level operations");
    space->require_subcommand(1);
    auto* sval = space->add_subcommand("validate", "check tower well-formedness");
    std::string svalFile;
    sval->add_option("file", svalFile, "tower JSON ('-' for stdin)")->required();
    sval->callback([&] { run = [&] { return cmdSpaceValidate(out, svalFile); }; });

    auto* pi1 = app.add_subcommand("pi1", "edge-path group presentation at one level");
    std::string pi1File;
    int pi1Level = 0, pi1Base = 0;
    pi1->add_option("file", pi1File, "tower JSON ('-' for stdin)")->required();
    pi1->add_option("--level", pi1Level, "tower level (default: finest)");
    pi1->add_option("--basepoint", pi1Base, "basepoint id");
    pi1->callback([&] { run = [&] { return cmdPi1(out, pi1File, pi1Level, pi1Base); }; });

    auto* cech = app.add_subcommand("cech", "per-level groups, bondings, joinability");
    std::string cechFile;
    int cechBase = 0;
    BudgetFlags cechFlags;
    cech->add_option("file", cechFile, "tower JSON ('-' for stdin)")->required();
    cech->add_option("--basepoint", cechBase, "basepoint id");
    cechFlags.attach(cech);
    cech->callback([&] {
        run = [&] {
            out.budgets = cechFlags.toJson();
            return cmdCech(out, cechFile, cechBase, cechFlags.limits());
        };
    });

    auto* cover = app.add_subcommand("cover", "covering-space construction and lifts");
    cover->require_subcommand(1);
    auto* cbuild = cover->add_subcommand("build", "build the cover attached to a subgroup");
    std::string cbFile, cbSubgroup;
    int cbBase = 0;
    BudgetFlags cbFlags;
    cbuild->add_option("file", cbFile, "tower JSON ('-' for stdin)")->required();
    cbuild->add_option("--subgroup", cbSubgroup, "subgroup JSON file, or inline words 'g1^3, g2'")
        ->required();
    cbuild->add_option("--basepoint", cbBase, "basepoint id");
    cbFlags.attach(cbuild);
    cbuild->callback([&] {
        run = [&] {
            out.budgets = cbFlags.toJson();
            return cmdCoverBuild(out, cbFile, cbSubgroup, cbBase, cbFlags.maxCosets,
                                 cbFlags.limits());
        };
    });
    auto* clift = cover->add_subcommand("lift", "lift a base chain through a built cover");
    std::string clFile, clChain;
    int clLevel = 0, clStart = -1;
    clift->add_option("cover", clFile, "cover dump JSON ('-' for stdin)")->required();
    clift->add_option("--chain", clChain, "comma-separated base point ids")->required();
    clift->add_option("--level", clLevel, "chain level (default: finest)");
    clift->add_option("--start", clStart, "total-space start point (default: basepoint fiber)");
    clift->callback([&] { run = [&] { return cmdCoverLift(out, clFile, clChain, clLevel, clStart); }; });

    auto* verify = app.add_subcommand("verify", "axiom checkers and the law harness");
    verify->require_subcommand(1);
    auto* vmap = verify->add_subcommand("map", "run the covering-axiom checks on a tower map");
    std::string vmSrc, vmDst, vmMap;
    bool vmClassify = false;
    int vmWordBound = 8;
    vmap->add_option("source", vmSrc, "source tower JSON")->required();
    vmap->add_option("target", vmDst, "target tower JSON")->required();
    vmap->add_option("--map", vmMap, "vertex map JSON (bare array or {\"map\": [...]})")->required();
    vmap->add_flag("--classify", vmClassify, "also emit the classification verdict");
    vmap->add_option("--word-bound", vmWordBound, "word-length bound for the lifting search");
    vmap->callback([&] {
        run = [&] { return cmdVerifyMap(out, vmSrc, vmDst, vmMap, vmClassify, vmWordBound); };
    });
    auto* vlaws = verify->add_subcommand("laws", "run law suites over the instance matrix");
    std::string vlSuite = "all";
    unsigned long long vlSeed = 20240901ULL;
    int vlInstances = 50;
    vlaws->add_option("--suite", vlSuite, "suite name, or 'all'");
    vlaws->add_option("--seed", vlSeed, "seed for the random instances");
    vlaws->add_option("--instances", vlInstances, "number of random instances");
    vlaws->callback([&] { run = [&] { return cmdVerifyLaws(out, vlSuite, vlSeed, vlInstances); }; });

    auto* analyze = app.add_subcommand("analyze", "subgroup analyses");
    analyze->require_subcommand(1);
    auto* asub = analyze->add_subcommand("subgroup", "closure profile of a subgroup");
    std::string asFile, asSubgroup, asWord;
    int asBase = 0;
    BudgetFlags asFlags;
    asub->add_option("file", asFile, "tower JSON ('-' for stdin)")->required();
    asub->add_option("--subgroup", asSubgroup, "subgroup JSON file, or inline words")->required();
    asub->add_option("--basepoint", asBase, "basepoint id");
    asub->add_option("--word", asWord, "also profile this word's closure membership");
    asFlags.attach(asub);
    asub->callback([&] {
        run = [&] {
            out.budgets = asFlags.toJson();
            return cmdAnalyzeSubgroup(out, asFile, asSubgroup, asBase, asWord, asFlags.limits());
        };
    });

    auto* corpus = app.add_subcommand("corpus", "deterministic example towers");
    corpus->require_subcommand(1);
    auto* clist = corpus->add_subcommand("list", "list the recipes");
    clist->callback([&] { run = [&] { return cmdCorpusList(out); }; });
    auto* cemit = corpus->add_subcommand("emit", "emit a recipe's tower as bare JSON");
    std::string ceName;
    std::vector<std::string> ceParams;
    cemit->add_option("name", ceName, "recipe name")->required();
    cemit->add_option("params", ceParams, "recipe parameters");
    cemit->callback([&] { run = [&] { return cmdCorpusEmit(out, ceName, ceParams); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        out.error("usage", e.what(), 1);
        return 1;
    }
    out.path = outPath;

    try {
        return run();
    } catch (const JsonFormatError& e) {
        return out.error("format", e.what(), 1);
    } catch (const WordError& e) {
        return out.error("word", e.what(), 1);
    } catch (const ChainError& e) {
        return out.error("chain", e.what(), 1);
    } catch (const TowerError& e) {
        return out.error("tower", e.what(), 1);
    } catch (const std::invalid_argument& e) {
        return out.error("usage", e.what(), 1);
    } catch (const std::exception& e) {
        return out.error("internal", e.what(), 1);
    }
}
