#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atlas/components.hpp"
#include "atlas/config.hpp"
#include "atlas/core.hpp"
#include "atlas/counting.hpp"
#include "atlas/emit.hpp"
#include "atlas/fan.hpp"
#include "atlas/generic.hpp"
#include "atlas/homext.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;

struct Options {
    std::string dims;
    std::string multisegment;
    std::string from;
    std::string to;
    std::string kind = "hom";
    std::string method = "both";
    std::string format = "text";
    std::string emit = "dot";
    std::string configPath;
    std::string batchFile;
    bool jsonOut = false;
    int treeT = 0;
    long long budgetFlag = 0;
    int treeMaxFlag = 0;
};

atlas::Settings resolveSettings(const Options& opt) {
    atlas::Settings settings;
    if (!opt.configPath.empty())
        settings = atlas::loadConfigFile(opt.configPath, settings);
    settings = atlas::applyEnvironment(settings);
    if (opt.budgetFlag > 0)
        settings.enumBudget = opt.budgetFlag;
    if (opt.treeMaxFlag > 0)
        settings.treeMax = opt.treeMaxFlag;
    return settings;
}

int runGeneric(const Options& opt) {
    atlas::DimensionVector d = atlas::DimensionVector::parse(opt.dims);
    if (opt.format == "json")
        std::cout << atlas::genericJson(d);
    else if (opt.format == "ascii")
        std::cout << atlas::genericAscii(d);
    else if (opt.format == "svg")
        std::cout << atlas::genericSvg(d);
    else
        std::cout << atlas::genericText(d);
    return kExitOk;
}

int runComponents(const Options& opt) {
    atlas::DimensionVector d = atlas::DimensionVector::parse(opt.dims);
    std::cout << (opt.jsonOut ? atlas::componentsJson(d) : atlas::componentsText(d));
    return kExitOk;
}

int runCount(const Options& opt, const atlas::Settings& settings) {
    atlas::DimensionVector d = atlas::DimensionVector::parse(opt.dims);
    bool match = true;
    std::string out = opt.jsonOut ? atlas::countJson(d, opt.method, settings.enumBudget, match)
                                  : atlas::countText(d, opt.method, settings.enumBudget, match);
    std::cout << out;
    if (!match) {
        std::cerr << "count mismatch between methods\n";
        return kExitFailure;
    }
    return kExitOk;
}

int runPairing(const Options& opt) {
    atlas::Segment from = atlas::Segment::parse(opt.from);
    atlas::Segment to = atlas::Segment::parse(opt.to);
    std::cout << (opt.jsonOut ? atlas::pairingJson(from, to, opt.kind)
                              : atlas::pairingText(from, to, opt.kind));
    return kExitOk;
}

int runRigid(const Options& opt) {
    atlas::Multisegment m = atlas::Multisegment::parse(opt.multisegment);
    std::cout << (opt.jsonOut ? atlas::rigidJson(m) : atlas::rigidText(m));
    return kExitOk;
}

int runVerify(const Options& opt, const atlas::Settings& settings) {
    atlas::DimensionVector d = atlas::DimensionVector::parse(opt.dims);
    atlas::VerifyReport report = atlas::verifyDecomposition(d, settings.enumBudget);
    std::cout << (opt.jsonOut ? atlas::verifyJson(report) : atlas::verifyText(report));
    return report.pass ? kExitOk : kExitFailure;
}

int runClassify(const Options& opt) {
    atlas::DimensionVector d = atlas::DimensionVector::parse(opt.dims);
    std::cout << (opt.jsonOut ? atlas::classifyJson(d) : atlas::classifyText(d));
    return kExitOk;
}

int runFan(const Options& opt, const atlas::Settings& settings) {
    atlas::ExchangeGraph graph = atlas::exchangeGraph(opt.treeT, settings.treeMax);
    std::cout << (opt.emit == "json" ? atlas::fanJson(graph) : atlas::fanDot(graph));
    return kExitOk;
}

int runLocate(const Options& opt, const atlas::Settings& settings) {
    atlas::DimensionVector d = atlas::DimensionVector::parse(opt.dims);
    atlas::LocateResult result = atlas::locate(d, settings.treeMax);
    std::cout << (opt.jsonOut ? atlas::locateJson(d, result) : atlas::locateText(d, result));
    return kExitOk;
}

int runBatch(const Options& opt, const atlas::Settings& settings) {
    std::ifstream in(opt.batchFile);
    if (!in) {
        std::cerr << "cannot read batch file '" << opt.batchFile << "'\n";
        return kExitNoInput;
    }
    long long total = 0;
    long long passed = 0;
    std::string line;
    long long lineNumber = 0;
    while (std::getline(in, line)) {
        ++lineNumber;
        std::istringstream parts(line);
        std::string first;
        if (!(parts >> first) || first[0] == '#')
            continue;
        std::string command = "components";
        std::string dims = first;
        if (first.find_first_not_of("0123456789,") != std::string::npos) {
            command = first;
            if (!(parts >> dims))
                dims.clear();
        }
        ++total;
        std::string status = "ok";
        try {
            atlas::DimensionVector d = atlas::DimensionVector::parse(dims);
            if (command == "components") {
                atlas::decomposeComplement(d);
            } else if (command == "verify") {
                if (!atlas::verifyDecomposition(d, settings.enumBudget).pass)
                    status = "fail (verification)";
            } else if (command == "count") {
                if (atlas::countBrute(d, settings.enumBudget) != atlas::countByPartitions(d))
                    status = "fail (count mismatch)";
            } else if (command == "classify") {
                atlas::classify(d);
            } else if (command == "generic") {
                atlas::genericByLevels(d);
            } else if (command == "locate") {
                atlas::locate(d, settings.treeMax);
            } else {
                status = "fail (unknown command '" + command + "')";
            }
        } catch (const std::exception& e) {
            status = std::string("fail (") + e.what() + ")";
        }
        if (status == "ok")
            ++passed;
        std::cout << lineNumber << ": " << command << " " << dims << ": " << status << "\n";
    }
    std::cout << "passed " << passed << "/" << total << "\n";
    return passed == total ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orbit combinatorics for equioriented type-A quivers"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--config", opt.configPath, "key=value file with enum_budget / tree_t_max");
    app.add_option("--budget", opt.budgetFlag, "enumeration budget override");
    app.add_option("--tree-max", opt.treeMaxFlag, "tree enumeration bound override");

    auto* generic = app.add_subcommand("generic", "dense-orbit multisegment M(d)");
    generic->add_option("-d,--dims", opt.dims, "dimension vector")->required();
    generic->add_option("--format", opt.format, "text|json|ascii|svg")
        ->check(CLI::IsMember({"text", "json", "ascii", "svg"}));

    auto* components = app.add_subcommand("components", "irreducible components of the complement");
    components->add_option("-d,--dims", opt.dims, "dimension vector")->required();
    components->add_flag("--json", opt.jsonOut, "JSON output");

    auto* count = app.add_subcommand("count", "number of orbits");
    count->add_option("-d,--dims", opt.dims, "dimension vector")->required();
    count->add_option("--method", opt.method, "brute|partitions|both")
        ->check(CLI::IsMember({"brute", "partitions", "both"}));
    count->add_flag("--json", opt.jsonOut, "JSON output");

    auto* pairing = app.add_subcommand("pairing", "hom/ext/euler pairing of two segments");
    pairing->add_option("--from", opt.from, "first segment")->required();
    pairing->add_option("--to", opt.to, "second segment")->required();
    pairing->add_option("--kind", opt.kind, "hom|ext|euler")
        ->check(CLI::IsMember({"hom", "ext", "euler"}));
    pairing->add_flag("--json", opt.jsonOut, "JSON output");

    auto* rigid = app.add_subcommand("rigid", "selfextension test for a multisegment");
    rigid->add_option("-m,--multisegment", opt.multisegment, "multisegment")->required();
    rigid->add_flag("--json", opt.jsonOut, "JSON output");

    auto* verify = app.add_subcommand("verify", "exhaustive decomposition check");
    verify->add_option("-d,--dims", opt.dims, "dimension vector")->required();
    verify->add_flag("--json", opt.jsonOut, "JSON output");

    auto* classifySub = app.add_subcommand("classify", "generic/pure/concave/unimodal flags");
    classifySub->add_option("-d,--dims", opt.dims, "dimension vector")->required();
    classifySub->add_flag("--json", opt.jsonOut, "JSON output");

    auto* fan = app.add_subcommand("fan", "tilting exchange graph");
    fan->add_option("--t", opt.treeT, "number of quiver vertices")->required();
    fan->add_option("--emit", opt.emit, "dot|json")->check(CLI::IsMember({"dot", "json"}));

    auto* locateSub = app.add_subcommand("locate", "position of d in the tilting fan");
    locateSub->add_option("-d,--dims", opt.dims, "dimension vector")->required();
    locateSub->add_flag("--json", opt.jsonOut, "JSON output");

    auto* batch = app.add_subcommand("batch", "run a computation per input line");
    batch->add_option("file", opt.batchFile, "newline-separated dimension vectors")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        atlas::Settings settings = resolveSettings(opt);
        if (generic->parsed())
            return runGeneric(opt);
        if (components->parsed())
            return runComponents(opt);
        if (count->parsed())
            return runCount(opt, settings);
        if (pairing->parsed())
            return runPairing(opt);
        if (rigid->parsed())
            return runRigid(opt);
        if (verify->parsed())
            return runVerify(opt, settings);
        if (classifySub->parsed())
            return runClassify(opt);
        if (fan->parsed())
            return runFan(opt, settings);
        if (locateSub->parsed())
            return runLocate(opt, settings);
        if (batch->parsed())
            return runBatch(opt, settings);
    } catch (const atlas::budget_error& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
