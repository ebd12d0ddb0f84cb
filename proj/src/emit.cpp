#include "atlas/emit.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "atlas/counting.hpp"
#include "atlas/generic.hpp"

namespace atlas {
namespace {

using nlohmann::json;

json summandsJson(const Multisegment& m) {
    auto arr = json::array();
    for (const auto& [seg, mult] : m.summands())
        arr.push_back({seg.lo, seg.hi, mult});
    return arr;
}

json rankJson(const RankTriangle& r) {
    json doc;
    doc["d"] = r.dimension().entries();
    auto entries = json::array();
    for (int i = 1; i <= r.size(); ++i)
        for (int j = i + 1; j <= r.size(); ++j)
            if (r.at(i, j) != 0)
                entries.push_back({i, j, r.at(i, j)});
    doc["s"] = std::move(entries);
    return doc;
}

std::string windowText(std::pair<int, int> w) {
    return "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
}

long long runCount(const DimensionVector& d, const std::string& method, long long budget,
                   long long& brute, long long& partitions) {
    brute = partitions = -1;
    if (method == "brute" || method == "both")
        brute = countBrute(d, budget);
    if (method == "partitions" || method == "both")
        partitions = countByPartitions(d);
    return method == "brute" ? brute : partitions;
}

}  // namespace

std::string genericText(const DimensionVector& d) {
    return genericByLevels(d).render() + "\n";
}

std::string genericJson(const DimensionVector& d) {
    Multisegment m = genericByLevels(d);
    json doc;
    doc["d"] = d.entries();
    doc["multisegment"] = m.render();
    doc["summands"] = summandsJson(m);
    doc["distinctSummands"] = m.distinctCount();
    return doc.dump(2) + "\n";
}

std::string genericAscii(const DimensionVector& d) {
    int t = d.size();
    int top = 0;
    for (int l = 1; l <= t; ++l)
        top = std::max(top, d.at(l));
    std::string out;
    for (int level = top; level >= 1; --level) {
        std::string row;
        for (int l = 1; l <= t; ++l) {
            if (l > 1)
                row += (d.at(l - 1) >= level && d.at(l) >= level) ? '-' : ' ';
            row += d.at(l) >= level ? '*' : ' ';
        }
        while (!row.empty() && row.back() == ' ')
            row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

std::string genericSvg(const DimensionVector& d) {
    int t = d.size();
    int top = 0;
    for (int l = 1; l <= t; ++l)
        top = std::max(top, d.at(l));
    const int step = 28;
    const int margin = 20;
    const int radius = 5;
    int width = 2 * margin + step * (t - 1);
    int height = 2 * margin + step * (top > 0 ? top - 1 : 0);
    auto cx = [&](int l) { return margin + step * (l - 1); };
    auto cy = [&](int level) { return margin + step * (top - level); };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    for (int level = 1; level <= top; ++level)
        for (int l = 1; l < t; ++l)
            if (d.at(l) >= level && d.at(l + 1) >= level)
                out += "  <line x1=\"" + std::to_string(cx(l)) + "\" y1=\"" +
                       std::to_string(cy(level)) + "\" x2=\"" + std::to_string(cx(l + 1)) +
                       "\" y2=\"" + std::to_string(cy(level)) +
                       "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (int l = 1; l <= t; ++l)
        for (int level = 1; level <= d.at(l); ++level)
            out += "  <circle cx=\"" + std::to_string(cx(l)) + "\" cy=\"" +
                   std::to_string(cy(level)) + "\" r=\"" + std::to_string(radius) +
                   "\" fill=\"black\"/>\n";
    out += "</svg>\n";
    return out;
}

std::string componentsText(const DimensionVector& d) {
    std::string out = "M(d) = " + genericByLevels(d).render() + "\n";
    auto components = decomposeComplement(d);
    out += "components: " + std::to_string(components.size()) + "\n";
    for (const auto& c : components)
        out += windowText(c.window) + " codim " + std::to_string(c.codim) + " " +
               c.representative.render() + "\n";
    return out;
}

std::string componentsJson(const DimensionVector& d) {
    json doc;
    doc["d"] = d.entries();
    doc["generic"] = genericByLevels(d).render();
    auto arr = json::array();
    for (const auto& c : decomposeComplement(d)) {
        json entry;
        entry["i"] = c.window.first;
        entry["j"] = c.window.second;
        entry["codim"] = c.codim;
        entry["representative"] = c.representative.render();
        entry["rank"] = rankJson(c.rank);
        arr.push_back(std::move(entry));
    }
    doc["components"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string countText(const DimensionVector& d, const std::string& method, long long budget,
                      bool& match) {
    long long brute = 0, partitions = 0;
    long long value = runCount(d, method, budget, brute, partitions);
    match = method != "both" || brute == partitions;
    if (method == "both")
        return "brute=" + std::to_string(brute) + " partitions=" + std::to_string(partitions) +
               "\n";
    return std::to_string(value) + "\n";
}

std::string countJson(const DimensionVector& d, const std::string& method, long long budget,
                      bool& match) {
    long long brute = 0, partitions = 0;
    runCount(d, method, budget, brute, partitions);
    match = method != "both" || brute == partitions;
    json doc;
    doc["d"] = d.entries();
    doc["method"] = method;
    if (brute >= 0)
        doc["brute"] = brute;
    if (partitions >= 0)
        doc["partitions"] = partitions;
    if (method == "both")
        doc["match"] = match;
    return doc.dump(2) + "\n";
}

std::string pairingText(const Segment& from, const Segment& to, const std::string& kind) {
    int value = kind == "hom"   ? homDim(from, to)
                : kind == "ext" ? extDim(from, to)
                                : eulerForm(from, to);
    return std::to_string(value) + "\n";
}

std::string pairingJson(const Segment& from, const Segment& to, const std::string& kind) {
    json doc;
    doc["from"] = from.render();
    doc["to"] = to.render();
    doc["kind"] = kind;
    doc["value"] = kind == "hom"   ? homDim(from, to)
                   : kind == "ext" ? extDim(from, to)
                                   : eulerForm(from, to);
    return doc.dump(2) + "\n";
}

std::string rigidText(const Multisegment& m) {
    long long selfExt = selfExtDim(m);
    return std::string("rigid=") + (selfExt == 0 ? "true" : "false") +
           " selfext=" + std::to_string(selfExt) + "\n";
}

std::string rigidJson(const Multisegment& m) {
    json doc;
    doc["multisegment"] = m.render();
    doc["selfext"] = selfExtDim(m);
    doc["rigid"] = selfExtDim(m) == 0;
    return doc.dump(2) + "\n";
}

std::string verifyText(const VerifyReport& report) {
    std::string out = "d = " + report.d.render() + "\n";
    out += "I(d):";
    for (const auto& w : report.components)
        out += " " + windowText(w);
    out += "\n";
    out += "enumerated " + std::to_string(report.enumerated) + " multisegments\n";
    for (const auto& failure : report.failures)
        out += "counterexample: " + failure + "\n";
    out += std::string("verification: ") + (report.pass ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string verifyJson(const VerifyReport& report) {
    json doc;
    doc["d"] = report.d.entries();
    auto arr = json::array();
    for (const auto& [i, j] : report.components)
        arr.push_back({i, j});
    doc["components"] = std::move(arr);
    doc["enumerated"] = report.enumerated;
    doc["failures"] = report.failures;
    doc["pass"] = report.pass;
    return doc.dump(2) + "\n";
}

std::string classifyText(const DimensionVector& d) {
    Classification c = classify(d);
    auto flag = [](bool b) { return b ? "true" : "false"; };
    return std::string("generic=") + flag(c.generic) + " pure=" + flag(c.pure) +
           " concave=" + flag(c.concave) + " unimodal=" + flag(c.unimodal) + "\n";
}

std::string classifyJson(const DimensionVector& d) {
    Classification c = classify(d);
    json doc;
    doc["d"] = d.entries();
    doc["generic"] = c.generic;
    doc["pure"] = c.pure;
    doc["concave"] = c.concave;
    doc["unimodal"] = c.unimodal;
    return doc.dump(2) + "\n";
}

std::string fanDot(const ExchangeGraph& graph) {
    std::string out = "graph exchange_t" + std::to_string(graph.t) + " {\n";
    for (std::size_t k = 0; k < graph.vertices.size(); ++k)
        out += "  v" + std::to_string(k) + " [label=\"" +
               tiltingOfTree(graph.vertices[k]).render() + "\"];\n";
    for (const auto& e : graph.edges)
        out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) + " [label=\"" +
               e.exchanged.first.render() + "/" + e.exchanged.second.render() + "\"];\n";
    out += "}\n";
    return out;
}

std::string fanJson(const ExchangeGraph& graph) {
    json doc;
    doc["t"] = graph.t;
    auto trees = json::array();
    for (const auto& tree : graph.vertices) {
        json entry;
        entry["tilting"] = tiltingOfTree(tree).render();
        auto spans = json::array();
        for (const auto& [lo, hi] : tree.spans())
            spans.push_back({lo, hi});
        entry["leafSpans"] = std::move(spans);
        trees.push_back(std::move(entry));
    }
    doc["trees"] = std::move(trees);
    auto edges = json::array();
    for (const auto& e : graph.edges) {
        json entry;
        entry["a"] = e.a;
        entry["b"] = e.b;
        entry["exchanged"] = {e.exchanged.first.render(), e.exchanged.second.render()};
        edges.push_back(std::move(entry));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

std::string locateText(const DimensionVector& d, const LocateResult& result) {
    std::string out = "d = " + d.render() + "\n";
    out += "minimal cone:";
    for (std::size_t k = 0; k < result.minimalCone.segments.size(); ++k)
        out += " " + result.minimalCone.segments[k].render() + "*" +
               std::to_string(result.minimalCoordinates[k]);
    out += "\n";
    out += "containing trees: " + std::to_string(result.treeIndices.size()) + "\n";
    for (std::size_t k = 0; k < result.treeIndices.size(); ++k) {
        out += "tree " + std::to_string(result.treeIndices[k]) + " coords";
        for (long long c : result.treeCoordinates[k])
            out += " " + std::to_string(c);
        out += "\n";
    }
    out += std::string("generic: ") + (result.genericDimension ? "true" : "false") + "\n";
    return out;
}

std::string locateJson(const DimensionVector& d, const LocateResult& result) {
    json doc;
    doc["d"] = d.entries();
    json cone;
    auto segs = json::array();
    for (const auto& s : result.minimalCone.segments)
        segs.push_back(s.render());
    cone["segments"] = std::move(segs);
    cone["coordinates"] = result.minimalCoordinates;
    doc["minimalCone"] = std::move(cone);
    auto trees = json::array();
    for (std::size_t k = 0; k < result.treeIndices.size(); ++k) {
        json entry;
        entry["index"] = result.treeIndices[k];
        entry["coordinates"] = result.treeCoordinates[k];
        trees.push_back(std::move(entry));
    }
    doc["trees"] = std::move(trees);
    doc["generic"] = result.genericDimension;
    return doc.dump(2) + "\n";
}

}  // namespace atlas
