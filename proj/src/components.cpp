#include "atlas/components.hpp"

#include <algorithm>
#include <cstdlib>

#include "atlas/generic.hpp"
#include "atlas/homext.hpp"

namespace atlas {
namespace {

void requireSincere(const DimensionVector& d, const char* what) {
    if (!d.sincere())
        throw std::domain_error(std::string(what) + " requires a sincere dimension vector");
}

bool inJ(const DimensionVector& d, int i, int j) {
    int bound = std::max(d.at(i), d.at(j));
    for (int l = i + 1; l < j; ++l)
        if (d.at(l) <= bound)
            return false;
    return true;
}

bool inI(const DimensionVector& d, int i, int j) {
    int t = d.size();
    if (d.at(i) == d.at(j))
        return true;
    if (d.at(i) < d.at(j)) {
        int a = j + 1;
        while (a <= t && d.at(a) >= d.at(i))
            ++a;  // d.at(t+1) = 0 < d_i stops the scan at the latest
        for (int l = j + 1; l < a; ++l)
            if (d.at(l) < d.at(j))
                return false;
        return true;
    }
    int b = i - 1;
    while (b >= 1 && d.at(b) >= d.at(j))
        --b;
    for (int l = b + 1; l < i; ++l)
        if (d.at(l) < d.at(i))
            return false;
    return true;
}

}  // namespace

std::vector<std::pair<int, int>> computeJ(const DimensionVector& d) {
    requireSincere(d, "computeJ");
    std::vector<std::pair<int, int>> windows;
    int t = d.size();
    for (int i = 1; i < t; ++i)
        for (int j = i + 1; j <= t; ++j)
            if (inJ(d, i, j))
                windows.emplace_back(i, j);
    return windows;
}

std::vector<std::pair<int, int>> computeI(const DimensionVector& d) {
    std::vector<std::pair<int, int>> windows;
    for (const auto& [i, j] : computeJ(d))
        if (inI(d, i, j))
            windows.emplace_back(i, j);
    return windows;
}

int codimension(const DimensionVector& d, std::pair<int, int> window) {
    requireSincere(d, "codimension");
    auto [i, j] = window;
    if (i < 1 || j > d.size() || i >= j || !inJ(d, i, j))
        throw std::domain_error("window (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not in J(d); its locus is not irreducible");
    return std::abs(d.at(j) - d.at(i)) + 1;
}

Multisegment componentRepresentative(const DimensionVector& d, std::pair<int, int> window) {
    codimension(d, window);  // validates sincerity and membership in J(d)
    auto [i, j] = window;
    RankTriangle capped = maximalRank(d);
    int defect = capped.at(i, j) - 1;
    for (int k = 1; k <= i; ++k)
        for (int l = j; l <= d.size(); ++l)
            if (k < l && capped.at(k, l) > defect)
                capped.set(k, l, defect);
    return multisegmentOfRank(capped);
}

std::vector<ComponentDescriptor> decomposeComplement(const DimensionVector& d) {
    std::vector<ComponentDescriptor> components;
    for (const auto& window : computeI(d)) {
        Multisegment rep = componentRepresentative(d, window);
        RankTriangle rank = rankOfMultisegment(rep);
        components.push_back(
            {window, codimension(d, window), std::move(rep), std::move(rank)});
    }
    return components;
}

bool degenerationLeq(const Multisegment& m, const Multisegment& n) {
    if (dimensionOf(m) != dimensionOf(n))
        throw std::domain_error("degeneration order compares equal dimension vectors only");
    return entrywiseLeq(rankOfMultisegment(m), rankOfMultisegment(n));
}

VerifyReport verifyDecomposition(const DimensionVector& d, long long budget) {
    requireSincere(d, "verifyDecomposition");
    VerifyReport report{d, computeI(d), 0, false, {}};

    const Multisegment generic = genericByLevels(d);
    const RankTriangle maximal = maximalRank(d);

    // (a) Every non-generic multisegment must break some component bound.
    report.enumerated = 0;
    forEachMultisegment(
        d,
        [&](const Multisegment& m) {
            ++report.enumerated;
            if (m == generic)
                return;
            RankTriangle rank = rankOfMultisegment(m);
            for (const auto& [i, j] : report.components)
                if (rank.at(i, j) <= maximal.at(i, j) - 1)
                    return;
            report.failures.push_back("uncovered multisegment " + m.render());
        },
        budget);

    // (b) No representative may satisfy another component's bound,
    // otherwise the components would not be pairwise incomparable.
    for (const auto& [i, j] : report.components) {
        RankTriangle rank = rankOfMultisegment(componentRepresentative(d, {i, j}));
        for (const auto& [k, l] : report.components) {
            if (std::pair(i, j) == std::pair(k, l))
                continue;
            if (rank.at(k, l) <= maximal.at(k, l) - 1)
                report.failures.push_back(
                    "representative of (" + std::to_string(i) + "," + std::to_string(j) +
                    ") lies inside the locus of (" + std::to_string(k) + "," +
                    std::to_string(l) + ")");
        }
    }

    report.pass = report.failures.empty();
    return report;
}

Classification classify(const DimensionVector& d) {
    requireSincere(d, "classify");
    Classification c;

    const Multisegment generic = genericByLevels(d);
    c.generic = generic.distinctCount() == d.size();

    c.pure = true;
    for (const auto& [i, j] : computeI(d))
        if (d.at(i) != d.at(j))
            c.pure = false;

    int l = 1;
    while (l < d.size() && d.at(l) >= d.at(l + 1))
        ++l;
    while (l < d.size() && d.at(l) <= d.at(l + 1))
        ++l;
    c.concave = l == d.size();

    l = 1;
    while (l < d.size() && d.at(l) <= d.at(l + 1))
        ++l;
    while (l < d.size() && d.at(l) >= d.at(l + 1))
        ++l;
    c.unimodal = l == d.size();

    return c;
}

namespace {

bool pureBlock(const std::vector<int>& values, std::size_t lo, std::size_t hi) {
    int boundary = values[lo];
    if (values[hi] != boundary)
        return false;
    for (std::size_t k = lo; k <= hi; ++k)
        if (values[k] < boundary)
            return false;
    // Strip the boundary value and recurse on the remaining support blocks.
    std::vector<int> rest(values.begin() + static_cast<std::ptrdiff_t>(lo),
                          values.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    for (int& v : rest)
        v -= boundary;
    std::size_t k = 0;
    while (k < rest.size()) {
        if (rest[k] == 0) {
            ++k;
            continue;
        }
        std::size_t end = k;
        while (end + 1 < rest.size() && rest[end + 1] > 0)
            ++end;
        if (!pureBlock(rest, k, end))
            return false;
        k = end + 1;
    }
    return true;
}

}  // namespace

bool isPureRecursive(const DimensionVector& d) {
    requireSincere(d, "isPureRecursive");
    return pureBlock(d.entries(), 0, static_cast<std::size_t>(d.size()) - 1);
}

}  // namespace atlas
