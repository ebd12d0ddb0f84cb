#include "atlas/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "atlas/generic.hpp"
#include "atlas/homext.hpp"

namespace atlas {
namespace {

using Span = std::pair<int, int>;

bool nestedOrDisjoint(Span a, Span b) {
    bool aInB = b.first <= a.first && a.second <= b.second;
    bool bInA = a.first <= b.first && b.second <= a.second;
    bool disjoint = a.second < b.first || b.second < a.first;
    return aInB || bInA || disjoint;
}

// Leaf index m such that the children of `span` cover [lo,m] and
// [m+1,hi]. The left child is the longest proper member span starting at
// lo (a single leaf when there is none); consistency with the right side
// is checked by the PlaneTree constructor.
int splitPoint(const std::vector<Span>& spans, Span span) {
    int m = span.first;
    for (const Span& s : spans)
        if (s.first == span.first && s.second < span.second)
            m = std::max(m, s.second);
    return m;
}

std::optional<Span> parentOf(const std::vector<Span>& spans, Span span) {
    std::optional<Span> best;
    for (const Span& s : spans) {
        if (s == span || s.first > span.first || s.second < span.second)
            continue;
        if (!best || (s.second - s.first) < (best->second - best->first))
            best = s;
    }
    return best;
}

void buildTrees(int lo, int hi, std::vector<std::vector<Span>>& out) {
    if (lo == hi) {
        out.push_back({});
        return;
    }
    for (int m = lo; m < hi; ++m) {
        std::vector<std::vector<Span>> left, right;
        buildTrees(lo, m, left);
        buildTrees(m + 1, hi, right);
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Span> combined = l;
                combined.insert(combined.end(), r.begin(), r.end());
                combined.emplace_back(lo, hi);
                out.push_back(std::move(combined));
            }
    }
}

// Exact rational arithmetic for the cone solves; numerators stay tiny
// because the generator matrices are 0/1 and at most 12x12.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0)
            den = 1;
    }

    bool isZero() const { return num == 0; }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        return Rational(a.num * b.den, a.den * b.num);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
};

// Solves the square system (columns = generators) * x = d over the
// rationals. Returns nothing when the matrix is singular.
std::optional<std::vector<Rational>> solveExact(const std::vector<DimensionVector>& generators,
                                                const DimensionVector& d) {
    std::size_t n = generators.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col)
            m[row][col] = Rational(generators[col].at(static_cast<int>(row) + 1));
        m[row][n] = Rational(d.at(static_cast<int>(row) + 1));
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].isZero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(m[col], m[pivot]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].isZero())
                continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k <= n; ++k)
                m[row][k] = m[row][k] - factor * m[col][k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t col = 0; col < n; ++col)
        x[col] = m[col][n] / m[col][col];
    return x;
}

}  // namespace

PlaneTree::PlaneTree(int t, std::vector<Span> spans) : t_(t), spans_(std::move(spans)) {
    if (t_ < 1)
        throw std::invalid_argument("plane tree needs at least two leaves");
    std::sort(spans_.begin(), spans_.end());
    if (spans_.size() != static_cast<std::size_t>(t_))
        throw std::invalid_argument("plane tree with t+1 leaves has t internal vertices");
    if (std::adjacent_find(spans_.begin(), spans_.end()) != spans_.end())
        throw std::invalid_argument("duplicate internal vertex span");
    for (const Span& s : spans_)
        if (s.first < 0 || s.second <= s.first || s.second > t_)
            throw std::invalid_argument("leaf span out of range");
    if (std::find(spans_.begin(), spans_.end(), Span(0, t_)) == spans_.end())
        throw std::invalid_argument("root span [0,t] missing");
    for (std::size_t a = 0; a < spans_.size(); ++a)
        for (std::size_t b = a + 1; b < spans_.size(); ++b)
            if (!nestedOrDisjoint(spans_[a], spans_[b]))
                throw std::invalid_argument("spans are not laminar");
    for (const Span& s : spans_) {
        int m = splitPoint(spans_, s);
        Span right(m + 1, s.second);
        bool rightOk = right.first == right.second ||
                       std::find(spans_.begin(), spans_.end(), right) != spans_.end();
        if (!rightOk)
            throw std::invalid_argument("span does not split binarily");
    }
}

std::vector<PlaneTree> enumerateTrees(int t, int bound) {
    if (t < 1)
        throw std::domain_error("tree enumeration requires t >= 1");
    if (t > bound)
        throw budget_error("tree enumeration bound " + std::to_string(bound) +
                           " exceeded by t = " + std::to_string(t));
    std::vector<std::vector<Span>> raw;
    buildTrees(0, t, raw);
    std::vector<PlaneTree> trees;
    trees.reserve(raw.size());
    for (auto& spans : raw)
        trees.emplace_back(t, std::move(spans));
    return trees;
}

Multisegment tiltingOfTree(const PlaneTree& tree) {
    Multisegment m(tree.leafMax());
    for (const Span& span : tree.spans())
        m.add(PlaneTree::segmentOf(span));
    return m;
}

std::vector<Neighbor> neighbors(const PlaneTree& tree) {
    const std::vector<Span>& spans = tree.spans();
    int t = tree.leafMax();
    std::vector<Neighbor> result;
    for (const Span& v : spans) {
        if (v == Span(0, t))
            continue;
        Span p = *parentOf(spans, v);
        int m = splitPoint(spans, p);
        Span w;
        if (v.second <= m) {
            // v is the left child [p.lo, m]; regroup its right part with
            // the right sibling.
            int x = splitPoint(spans, v);
            w = Span(x + 1, p.second);
        } else {
            // v is the right child [m+1, p.hi]; regroup its left part with
            // the left sibling.
            int y = splitPoint(spans, v);
            w = Span(p.first, y);
        }
        std::vector<Span> mutated;
        mutated.reserve(spans.size());
        for (const Span& s : spans)
            mutated.push_back(s == v ? w : s);

        Segment removed = PlaneTree::segmentOf(v);
        Segment added = PlaneTree::segmentOf(w);
        std::pair<Segment, Segment> exchanged =
            extDim(removed, added) == 1 ? std::pair(removed, added) : std::pair(added, removed);
        if (extDim(exchanged.first, exchanged.second) != 1)
            throw std::logic_error("exchanged segments admit no extension");
        result.push_back({PlaneTree(t, std::move(mutated)), removed, added, exchanged});
    }
    return result;
}

ExchangeGraph exchangeGraph(int t, int bound) {
    ExchangeGraph graph{t, enumerateTrees(t, bound), {}};
    std::map<PlaneTree, int> index;
    for (std::size_t k = 0; k < graph.vertices.size(); ++k)
        index.emplace(graph.vertices[k], static_cast<int>(k));
    for (std::size_t k = 0; k < graph.vertices.size(); ++k)
        for (const Neighbor& n : neighbors(graph.vertices[k])) {
            int other = index.at(n.tree);
            if (other > static_cast<int>(k))
                graph.edges.push_back({static_cast<int>(k), other, n.exchanged});
        }
    return graph;
}

Cone coneOfTree(const PlaneTree& tree) {
    Cone cone;
    for (const Span& span : tree.spans())
        cone.segments.push_back(PlaneTree::segmentOf(span));
    std::sort(cone.segments.begin(), cone.segments.end());
    for (const Segment& s : cone.segments)
        cone.generators.push_back(s.dimension(tree.leafMax()));
    return cone;
}

long long coneDeterminant(const Cone& cone) {
    std::size_t n = cone.generators.size();
    if (n == 0 || cone.generators[0].size() != static_cast<int>(n))
        throw std::domain_error("determinant requires a square generator matrix");
    // Bareiss fraction-free elimination; all intermediates are integers.
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col)
            m[row][col] = cone.generators[col].at(static_cast<int>(row) + 1);
    long long sign = 1;
    long long prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t row = k + 1; row < n; ++row)
            for (std::size_t col = k + 1; col < n; ++col)
                m[row][col] = (m[row][col] * m[k][k] - m[row][k] * m[k][col]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

ConeMembership membership(const Cone& cone, const DimensionVector& d) {
    if (cone.generators.empty() || cone.generators.size() != static_cast<std::size_t>(d.size()))
        throw std::domain_error("membership requires a full-dimensional cone");
    auto solution = solveExact(cone.generators, d);
    if (!solution)
        throw std::logic_error("tree cone generators are linearly dependent");
    ConeMembership result;
    result.inside = true;
    for (const Rational& coordinate : *solution) {
        if (coordinate.num < 0) {
            result.inside = false;
            result.coordinates.clear();
            return result;
        }
        if (coordinate.den != 1)
            throw std::logic_error("non-integral coordinate in a unimodular cone");
        result.coordinates.push_back(coordinate.num);
    }
    return result;
}

LocateResult locate(const DimensionVector& d, int bound) {
    if (!d.sincere())
        throw std::domain_error("locate requires a sincere dimension vector");
    int t = d.size();
    LocateResult result;

    Multisegment generic = genericByLevels(d);
    for (const auto& [seg, mult] : generic.summands()) {
        result.minimalCone.segments.push_back(seg);
        result.minimalCone.generators.push_back(seg.dimension(t));
        result.minimalCoordinates.push_back(mult);
    }

    std::vector<PlaneTree> trees = enumerateTrees(t, bound);
    for (std::size_t k = 0; k < trees.size(); ++k) {
        ConeMembership inCone = membership(coneOfTree(trees[k]), d);
        if (inCone.inside) {
            result.treeIndices.push_back(static_cast<int>(k));
            result.treeCoordinates.push_back(std::move(inCone.coordinates));
        }
    }

    result.genericDimension =
        result.treeIndices.size() == 1 &&
        std::all_of(result.treeCoordinates[0].begin(), result.treeCoordinates[0].end(),
                    [](long long c) { return c > 0; });
    return result;
}

std::vector<std::pair<int, int>> componentsViaFan(const DimensionVector& d, int bound) {
    LocateResult placement = locate(d, bound);
    if (!placement.genericDimension)
        throw std::domain_error(
            "dimension vector is not generic; use the component decomposition directly");
    PlaneTree tree = enumerateTrees(d.size(), bound)[static_cast<std::size_t>(
        placement.treeIndices.front())];
    std::vector<std::pair<int, int>> windows;
    for (const Neighbor& n : neighbors(tree))
        windows.emplace_back(n.exchanged.second.lo - 1, n.exchanged.first.hi + 1);
    std::sort(windows.begin(), windows.end());
    windows.erase(std::unique(windows.begin(), windows.end()), windows.end());
    return windows;
}

}  // namespace atlas
