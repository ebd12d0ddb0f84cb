#pragma once

#include <utility>
#include <vector>

#include "atlas/core.hpp"

namespace atlas {

inline constexpr int kDefaultTreeMax = 12;

// Full binary plane tree with t+1 leaves numbered 0..t left to right,
// stored as the sorted list of its t internal leaf spans [lo,hi]
// (0 <= lo < hi <= t). The span [lo,hi] of an internal vertex yields the
// segment [lo+1, hi]; the root span [0,t] yields [1,t]. The family is
// laminar and decomposes binarily; the constructor checks both.
class PlaneTree {
public:
    PlaneTree(int t, std::vector<std::pair<int, int>> spans);

    int leafMax() const noexcept { return t_; }  // leaves run 0..t
    const std::vector<std::pair<int, int>>& spans() const noexcept { return spans_; }

    static Segment segmentOf(std::pair<int, int> span) {
        return Segment(span.first + 1, span.second);
    }

    bool operator==(const PlaneTree&) const = default;
    auto operator<=>(const PlaneTree&) const = default;

private:
    int t_;
    std::vector<std::pair<int, int>> spans_;
};

// All plane trees with t+1 leaves in a fixed deterministic order;
// the count is the t-th Catalan number. Refuses when t exceeds the bound.
std::vector<PlaneTree> enumerateTrees(int t, int bound = kDefaultTreeMax);

// The tilting multisegment M_T: one segment per internal vertex. Always
// multiplicity-free with exactly t summands, and rigid.
Multisegment tiltingOfTree(const PlaneTree& tree);

// One mutation of T: contract the parent edge of a non-root internal
// vertex and resolve the resulting 4-valent vertex the other way. The
// exchanged segments are ordered so that exchanged.first has a nontrivial
// extension by exchanged.second (first.lo < second.lo <= first.hi + 1 and
// first.hi < second.hi).
struct Neighbor {
    PlaneTree tree;
    Segment removed;
    Segment added;
    std::pair<Segment, Segment> exchanged;
};

// The t-1 mutations of T, one per non-root internal vertex, in span order.
std::vector<Neighbor> neighbors(const PlaneTree& tree);

struct ExchangeEdge {
    int a;
    int b;
    std::pair<Segment, Segment> exchanged;
};

// Vertices are all trees (enumeration order), edges the unordered mutation
// pairs; (t-1)-regular and connected.
struct ExchangeGraph {
    int t;
    std::vector<PlaneTree> vertices;
    std::vector<ExchangeEdge> edges;
};

ExchangeGraph exchangeGraph(int t, int bound = kDefaultTreeMax);

// Simplicial cone spanned by dimension vectors of segments; for a tree
// cone the t generators form a Z-basis (determinant +-1).
struct Cone {
    std::vector<Segment> segments;
    std::vector<DimensionVector> generators;
};

Cone coneOfTree(const PlaneTree& tree);

// Determinant of the square generator matrix, by exact fraction-free
// elimination. Only defined for cones with t generators.
long long coneDeterminant(const Cone& cone);

// Coordinates of d in the cone's generator basis when they exist and are
// all nonnegative (exact rational elimination, integral by unimodularity);
// empty otherwise.
struct ConeMembership {
    bool inside = false;
    std::vector<long long> coordinates;
};

ConeMembership membership(const Cone& cone, const DimensionVector& d);

struct LocateResult {
    // Cone of the distinct summands of M(d): the unique cone holding d in
    // its relative interior. Coordinates are the summand multiplicities.
    Cone minimalCone;
    std::vector<long long> minimalCoordinates;
    // Trees whose full cone contains d, with the coordinates of d there.
    std::vector<int> treeIndices;
    std::vector<std::vector<long long>> treeCoordinates;
    bool genericDimension = false;
};

LocateResult locate(const DimensionVector& d, int bound = kDefaultTreeMax);

// For generic d: the component windows read off the t-1 mutations of the
// unique tree whose cone interior holds d. From the exchanged pair
// ([a,b],[c,e]) the window is (c-1, b+1), the smallest window whose rank
// drops in the mutation. Agrees with computeI(d). Non-generic d is
// rejected; use computeI directly for those.
std::vector<std::pair<int, int>> componentsViaFan(const DimensionVector& d,
                                                  int bound = kDefaultTreeMax);

}  // namespace atlas
