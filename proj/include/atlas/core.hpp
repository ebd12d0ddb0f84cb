#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atlas {

// Thrown when text input does not match the expected grammar. Carries the
// byte position of the failure and a description of what was expected there.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t position, const std::string& expected);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Thrown when an exhaustive enumeration would exceed its configured budget.
// Enumerations refuse outright instead of returning partial results.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Per-vertex dimensions d = (d_1,...,d_t) of a representation, t >= 1.
// Entries are indexed 1-based; at() returns 0 outside [1,t], which is the
// boundary convention used throughout the rank calculus.
class DimensionVector {
public:
    explicit DimensionVector(std::vector<int> entries);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int at(int l) const noexcept;
    const std::vector<int>& entries() const noexcept { return entries_; }

    // True when every entry is >= 1.
    bool sincere() const noexcept;
    int total() const noexcept;

    bool operator==(const DimensionVector&) const = default;
    auto operator<=>(const DimensionVector&) const = default;

    // Grammar: comma-separated nonnegative integers, e.g. "5,4,3,1,2,4,6".
    static DimensionVector parse(std::string_view text);
    std::string render() const;

private:
    std::vector<int> entries_;
};

DimensionVector operator+(const DimensionVector& a, const DimensionVector& b);

// Interval [lo,hi] of quiver vertices, 1 <= lo <= hi. Ordered
// lexicographically by (lo,hi); multisegments render in that order.
struct Segment {
    int lo;
    int hi;

    Segment(int lo_, int hi_);

    int length() const noexcept { return hi - lo + 1; }
    bool covers(int l) const noexcept { return lo <= l && l <= hi; }
    bool contains(const Segment& other) const noexcept {
        return lo <= other.lo && other.hi <= hi;
    }

    // Indicator dimension vector e_lo + ... + e_hi in ambient length t.
    DimensionVector dimension(int t) const;

    bool operator==(const Segment&) const = default;
    auto operator<=>(const Segment&) const = default;

    // Grammar: "[lo,hi]".
    static Segment parse(std::string_view text);
    std::string render() const;
};

// Finite multiset of segments with positive multiplicities, together with
// the ambient number of vertices t. Encodes an isomorphism class of
// representations: each segment is one indecomposable summand.
class Multisegment {
public:
    explicit Multisegment(int ambient);

    int ambient() const noexcept { return ambient_; }
    bool empty() const noexcept { return mults_.empty(); }

    // Adds `count` copies of s; removes the entry when it drops to zero.
    void add(const Segment& s, int count = 1);

    int multiplicity(const Segment& s) const noexcept;
    const std::map<Segment, int>& summands() const noexcept { return mults_; }

    int distinctCount() const noexcept { return static_cast<int>(mults_.size()); }
    long long totalCount() const noexcept;

    bool operator==(const Multisegment&) const = default;
    auto operator<=>(const Multisegment&) const = default;

    // Grammar: segments joined by '+', each with optional "^mult"; the
    // empty multisegment renders as "0". Ambient defaults to the largest
    // right endpoint (at least 1).
    static Multisegment parse(std::string_view text);
    static Multisegment parse(std::string_view text, int ambient);
    std::string render() const;

private:
    int ambient_;
    std::map<Segment, int> mults_;
};

Multisegment operator+(const Multisegment& a, const Multisegment& b);

// d(M)_l = sum of multiplicities of the segments covering vertex l.
DimensionVector dimensionOf(const Multisegment& m);

// Ranks s_{i,j} of the composite maps over all windows 1 <= i < j <= t,
// extended by the boundary convention s_{i,i} = d_i and s_{i,j} = 0
// whenever i <= 0 or j > t. Entries are capped by the window minimum
// min{d_l : i <= l <= j}, which every realizable triangle satisfies.
class RankTriangle {
public:
    explicit RankTriangle(DimensionVector d);

    int size() const noexcept { return dims_.size(); }
    const DimensionVector& dimension() const noexcept { return dims_; }

    // Extended accessor; requires nothing of (i,j).
    int at(int i, int j) const noexcept;
    void set(int i, int j, int value);

    // Window minimum min{d_l : i <= l <= j} for 1 <= i <= j <= t.
    int windowMin(int i, int j) const;

    // Shifted second difference s_{i,j} - s_{i-1,j} - s_{i,j+1} + s_{i-1,j+1},
    // defined for 1 <= i <= j <= t. On a realizable triangle this recovers
    // the multiplicity of [i,j]. Note the printed convention elsewhere uses
    // (i+1, j+1) shifts, which fails on the indicator triangle of a single
    // segment; this one evaluates to 1 there.
    long long secondDifference(int i, int j) const;

    bool operator==(const RankTriangle&) const = default;

    // JSON form {"d":[...], "s":[[i,j,value],...]}; zero entries omitted,
    // triples sorted by (i,j).
    static RankTriangle parse(std::string_view json);
    std::string render() const;

private:
    std::size_t index(int i, int j) const noexcept;

    DimensionVector dims_;
    std::vector<int> upper_;  // entries for i < j, row-major
};

// True when a <= b entrywise on all windows; both triangles must share the
// same dimension vector.
bool entrywiseLeq(const RankTriangle& a, const RankTriangle& b);

// Weakly decreasing sequence of positive integers; conceptually padded
// with zeros on the right for componentwise comparisons.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int weight() const noexcept;
    int partOrZero(std::size_t index) const noexcept;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    // Grammar: comma-separated weakly decreasing positive integers; the
    // empty partition renders as the empty string.
    static Partition parse(std::string_view text);
    std::string render() const;

private:
    std::vector<int> parts_;
};

}  // namespace atlas
