#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "atlas/core.hpp"

namespace atlas {

inline constexpr long long kDefaultEnumBudget = 2'000'000;

namespace detail {

// Backtracking enumeration of all multiplicity triangles (a_{i,j}) with
// sum a_{i,j} * dim[i,j] = d, visiting segments in lexicographic order.
// At column l the unconsumed dimension must be split among the segments
// [l,l..t]; the tail sums are capped by the remaining dimensions to the
// right, which prunes every infeasible branch. The visitor receives the
// flat triangle indexed by segmentIndex(). Throws budget_error once more
// than `budget` multisegments have been produced.
inline std::size_t segmentIndex(int t, int lo, int hi) {
    std::size_t row = static_cast<std::size_t>(lo) - 1;
    std::size_t width = static_cast<std::size_t>(t);
    return row * (2 * width - row + 1) / 2 + static_cast<std::size_t>(hi - lo);
}

template <class Visitor>
class TriangleWalker {
public:
    TriangleWalker(const DimensionVector& d, long long budget, Visitor& visit)
        : t_(d.size()),
          rest_(d.entries()),
          mult_(static_cast<std::size_t>(t_) * (t_ + 1) / 2, 0),
          budget_(budget),
          visit_(visit) {}

    long long run() {
        column(1);
        return produced_;
    }

private:
    void column(int l) {
        if (l > t_) {
            ++produced_;
            if (produced_ > budget_)
                throw budget_error("enumeration budget of " + std::to_string(budget_) +
                                   " multisegments exceeded");
            visit_(static_cast<const std::vector<int>&>(mult_));
            return;
        }
        assign(l, t_, rest_[static_cast<std::size_t>(l) - 1]);
    }

    // Chooses a_{l,hi} for hi = t..l given `need` still unassigned at l.
    void assign(int l, int hi, int need) {
        if (hi == l) {
            mult_[segmentIndex(t_, l, l)] = need;
            column(l + 1);
            mult_[segmentIndex(t_, l, l)] = 0;
            return;
        }
        int cap = need;
        for (int p = l + 1; p <= hi && cap > 0; ++p)
            cap = std::min(cap, rest_[static_cast<std::size_t>(p) - 1]);
        for (int count = 0; count <= cap; ++count) {
            if (count > 0) {
                mult_[segmentIndex(t_, l, hi)] = count;
                for (int p = l + 1; p <= hi; ++p)
                    rest_[static_cast<std::size_t>(p) - 1] -= count;
            }
            assign(l, hi - 1, need - count);
            if (count > 0) {
                mult_[segmentIndex(t_, l, hi)] = 0;
                for (int p = l + 1; p <= hi; ++p)
                    rest_[static_cast<std::size_t>(p) - 1] += count;
            }
        }
    }

    int t_;
    std::vector<int> rest_;
    std::vector<int> mult_;
    long long budget_;
    long long produced_ = 0;
    Visitor& visit_;
};

}  // namespace detail

// Applies `visit` to the flat multiplicity triangle of every multisegment
// of dimension d, in a fixed deterministic order. Returns the number of
// multisegments; refuses past the budget.
template <class Visitor>
long long walkMultisegments(const DimensionVector& d, long long budget, Visitor&& visit) {
    detail::TriangleWalker<Visitor> walker(d, budget, visit);
    return walker.run();
}

Multisegment multisegmentFromTriangle(int t, const std::vector<int>& mult);

// Enumerates every multisegment of dimension d; refuses past the budget.
void forEachMultisegment(const DimensionVector& d,
                         const std::function<void(const Multisegment&)>& visit,
                         long long budget = kDefaultEnumBudget);

// Number of multisegments of dimension d (the Kostant partition count for
// type A), by direct backtracking enumeration.
long long countBrute(const DimensionVector& d, long long budget = kDefaultEnumBudget);

// Pairwise factor of the nilpotent-class counting formula: 0 when some
// zero-padded parts differ by two or more, otherwise the product over all
// part sizes l of (number of positions with both parts equal to l, plus 1).
long long naPair(const Partition& a, const Partition& b);

// Number of multisegments of dimension d as a sum over sequences of
// partitions lambda^i of d_i with the first and last forced to all-ones,
// of the product of adjacent naPair factors. Computed by dynamic
// programming along the chain.
long long countByPartitions(const DimensionVector& d);

// All partitions of n in reverse lexicographic order, starting at (n).
std::vector<Partition> enumeratePartitions(int n);

}  // namespace atlas
