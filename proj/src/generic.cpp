#include "atlas/generic.hpp"

#include <algorithm>

namespace atlas {

realizability_error::realizability_error(int lo, int hi, long long delta)
    : std::domain_error("triangle not realizable: second difference at (" + std::to_string(lo) +
                        "," + std::to_string(hi) + ") is " + std::to_string(delta)),
      lo_(lo),
      hi_(hi) {}

Multisegment genericByLevels(const DimensionVector& d) {
    int t = d.size();
    Multisegment m(t);
    int top = *std::max_element(d.entries().begin(), d.entries().end());
    for (int level = 1; level <= top; ++level) {
        int runStart = 0;
        for (int l = 1; l <= t + 1; ++l) {
            if (d.at(l) >= level) {
                if (runStart == 0)
                    runStart = l;
            } else if (runStart != 0) {
                m.add(Segment(runStart, l - 1));
                runStart = 0;
            }
        }
    }
    return m;
}

Multisegment genericRecursive(const DimensionVector& d) {
    int t = d.size();
    Multisegment m(t);
    std::vector<int> rest = d.entries();

    auto runAt = [&](int lo) {
        int hi = lo;
        while (hi < t && rest[static_cast<std::size_t>(hi)] > 0)
            ++hi;
        return hi;  // run is [lo, hi] in 1-based vertex terms
    };

    for (;;) {
        // Longest support run, leftmost on ties.
        int bestLo = 0, bestHi = -1;
        for (int lo = 1; lo <= t; ++lo) {
            if (rest[static_cast<std::size_t>(lo) - 1] == 0)
                continue;
            int hi = runAt(lo);
            if (hi - lo > bestHi - bestLo)
                bestLo = lo, bestHi = hi;
            lo = hi;
        }
        if (bestLo == 0)
            return m;
        int mult = rest[static_cast<std::size_t>(bestLo) - 1];
        for (int l = bestLo; l <= bestHi; ++l)
            mult = std::min(mult, rest[static_cast<std::size_t>(l) - 1]);
        m.add(Segment(bestLo, bestHi), mult);
        for (int l = bestLo; l <= bestHi; ++l)
            rest[static_cast<std::size_t>(l) - 1] -= mult;
    }
}

RankTriangle rankOfMultisegment(const Multisegment& m) {
    RankTriangle r{dimensionOf(m)};
    int t = m.ambient();
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) {
            int count = 0;
            for (const auto& [seg, mult] : m.summands())
                if (seg.lo <= i && j <= seg.hi)
                    count += mult;
            if (count > 0)
                r.set(i, j, count);
        }
    return r;
}

Multisegment multisegmentOfRank(const RankTriangle& s) {
    int t = s.size();
    Multisegment m(t);
    for (int i = 1; i <= t; ++i)
        for (int j = i; j <= t; ++j) {
            long long mult = s.secondDifference(i, j);
            if (mult < 0)
                throw realizability_error(i, j, mult);
            if (mult > 0)
                m.add(Segment(i, j), static_cast<int>(mult));
        }
    return m;
}

bool isRealizable(const RankTriangle& s) {
    int t = s.size();
    for (int i = 1; i <= t; ++i)
        for (int j = i; j <= t; ++j)
            if (s.secondDifference(i, j) < 0)
                return false;
    return true;
}

RankTriangle maximalRank(const DimensionVector& d) {
    RankTriangle r{d};
    int t = d.size();
    for (int i = 1; i <= t; ++i) {
        int windowMin = d.at(i);
        for (int j = i + 1; j <= t; ++j) {
            windowMin = std::min(windowMin, d.at(j));
            if (windowMin > 0)
                r.set(i, j, windowMin);
        }
    }
    return r;
}

}  // namespace atlas
