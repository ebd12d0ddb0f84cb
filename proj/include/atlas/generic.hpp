#pragma once

#include "atlas/core.hpp"

namespace atlas {

// Thrown by multisegmentOfRank when the triangle is not the rank triangle
// of any multisegment; carries the first offending window.
class realizability_error : public std::domain_error {
public:
    realizability_error(int lo, int hi, long long delta);
    int windowLo() const noexcept { return lo_; }
    int windowHi() const noexcept { return hi_; }

private:
    int lo_;
    int hi_;
};

// The dense-orbit multisegment M(d), built from the line diagram: level k
// contributes one segment per maximal run of consecutive columns with
// d_l >= k. Zeros in d simply break the runs.
Multisegment genericByLevels(const DimensionVector& d);

// Independent construction of M(d): repeatedly strip the longest support
// interval (leftmost on ties) at its maximal multiplicity. Exists as a
// witness for genericByLevels; the two agree on every input.
Multisegment genericRecursive(const DimensionVector& d);

// r(M)_{i,j} counts, with multiplicity, the segments of M containing the
// window [i,j]. The diagonal agrees with dimensionOf(M).
RankTriangle rankOfMultisegment(const Multisegment& m);

// Inverse of rankOfMultisegment on realizable triangles: the multiplicity
// of [i,j] is the shifted second difference of s at (i,j).
Multisegment multisegmentOfRank(const RankTriangle& s);

// True iff s = r(M) for some multisegment M of the ambient dimension,
// equivalently iff every shifted second difference is nonnegative.
bool isRealizable(const RankTriangle& s);

// The triangle of window minima r_{i,j} = min{d_l : i <= l <= j}; this is
// the rank triangle of M(d) and the entrywise maximum over all orbits.
RankTriangle maximalRank(const DimensionVector& d);

}  // namespace atlas
