#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atlas/core.hpp"
#include "atlas/counting.hpp"

namespace atlas {

// One irreducible component Y_{i,j} of the complement of the dense orbit:
// its window, its codimension |d_j - d_i| + 1, the multisegment whose
// orbit is dense in it, and that multisegment's rank triangle (which sits
// at r_{i,j} - 1 on the defining window).
struct ComponentDescriptor {
    std::pair<int, int> window;
    int codim;
    Multisegment representative;
    RankTriangle rank;
};

// Windows (i,j), i < j, whose interior entries all strictly exceed
// max(d_i, d_j). These are exactly the windows whose rank-defect locus is
// irreducible. All adjacent pairs qualify vacuously. Requires sincere d.
std::vector<std::pair<int, int>> computeJ(const DimensionVector& d);

// The subset of computeJ(d) indexing the irreducible components of the
// complement: either d_i = d_j, or the smaller side extends past the
// window without dropping below it before dropping below the larger side
// (conditions read with d_0 = d_{t+1} = 0).
std::vector<std::pair<int, int>> computeI(const DimensionVector& d);

// |d_j - d_i| + 1 for (i,j) in J(d); other windows are rejected since
// their loci are reducible and carry no single codimension.
int codimension(const DimensionVector& d, std::pair<int, int> window);

// The unique multisegment whose orbit is dense in Y_{i,j}: its rank
// triangle is the maximal one capped at r_{i,j} - 1 on every window
// containing [i,j] whose minimum equals r_{i,j}. A non-realizable capped
// triangle would throw realizability_error; that never happens on J(d).
Multisegment componentRepresentative(const DimensionVector& d, std::pair<int, int> window);

// One descriptor per element of computeI(d), sorted by window.
std::vector<ComponentDescriptor> decomposeComplement(const DimensionVector& d);

// Orbit-closure order: true iff rank(M) <= rank(N) entrywise. Requires
// equal dimension vectors.
bool degenerationLeq(const Multisegment& m, const Multisegment& n);

struct VerifyReport {
    DimensionVector d;
    std::vector<std::pair<int, int>> components;
    long long enumerated = 0;
    bool pass = false;
    std::vector<std::string> failures;
};

// Exhaustively enumerates the multisegments of dimension d and certifies
// the decomposition: every non-generic multisegment violates the rank
// bound of some component in I(d), and each component representative
// satisfies no other component's bound. Refuses past the budget.
VerifyReport verifyDecomposition(const DimensionVector& d, long long budget = kDefaultEnumBudget);

struct Classification {
    bool generic = false;   // M(d) has t pairwise different summands
    bool pure = false;      // every (i,j) in I(d) has d_i = d_j
    bool concave = false;   // entries fall then rise
    bool unimodal = false;  // entries rise then fall
};

Classification classify(const DimensionVector& d);

// The alternative recursive purity condition: d_1 = d_t is the minimum of
// d, and the same holds on every support block after subtracting it.
// Exposed alongside classify().pure so the two can be compared.
bool isPureRecursive(const DimensionVector& d);

}  // namespace atlas
