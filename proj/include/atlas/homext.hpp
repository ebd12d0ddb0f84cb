#pragma once

#include "atlas/core.hpp"

namespace atlas {

// dim Hom([i,j],[k,l]) for the equioriented A_t quiver: 1 iff
// k <= i <= l <= j, else 0.
int homDim(const Segment& from, const Segment& to);

// dim Ext^1([i,j],[k,l]): 1 iff i < k <= j+1 < l+1, else 0.
int extDim(const Segment& from, const Segment& to);

// Euler form <[i,j],[k,l]> = #([i,j] n [k,l]) - #([i+1,j+1] n [k,l]).
// Always equals homDim - extDim; depends only on dimension vectors.
int eulerForm(const Segment& from, const Segment& to);

enum class Pairing { hom, ext, euler };

// Bilinear extension of the segment pairing over all summand pairs,
// weighted by multiplicities. Both multisegments must share the ambient.
long long pairingDim(const Multisegment& from, const Multisegment& to, Pairing kind);

long long selfExtDim(const Multisegment& m);
long long endDim(const Multisegment& m);

// No selfextensions: every ordered pair of summands is nested or separated
// by a gap of at least two. Computed both from that combinatorial test and
// from selfExtDim == 0; the two routes always agree.
bool isRigid(const Multisegment& m);

// Codimension of the orbit of M inside the representation space of its
// dimension vector. Equals dim Ext(M,M) since
// dim End(M) - <dim M, dim M> = dim Ext(M,M).
long long orbitCodim(const Multisegment& m);

// True iff the orbit of M is dense in some irreducible component of the
// complement of the dense orbit; decided by membership in the set of
// component representatives of dim M. Requires dim M sincere.
bool isAlmostGeneric(const Multisegment& m);

// The stated characterization of selfExtDim == 1: M contains an extension
// pair [i,j], [k,l] such that deleting either one leaves the generic
// multisegment of the remaining dimension.
bool extDimOneCharacterization(const Multisegment& m);

}  // namespace atlas
