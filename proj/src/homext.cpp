#include "atlas/homext.hpp"

#include <algorithm>
#include <stdexcept>

#include "atlas/components.hpp"
#include "atlas/generic.hpp"

namespace atlas {
namespace {

int intersectionLength(int lo1, int hi1, int lo2, int hi2) {
    return std::max(0, std::min(hi1, hi2) - std::max(lo1, lo2) + 1);
}

}  // namespace

int homDim(const Segment& from, const Segment& to) {
    return (to.lo <= from.lo && from.lo <= to.hi && to.hi <= from.hi) ? 1 : 0;
}

int extDim(const Segment& from, const Segment& to) {
    return (from.lo < to.lo && to.lo <= from.hi + 1 && from.hi < to.hi) ? 1 : 0;
}

int eulerForm(const Segment& from, const Segment& to) {
    return intersectionLength(from.lo, from.hi, to.lo, to.hi) -
           intersectionLength(from.lo + 1, from.hi + 1, to.lo, to.hi);
}

long long pairingDim(const Multisegment& from, const Multisegment& to, Pairing kind) {
    if (from.ambient() != to.ambient())
        throw std::domain_error("pairing requires a common ambient length");
    long long total = 0;
    for (const auto& [a, ma] : from.summands())
        for (const auto& [b, mb] : to.summands()) {
            int value = 0;
            switch (kind) {
                case Pairing::hom: value = homDim(a, b); break;
                case Pairing::ext: value = extDim(a, b); break;
                case Pairing::euler: value = eulerForm(a, b); break;
            }
            total += static_cast<long long>(ma) * mb * value;
        }
    return total;
}

long long selfExtDim(const Multisegment& m) {
    return pairingDim(m, m, Pairing::ext);
}

long long endDim(const Multisegment& m) {
    return pairingDim(m, m, Pairing::hom);
}

bool isRigid(const Multisegment& m) {
    bool nestedOrGapped = true;
    for (const auto& [a, ma] : m.summands()) {
        for (const auto& [b, mb] : m.summands()) {
            bool ok = a.contains(b) || b.contains(a) || a.hi < b.lo - 1 || b.hi < a.lo - 1;
            if (!ok) {
                nestedOrGapped = false;
                break;
            }
        }
        if (!nestedOrGapped)
            break;
    }
    bool noSelfExt = selfExtDim(m) == 0;
    if (nestedOrGapped != noSelfExt)
        throw std::logic_error("rigidity characterizations disagree");
    return noSelfExt;
}

long long orbitCodim(const Multisegment& m) {
    return selfExtDim(m);
}

bool isAlmostGeneric(const Multisegment& m) {
    DimensionVector d = dimensionOf(m);
    if (!d.sincere())
        throw std::domain_error("almost-generic test requires a sincere dimension vector");
    for (const auto& window : computeI(d))
        if (componentRepresentative(d, window) == m)
            return true;
    return false;
}

bool extDimOneCharacterization(const Multisegment& m) {
    DimensionVector d = dimensionOf(m);
    for (const auto& [a, ma] : m.summands()) {
        for (const auto& [b, mb] : m.summands()) {
            if (extDim(a, b) != 1)
                continue;
            Multisegment withoutA = m;
            withoutA.add(a, -1);
            Multisegment withoutB = m;
            withoutB.add(b, -1);
            if (withoutA == genericByLevels(dimensionOf(withoutA)) &&
                withoutB == genericByLevels(dimensionOf(withoutB)))
                return true;
        }
    }
    return false;
}

}  // namespace atlas
