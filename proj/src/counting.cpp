#include "atlas/counting.hpp"

#include <algorithm>
#include <map>

namespace atlas {

Multisegment multisegmentFromTriangle(int t, const std::vector<int>& mult) {
    Multisegment m(t);
    std::size_t idx = 0;
    for (int lo = 1; lo <= t; ++lo)
        for (int hi = lo; hi <= t; ++hi, ++idx)
            if (mult[idx] > 0)
                m.add(Segment(lo, hi), mult[idx]);
    return m;
}

void forEachMultisegment(const DimensionVector& d,
                         const std::function<void(const Multisegment&)>& visit,
                         long long budget) {
    int t = d.size();
    walkMultisegments(d, budget, [&](const std::vector<int>& mult) {
        visit(multisegmentFromTriangle(t, mult));
    });
}

long long countBrute(const DimensionVector& d, long long budget) {
    return walkMultisegments(d, budget, [](const std::vector<int>&) {});
}

long long naPair(const Partition& a, const Partition& b) {
    std::size_t len = std::max(a.length(), b.length());
    for (std::size_t k = 0; k < len; ++k) {
        int gap = a.partOrZero(k) - b.partOrZero(k);
        if (gap >= 2 || gap <= -2)
            return 0;
    }
    // Product over part sizes l of (#{i : a_i = b_i = l} + 1).
    std::map<int, int> equalCounts;
    for (std::size_t k = 0; k < len; ++k) {
        int part = a.partOrZero(k);
        if (part >= 1 && part == b.partOrZero(k))
            ++equalCounts[part];
    }
    long long product = 1;
    for (const auto& [part, count] : equalCounts)
        product *= count + 1;
    return product;
}

long long countByPartitions(const DimensionVector& d) {
    int t = d.size();
    Partition first(std::vector<int>(static_cast<std::size_t>(d.at(1)), 1));
    Partition last(std::vector<int>(static_cast<std::size_t>(d.at(t)), 1));

    std::vector<Partition> states = {first};
    std::vector<long long> weights = {1};

    for (int layer = 2; layer <= t; ++layer) {
        std::vector<Partition> next =
            layer == t ? std::vector<Partition>{last} : enumeratePartitions(d.at(layer));
        std::vector<long long> nextWeights(next.size(), 0);
        for (std::size_t to = 0; to < next.size(); ++to)
            for (std::size_t from = 0; from < states.size(); ++from)
                if (weights[from] != 0)
                    nextWeights[to] += weights[from] * naPair(states[from], next[to]);
        states = std::move(next);
        weights = std::move(nextWeights);
    }

    for (std::size_t k = 0; k < states.size(); ++k)
        if (states[k] == (t == 1 ? first : last))
            return weights[k];
    return 0;
}

std::vector<Partition> enumeratePartitions(int n) {
    if (n < 0)
        throw std::domain_error("partitions are enumerated for n >= 0");
    std::vector<Partition> all;
    std::vector<int> current;
    // Reverse lexicographic: at each slot take the largest part allowed.
    auto extend = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            all.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, maxPart); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    extend(extend, n, n == 0 ? 1 : n);
    return all;
}

}  // namespace atlas
