#include "atlas/core.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace atlas {
namespace {

// Minimal cursor over a string_view; all grammars here are LL(1).
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    void expect(char c) {
        if (done() || text[pos] != c)
            throw parse_error(pos, std::string("'") + c + "'");
        ++pos;
    }

    bool tryConsume(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    int integer() {
        if (done() || text[pos] < '0' || text[pos] > '9')
            throw parse_error(pos, "integer");
        long long value = 0;
        while (!done() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000'000LL)
                throw parse_error(pos, "integer below 10^9");
            ++pos;
        }
        return static_cast<int>(value);
    }

    void end() {
        if (!done())
            throw parse_error(pos, "end of input");
    }
};

std::string describePosition(std::size_t position, const std::string& expected) {
    return "parse error at position " + std::to_string(position) + ": expected " + expected;
}

}  // namespace

parse_error::parse_error(std::size_t position, const std::string& expected)
    : std::runtime_error(describePosition(position, expected)), position_(position) {}

DimensionVector::DimensionVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("dimension vector must have at least one entry");
    for (int e : entries_)
        if (e < 0)
            throw std::invalid_argument("dimension vector entries must be nonnegative");
}

int DimensionVector::at(int l) const noexcept {
    if (l < 1 || l > size())
        return 0;
    return entries_[static_cast<std::size_t>(l) - 1];
}

bool DimensionVector::sincere() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e >= 1; });
}

int DimensionVector::total() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

DimensionVector DimensionVector::parse(std::string_view text) {
    Scanner s{text};
    std::vector<int> entries;
    entries.push_back(s.integer());
    while (s.tryConsume(','))
        entries.push_back(s.integer());
    s.end();
    return DimensionVector(std::move(entries));
}

std::string DimensionVector::render() const {
    std::string out;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(entries_[k]);
    }
    return out;
}

DimensionVector operator+(const DimensionVector& a, const DimensionVector& b) {
    if (a.size() != b.size())
        throw std::domain_error("dimension vectors differ in length");
    std::vector<int> sum(a.entries());
    for (int l = 0; l < b.size(); ++l)
        sum[static_cast<std::size_t>(l)] += b.entries()[static_cast<std::size_t>(l)];
    return DimensionVector(std::move(sum));
}

Segment::Segment(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("segment requires 1 <= lo <= hi");
}

DimensionVector Segment::dimension(int t) const {
    if (hi > t)
        throw std::domain_error("segment exceeds ambient length");
    std::vector<int> e(static_cast<std::size_t>(t), 0);
    for (int l = lo; l <= hi; ++l)
        e[static_cast<std::size_t>(l) - 1] = 1;
    return DimensionVector(std::move(e));
}

Segment Segment::parse(std::string_view text) {
    Scanner s{text};
    s.expect('[');
    std::size_t loPos = s.pos;
    int lo = s.integer();
    s.expect(',');
    int hi = s.integer();
    s.expect(']');
    s.end();
    if (lo < 1)
        throw parse_error(loPos, "segment start >= 1");
    if (hi < lo)
        throw parse_error(loPos, "segment with start <= end");
    return Segment(lo, hi);
}

std::string Segment::render() const {
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

Multisegment::Multisegment(int ambient) : ambient_(ambient) {
    if (ambient_ < 1)
        throw std::invalid_argument("ambient length must be >= 1");
}

void Multisegment::add(const Segment& s, int count) {
    if (s.hi > ambient_)
        throw std::domain_error("segment exceeds ambient length");
    if (count == 0)
        return;
    auto it = mults_.find(s);
    int next = (it == mults_.end() ? 0 : it->second) + count;
    if (next < 0)
        throw std::domain_error("multiplicity would become negative");
    if (next == 0) {
        if (it != mults_.end())
            mults_.erase(it);
    } else if (it == mults_.end()) {
        mults_.emplace(s, next);
    } else {
        it->second = next;
    }
}

int Multisegment::multiplicity(const Segment& s) const noexcept {
    auto it = mults_.find(s);
    return it == mults_.end() ? 0 : it->second;
}

long long Multisegment::totalCount() const noexcept {
    long long n = 0;
    for (const auto& [seg, mult] : mults_)
        n += mult;
    return n;
}

Multisegment Multisegment::parse(std::string_view text) {
    return parse(text, 0);
}

Multisegment Multisegment::parse(std::string_view text, int ambient) {
    Scanner s{text};
    std::vector<std::pair<Segment, int>> parsed;
    if (s.peek() == '0') {
        s.expect('0');
        s.end();
    } else {
        do {
            if (s.peek() != '[')
                throw parse_error(s.pos, "'['");
            std::size_t segStart = s.pos;
            s.expect('[');
            int lo = s.integer();
            s.expect(',');
            int hi = s.integer();
            s.expect(']');
            if (lo < 1)
                throw parse_error(segStart + 1, "segment start >= 1");
            if (hi < lo)
                throw parse_error(segStart + 1, "segment with start <= end");
            int mult = 1;
            if (s.tryConsume('^')) {
                std::size_t multPos = s.pos;
                mult = s.integer();
                if (mult < 1)
                    throw parse_error(multPos, "positive multiplicity");
            }
            parsed.emplace_back(Segment(lo, hi), mult);
        } while (s.tryConsume('+'));
        s.end();
    }

    int maxHi = 1;
    for (const auto& [seg, mult] : parsed)
        maxHi = std::max(maxHi, seg.hi);
    int t = ambient > 0 ? ambient : maxHi;

    Multisegment m(t);
    for (const auto& [seg, mult] : parsed)
        m.add(seg, mult);
    return m;
}

std::string Multisegment::render() const {
    if (mults_.empty())
        return "0";
    std::string out;
    for (const auto& [seg, mult] : mults_) {
        if (!out.empty())
            out += '+';
        out += seg.render();
        if (mult > 1)
            out += "^" + std::to_string(mult);
    }
    return out;
}

Multisegment operator+(const Multisegment& a, const Multisegment& b) {
    if (a.ambient() != b.ambient())
        throw std::domain_error("multisegments differ in ambient length");
    Multisegment sum = a;
    for (const auto& [seg, mult] : b.summands())
        sum.add(seg, mult);
    return sum;
}

DimensionVector dimensionOf(const Multisegment& m) {
    std::vector<int> d(static_cast<std::size_t>(m.ambient()), 0);
    for (const auto& [seg, mult] : m.summands())
        for (int l = seg.lo; l <= seg.hi; ++l)
            d[static_cast<std::size_t>(l) - 1] += mult;
    return DimensionVector(std::move(d));
}

RankTriangle::RankTriangle(DimensionVector d)
    : dims_(std::move(d)),
      upper_(static_cast<std::size_t>(dims_.size()) * (dims_.size() - 1) / 2, 0) {}

std::size_t RankTriangle::index(int i, int j) const noexcept {
    // Row-major over 1 <= i < j <= t: row i holds t-i entries.
    std::size_t t = static_cast<std::size_t>(dims_.size());
    std::size_t row = static_cast<std::size_t>(i) - 1;
    return row * (2 * t - row - 1) / 2 + static_cast<std::size_t>(j - i) - 1;
}

int RankTriangle::at(int i, int j) const noexcept {
    if (i <= 0 || j > size() || i > j)
        return 0;
    if (i == j)
        return dims_.at(i);
    return upper_[index(i, j)];
}

int RankTriangle::windowMin(int i, int j) const {
    if (i < 1 || j > size() || i > j)
        throw std::domain_error("window out of range");
    int m = dims_.at(i);
    for (int l = i + 1; l <= j; ++l)
        m = std::min(m, dims_.at(l));
    return m;
}

void RankTriangle::set(int i, int j, int value) {
    if (i < 1 || j > size() || i >= j)
        throw std::domain_error("rank entries are set on windows with i < j");
    if (value < 0 || value > windowMin(i, j))
        throw std::domain_error("rank entry outside [0, window minimum]");
    upper_[index(i, j)] = value;
}

long long RankTriangle::secondDifference(int i, int j) const {
    if (i < 1 || j > size() || i > j)
        throw std::domain_error("second difference requires 1 <= i <= j <= t");
    return static_cast<long long>(at(i, j)) - at(i - 1, j) - at(i, j + 1) + at(i - 1, j + 1);
}

RankTriangle RankTriangle::parse(std::string_view json) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.byte, "well-formed JSON");
    }
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("s"))
        throw parse_error(0, "object with keys \"d\" and \"s\"");
    if (!doc["d"].is_array() || doc["d"].empty())
        throw parse_error(0, "nonempty integer array under \"d\"");
    std::vector<int> dims;
    for (const auto& v : doc["d"]) {
        if (!v.is_number_integer())
            throw parse_error(0, "integer entries under \"d\"");
        dims.push_back(v.get<int>());
    }
    RankTriangle r{DimensionVector(std::move(dims))};
    if (!doc["s"].is_array())
        throw parse_error(0, "array of [i,j,value] triples under \"s\"");
    for (const auto& triple : doc["s"]) {
        if (!triple.is_array() || triple.size() != 3)
            throw parse_error(0, "[i,j,value] triple");
        int i = triple[0].get<int>();
        int j = triple[1].get<int>();
        int value = triple[2].get<int>();
        r.set(i, j, value);
    }
    return r;
}

std::string RankTriangle::render() const {
    nlohmann::json doc;
    doc["d"] = dims_.entries();
    auto entries = nlohmann::json::array();
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if (at(i, j) != 0)
                entries.push_back({i, j, at(i, j)});
    doc["s"] = std::move(entries);
    return doc.dump();
}

bool entrywiseLeq(const RankTriangle& a, const RankTriangle& b) {
    if (a.dimension() != b.dimension())
        throw std::domain_error("rank triangles have different dimension vectors");
    for (int i = 1; i <= a.size(); ++i)
        for (int j = i + 1; j <= a.size(); ++j)
            if (a.at(i, j) > b.at(i, j))
                return false;
    return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::partOrZero(std::size_t index) const noexcept {
    return index < parts_.size() ? parts_[index] : 0;
}

Partition Partition::parse(std::string_view text) {
    if (text.empty())
        return Partition();
    Scanner s{text};
    std::vector<int> parts;
    std::size_t partPos = s.pos;
    parts.push_back(s.integer());
    if (parts.back() < 1)
        throw parse_error(partPos, "positive part");
    while (s.tryConsume(',')) {
        partPos = s.pos;
        parts.push_back(s.integer());
        if (parts.back() < 1)
            throw parse_error(partPos, "positive part");
        if (parts[parts.size() - 2] < parts.back())
            throw parse_error(partPos, "weakly decreasing part");
    }
    s.end();
    return Partition(std::move(parts));
}

std::string Partition::render() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(parts_[k]);
    }
    return out;
}

}  // namespace atlas
