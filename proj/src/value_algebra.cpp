#include "vtrust/value_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace vtrust {

namespace {

void check_index(ValueId id) {
    if (id.index >= kMaxValues) {
        throw DomainError("value index " + std::to_string(id.index) + " exceeds capacity");
    }
}

}  // namespace

void ValueSet::insert(ValueId id) {
    check_index(id);
    words_[id.index / 64] |= std::uint64_t{1} << (id.index % 64);
}

void ValueSet::erase(ValueId id) {
    check_index(id);
    words_[id.index / 64] &= ~(std::uint64_t{1} << (id.index % 64));
}

bool ValueSet::contains(ValueId id) const {
    if (id.index >= kMaxValues) return false;
    return (words_[id.index / 64] >> (id.index % 64)) & 1U;
}

std::size_t ValueSet::size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool ValueSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t ValueSet::extent() const {
    for (std::size_t i = kWords; i-- > 0;) {
        if (words_[i] != 0) {
            return i * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_[i]));
        }
    }
    return 0;
}

bool ValueSet::is_subset_of(const ValueSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool ValueSet::intersects(const ValueSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

ValueSet& ValueSet::operator|=(const ValueSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
}

ValueSet& ValueSet::operator&=(const ValueSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
}

ValueSet& ValueSet::operator-=(const ValueSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
}

std::size_t ValueSet::next_from(std::size_t pos) const {
    while (pos < kMaxValues) {
        std::size_t word = pos / 64;
        std::uint64_t bits = words_[word] >> (pos % 64);
        if (bits != 0) return pos + static_cast<std::size_t>(std::countr_zero(bits));
        pos = (word + 1) * 64;
    }
    return kMaxValues;
}

bool is_valid_token(std::string_view token) {
    if (token.empty()) return false;
    return std::none_of(token.begin(), token.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isspace(u) || std::iscntrl(u);
    });
}

ValueUniverse::ValueUniverse(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& oppositions)
    : names_(std::move(names)) {
    if (names_.size() > kMaxValues) {
        throw DomainError("universe has " + std::to_string(names_.size()) +
                          " values; at most " + std::to_string(kMaxValues) + " are supported");
    }
    for (const auto& n : names_) {
        if (!is_valid_token(n)) throw DomainError("invalid value name '" + n + "'");
    }
    std::sort(names_.begin(), names_.end());
    auto dup = std::adjacent_find(names_.begin(), names_.end());
    if (dup != names_.end()) throw DomainError("duplicate value name '" + *dup + "'");

    opposing_.assign(names_.size(), ValueSet{});
    for (const auto& [a, b] : oppositions) {
        ValueId ia = id(a);
        ValueId ib = id(b);
        if (ia == ib) throw DomainError("value '" + a + "' cannot oppose itself");
        opposing_[ia.index].insert(ib);
        opposing_[ib.index].insert(ia);
    }
}

bool ValueUniverse::contains(std::string_view name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
}

ValueId ValueUniverse::id(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) {
        throw DomainError("unknown value '" + std::string(name) + "'");
    }
    return ValueId{static_cast<std::uint16_t>(it - names_.begin())};
}

const std::string& ValueUniverse::name(ValueId id) const {
    if (id.index >= names_.size()) {
        throw DomainError("value index " + std::to_string(id.index) + " not in universe");
    }
    return names_[id.index];
}

ValueSet ValueUniverse::all() const {
    ValueSet s;
    for (std::size_t i = 0; i < names_.size(); ++i) s.insert(ValueId{static_cast<std::uint16_t>(i)});
    return s;
}

const ValueSet& ValueUniverse::opposing(ValueId v) const {
    if (v.index >= names_.size()) {
        throw DomainError("value index " + std::to_string(v.index) + " not in universe");
    }
    return opposing_[v.index];
}

bool ValueUniverse::opposes(ValueId a, ValueId b) const {
    return opposing(a).contains(b);
}

std::vector<std::pair<ValueId, ValueId>> ValueUniverse::opposition_pairs() const {
    std::vector<std::pair<ValueId, ValueId>> pairs;
    for (std::size_t i = 0; i < opposing_.size(); ++i) {
        ValueId a{static_cast<std::uint16_t>(i)};
        for (ValueId b : opposing_[i]) {
            if (a < b) pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

void ValueUniverse::require_members(const ValueSet& set) const {
    if (set.extent() > names_.size()) {
        throw DomainError("value set contains values outside the universe");
    }
}

ValueSet ValueUniverse::make_set(std::initializer_list<std::string_view> names) const {
    ValueSet s;
    for (auto n : names) s.insert(id(n));
    return s;
}

std::vector<std::string> ValueUniverse::names_of(const ValueSet& set) const {
    require_members(set);
    std::vector<std::string> out;
    for (ValueId v : set) out.push_back(names_[v.index]);
    return out;
}

std::string ValueUniverse::format(const ValueSet& set) const {
    std::string out = "{";
    bool first = true;
    for (const auto& n : names_of(set)) {
        if (!first) out += ", ";
        out += n;
        first = false;
    }
    return out + "}";
}

ValueSet opposing_set(const ValueUniverse& universe, ValueId v) {
    return universe.opposing(v);
}

bool is_consistent(const ValueUniverse& universe, const ValueSet& set) {
    universe.require_members(set);
    for (ValueId v : set) {
        if (universe.opposing(v).intersects(set)) return false;
    }
    return true;
}

ValueSet conflict_set(const ValueUniverse& universe, const ValueSet& v, const ValueSet& w) {
    universe.require_members(v);
    universe.require_members(w);
    ValueSet out;
    for (ValueId x : v) {
        if (universe.opposing(x).intersects(w)) out.insert(x);
    }
    return out;
}

}  // namespace vtrust
