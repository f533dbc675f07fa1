#pragma once

// Value universes, value sets and the conflict-set operator.
//
// A universe interns value names into dense ids. Ids are assigned in
// lexicographic name order, so comparing ids compares names. Opposition is a
// symmetric, irreflexive relation stored as one opposing-set bitmask per value.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vtrust/errors.hpp"

namespace vtrust {

inline constexpr std::size_t kMaxValues = 256;

struct ValueId {
    std::uint16_t index = 0;

    friend constexpr auto operator<=>(ValueId, ValueId) = default;
};

/// Finite set of values from one universe, stored as a fixed-width bitset.
class ValueSet {
    static constexpr std::size_t kWords = kMaxValues / 64;

public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = ValueId;
        using difference_type = std::ptrdiff_t;
        using pointer = const ValueId*;
        using reference = ValueId;

        const_iterator() = default;
        ValueId operator*() const { return ValueId{static_cast<std::uint16_t>(pos_)}; }
        const_iterator& operator++() {
            pos_ = set_->next_from(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            return a.pos_ == b.pos_;
        }

    private:
        friend class ValueSet;
        const_iterator(const ValueSet* set, std::size_t pos) : set_(set), pos_(pos) {}
        const ValueSet* set_ = nullptr;
        std::size_t pos_ = kMaxValues;
    };

    ValueSet() = default;
    ValueSet(std::initializer_list<ValueId> ids) {
        for (auto id : ids) insert(id);
    }

    /// Set holding value indices 0..63 wherever `mask` has a bit set.
    static ValueSet from_mask(std::uint64_t mask) {
        ValueSet s;
        s.words_[0] = mask;
        return s;
    }

    void insert(ValueId id);
    void erase(ValueId id);
    [[nodiscard]] bool contains(ValueId id) const;
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool empty() const;
    /// One past the largest member index, or 0 when empty.
    [[nodiscard]] std::size_t extent() const;
    [[nodiscard]] bool is_subset_of(const ValueSet& other) const;
    [[nodiscard]] bool intersects(const ValueSet& other) const;

    const_iterator begin() const { return {this, next_from(0)}; }
    const_iterator end() const { return {this, kMaxValues}; }

    ValueSet& operator|=(const ValueSet& o);
    ValueSet& operator&=(const ValueSet& o);
    ValueSet& operator-=(const ValueSet& o);

    friend ValueSet operator|(ValueSet a, const ValueSet& b) { return a |= b; }
    friend ValueSet operator&(ValueSet a, const ValueSet& b) { return a &= b; }
    friend ValueSet operator-(ValueSet a, const ValueSet& b) { return a -= b; }
    friend bool operator==(const ValueSet&, const ValueSet&) = default;

private:
    [[nodiscard]] std::size_t next_from(std::size_t pos) const;

    std::array<std::uint64_t, kWords> words_{};
};

/// Value vocabulary plus the opposition relation.
class ValueUniverse {
public:
    ValueUniverse() = default;

    /// Builds a universe from names and unordered opposition pairs. Rejects
    /// duplicate or malformed names, unknown pair endpoints and reflexive
    /// pairs. Duplicate pairs (in either orientation) collapse.
    ValueUniverse(std::vector<std::string> names,
                  const std::vector<std::pair<std::string, std::string>>& oppositions);

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] bool contains(std::string_view name) const;
    [[nodiscard]] ValueId id(std::string_view name) const;
    [[nodiscard]] const std::string& name(ValueId id) const;
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] ValueSet all() const;

    /// ~v. Throws DomainError if `v` is not in the universe.
    [[nodiscard]] const ValueSet& opposing(ValueId v) const;
    [[nodiscard]] bool opposes(ValueId a, ValueId b) const;

    /// Opposition pairs (lower id first), ascending.
    [[nodiscard]] std::vector<std::pair<ValueId, ValueId>> opposition_pairs() const;

    /// Throws DomainError unless every member of `set` is in this universe.
    void require_members(const ValueSet& set) const;

    [[nodiscard]] ValueSet make_set(std::initializer_list<std::string_view> names) const;
    template <typename Range>
    [[nodiscard]] ValueSet make_set_from(const Range& names) const {
        ValueSet s;
        for (const auto& n : names) s.insert(id(n));
        return s;
    }
    [[nodiscard]] std::vector<std::string> names_of(const ValueSet& set) const;
    /// "{a, b, c}"
    [[nodiscard]] std::string format(const ValueSet& set) const;

    friend bool operator==(const ValueUniverse&, const ValueUniverse&) = default;

private:
    std::vector<std::string> names_;
    std::vector<ValueSet> opposing_;
};

/// Nonempty, no whitespace or control characters.
[[nodiscard]] bool is_valid_token(std::string_view token);

[[nodiscard]] ValueSet opposing_set(const ValueUniverse& universe, ValueId v);

/// True iff no member of `set` has an opposing value also in `set`.
[[nodiscard]] bool is_consistent(const ValueUniverse& universe, const ValueSet& set);

/// V ⊥ W: the members of `v` that oppose some member of `w`. Directional;
/// the result is always a subset of `v`.
[[nodiscard]] ValueSet conflict_set(const ValueUniverse& universe, const ValueSet& v,
                                    const ValueSet& w);

}  // namespace vtrust
