#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace causal {

/// Set of node indices backed by a 64-bit mask. Graphs in this library are
/// capped at 64 nodes, which keeps separation queries and subset searches
/// allocation-free.
class NodeSet {
public:
    static constexpr int kMaxNodes = 64;

    constexpr NodeSet() = default;
    constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr NodeSet of(std::initializer_list<int> items) {
        NodeSet s;
        for (int i : items) s.insert(i);
        return s;
    }

    /// All indices in [0, n).
    static constexpr NodeSet full(int n) {
        if (n <= 0) return NodeSet();
        if (n >= 64) return NodeSet(~std::uint64_t{0});
        return NodeSet((std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr NodeSet with(int i) const {
        NodeSet s = *this;
        s.insert(i);
        return s;
    }
    constexpr NodeSet without(int i) const {
        NodeSet s = *this;
        s.erase(i);
        return s;
    }

    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcountll(bits_); }

    constexpr std::uint64_t bits() const { return bits_; }

    constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
    constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
    constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
    constexpr NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
    constexpr NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const NodeSet&) const = default;

    constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }

    /// Lowest set index; -1 when empty.
    int lowest() const { return bits_ ? __builtin_ctzll(bits_) : -1; }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b;) {
            int i = __builtin_ctzll(b);
            v.push_back(i);
            b &= b - 1;
        }
        return v;
    }

    class iterator {
    public:
        explicit iterator(std::uint64_t b) : bits_(b) {}
        int operator*() const { return __builtin_ctzll(bits_); }
        iterator& operator++() {
            bits_ &= bits_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

    private:
        std::uint64_t bits_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Visits every subset of `pool` in ascending cardinality, ties broken
/// lexicographically on the sorted index list ({0,1} before {0,2} before
/// {1,2}). Stops early when `fn` returns true; returns whether it stopped.
/// This ordering is the canonical separator-search order used throughout.
template <typename F>
bool for_each_subset_ordered(NodeSet pool, F&& fn) {
    const std::vector<int> items = pool.to_vector();
    const int m = static_cast<int>(items.size());
    std::vector<int> pick;
    for (int k = 0; k <= m; ++k) {
        pick.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            NodeSet s;
            for (int idx : pick) s.insert(items[static_cast<std::size_t>(idx)]);
            if (fn(s)) return true;
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return false;
}

}  // namespace causal
