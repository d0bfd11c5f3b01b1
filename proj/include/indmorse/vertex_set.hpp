#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace indmorse {

// Set of dense vertex ids 0..capacity-1 stored as a word bitset. Two sets
// compare equal when they hold the same members, whatever their capacity.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : words_((capacity + 63) / 64, 0), capacity_(capacity) {}
    VertexSet(std::size_t capacity, std::initializer_list<int> members) : VertexSet(capacity) {
        for (int v : members) insert(v);
    }

    static VertexSet full(std::size_t capacity) {
        VertexSet s(capacity);
        for (std::size_t v = 0; v < capacity; ++v) s.insert(static_cast<int>(v));
        return s;
    }

    std::size_t capacity() const noexcept { return capacity_; }

    void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
    void erase(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }
    bool contains(int v) const {
        return v >= 0 && static_cast<std::size_t>(v) < capacity_ &&
               (words_[static_cast<std::size_t>(v) >> 6] & bit(v)) != 0;
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // Smallest member, or -1.
    int first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.word(i)) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.word(i)) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.word(i);
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        grow_to(o.capacity_);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.word(i);
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        const std::size_t n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.word(i) != b.word(i)) return false;
        return true;
    }

    std::size_t hash() const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        std::size_t n = words_.size();
        while (n > 0 && words_[n - 1] == 0) --n;
        for (std::size_t i = 0; i < n; ++i) h ^= std::hash<std::uint64_t>{}(words_[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    // Low 32 members as a mask; callers guarantee capacity <= 32.
    std::uint32_t to_mask32() const noexcept { return words_.empty() ? 0u : static_cast<std::uint32_t>(words_[0]); }
    static VertexSet from_mask32(std::size_t capacity, std::uint32_t mask) {
        VertexSet s(capacity);
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }

private:
    static std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63u); }
    std::uint64_t word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }
    void grow_to(std::size_t capacity) {
        if (capacity > capacity_) {
            capacity_ = capacity;
            words_.resize((capacity + 63) / 64, 0);
        }
    }

    std::vector<std::uint64_t> words_;
    std::size_t capacity_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace indmorse
