#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace tinkit {

/// Fixed-capacity dynamic bitset over vertex indices [0, size).
///
/// All binary operations require equal sizes; this is the caller's job
/// (every set in the library is sized to the vertex count of its graph).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bitset full(std::size_t size) {
        Bitset b(size);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset of(std::size_t size, std::span<const int> members) {
        Bitset b(size);
        for (int v : members) b.set(static_cast<std::size_t>(v));
        return b;
    }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    /// Lowest set index, or -1.
    int first() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
        return -1;
    }

    /// Lowest set index strictly greater than i, or -1.
    int next(int i) const noexcept {
        std::size_t pos = static_cast<std::size_t>(i + 1);
        if (pos >= size_) return -1;
        std::size_t k = pos >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (pos & 63));
        while (true) {
            if (w) return static_cast<int>(k * 64 + std::countr_zero(w));
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    /// this := this \ o
    Bitset& subtract(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a.subtract(b); }

    Bitset complement() const {
        Bitset c(*this);
        for (auto& w : c.words_) w = ~w;
        c.trim();
        return c;
    }

    bool intersects(const Bitset& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    std::size_t intersection_count(const Bitset& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    std::size_t hash() const noexcept {
        std::size_t h = size_;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    void trim() noexcept {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace tinkit
