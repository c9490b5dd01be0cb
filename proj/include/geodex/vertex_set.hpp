#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace geodex {

using Vertex = int;

/// Fixed-capacity bit set over vertex ids 0..127. Two machine words, so it is
/// cheap to copy, compare and hash; every solver uses it as a memo key.
class VertexSet {
public:
    static constexpr int kCapacity = 128;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        VertexSet s;
        if (n >= 64) {
            s.w_[0] = ~std::uint64_t{0};
            s.w_[1] = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
        } else if (n > 0) {
            s.w_[0] = (std::uint64_t{1} << n) - 1;
        }
        return s;
    }
    static constexpr VertexSet singleton(Vertex v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    constexpr bool contains(Vertex v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
    constexpr void insert(Vertex v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void erase(Vertex v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
    constexpr int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    /// Smallest member, or -1 when empty.
    constexpr Vertex first() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    constexpr bool is_subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }
    constexpr bool intersects(const VertexSet& o) const {
        return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
    }

    constexpr VertexSet& operator|=(const VertexSet& o) {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }
    constexpr VertexSet& operator&=(const VertexSet& o) {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }
    /// Set difference.
    constexpr VertexSet& operator-=(const VertexSet& o) {
        w_[0] &= ~o.w_[0];
        w_[1] &= ~o.w_[1];
        return *this;
    }
    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
    friend constexpr auto operator<=>(const VertexSet&, const VertexSet&) = default;

    std::uint64_t word(int i) const { return w_[i]; }
    std::size_t hash() const {
        std::uint64_t h = w_[0] * 0x9E3779B97F4A7C15ULL;
        h ^= (w_[1] + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < 2; ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }
    static VertexSet from(const std::vector<Vertex>& vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    /// "{0,3,5}"
    std::string str() const;

private:
    std::array<std::uint64_t, 2> w_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace geodex

template <>
struct std::hash<geodex::VertexSet> {
    std::size_t operator()(const geodex::VertexSet& s) const { return s.hash(); }
};
