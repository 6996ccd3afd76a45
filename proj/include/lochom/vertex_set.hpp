#pragma once

#include <bit>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <string>
#include <vector>

namespace lochom {

/// Largest variable count for anything that enumerates subsets of [d].
inline constexpr int kMaxSubsetVars = 20;

/// A subset of [d] = {1, ..., d}, stored as a bit mask (bit j-1 <-> index j).
/// Indices are 0-based in the API; rendering converts to 1-based.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

    static VertexSet full(int d) { return VertexSet(d >= 32 ? ~0u : ((1u << d) - 1u)); }
    static VertexSet of(std::initializer_list<int> zero_based) {
        VertexSet s;
        for (int v : zero_based) s.insert(v);
        return s;
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr void insert(int v) { bits_ |= (1u << v); }
    constexpr void erase(int v) { bits_ &= ~(1u << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    /// Members in increasing order, 0-based.
    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    /// `{1,3}` style, 1-based.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : elements()) {
            if (!first) s += ',';
            s += std::to_string(v + 1);
            first = false;
        }
        return s + "}";
    }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    /// Faces order: by cardinality, then lexicographic on sorted members.
    friend std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        const std::uint32_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) return std::strong_ordering::equal;
        const std::uint32_t lowest = diff & (~diff + 1u);
        return (a.bits_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    std::uint32_t bits_ = 0;
};

} // namespace lochom
