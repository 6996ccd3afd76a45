#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lochom/monomial.hpp"

namespace lochom {

/// Dense membership bitmap of a monomial ideal over the exponent box
/// prod_j [0, rho_j]. A point past rho_j in any coordinate behaves like
/// rho_j, so the box answers x^a in I for every a in N^d, and x^a in I_S
/// by lifting the coordinates in S to rho.
class MembershipBox {
public:
    /// Throws ResourceCapError when the box volume exceeds `max_volume`.
    explicit MembershipBox(const MonomialIdeal& ideal, std::uint64_t max_volume = kDefaultMaxVolume);

    static constexpr std::uint64_t kDefaultMaxVolume = std::uint64_t{1} << 27;

    /// prod_j (rho_j + 1), or 0 if that overflows 64 bits.
    static std::uint64_t volume_of(const VarDegreeBounds& bounds);

    int dim() const { return static_cast<int>(bounds_.rho.size()); }
    const VarDegreeBounds& bounds() const { return bounds_; }
    std::uint64_t volume() const { return cells_.size(); }

    /// x^point in pi_lifted(I); `point` must be non-negative and is clamped at rho.
    bool contains(std::span<const int> point, VertexSet lifted = {}) const;

    /// Direct cell access by linear index (coordinate 0 varies fastest).
    bool cell(std::uint64_t index) const { return cells_[index] != 0; }
    std::uint64_t stride(int j) const { return strides_[static_cast<std::size_t>(j)]; }

private:
    VarDegreeBounds bounds_;
    std::vector<std::uint64_t> strides_;
    std::vector<std::uint8_t> cells_;
};

} // namespace lochom
