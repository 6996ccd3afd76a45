#include "lochom/membership_box.hpp"

#include <limits>

#include "lochom/errors.hpp"

namespace lochom {

std::uint64_t MembershipBox::volume_of(const VarDegreeBounds& bounds) {
    std::uint64_t volume = 1;
    for (int r : bounds.rho) {
        const auto side = static_cast<std::uint64_t>(r) + 1;
        if (volume > std::numeric_limits<std::uint64_t>::max() / side) return 0;
        volume *= side;
    }
    return volume;
}

MembershipBox::MembershipBox(const MonomialIdeal& ideal, std::uint64_t max_volume)
    : bounds_(var_degree_bounds(ideal)) {
    const std::uint64_t volume = volume_of(bounds_);
    if (volume == 0 || volume > max_volume) {
        throw ResourceCapError("membership box of " + std::to_string(volume) + " cells exceeds the limit of " +
                                   std::to_string(max_volume),
                               volume, max_volume);
    }
    const int d = ideal.dim();
    strides_.resize(static_cast<std::size_t>(d));
    std::uint64_t stride = 1;
    for (int j = 0; j < d; ++j) {
        strides_[static_cast<std::size_t>(j)] = stride;
        stride *= static_cast<std::uint64_t>(bounds_[j]) + 1;
    }
    cells_.assign(volume, 0);
    for (const auto& g : ideal.gens()) {
        std::uint64_t index = 0;
        for (int j = 0; j < d; ++j) index += static_cast<std::uint64_t>(g[j]) * strides_[static_cast<std::size_t>(j)];
        cells_[index] = 1;
    }
    // Up-closure, one axis at a time; index order visits p - stride_j before p.
    for (int j = 0; j < d; ++j) {
        const std::uint64_t s = strides_[static_cast<std::size_t>(j)];
        const std::uint64_t side = static_cast<std::uint64_t>(bounds_[j]) + 1;
        if (side == 1) continue;
        for (std::uint64_t index = 0; index < volume; ++index) {
            if ((index / s) % side != 0 && cells_[index - s]) cells_[index] = 1;
        }
    }
}

bool MembershipBox::contains(std::span<const int> point, VertexSet lifted) const {
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < strides_.size(); ++j) {
        const int r = bounds_.rho[j];
        const int c = lifted.contains(static_cast<int>(j)) ? r : std::min(point[j], r);
        index += static_cast<std::uint64_t>(c) * strides_[j];
    }
    return cells_[index] != 0;
}

} // namespace lochom
