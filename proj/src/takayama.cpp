#include "lochom/takayama.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "lochom/errors.hpp"
#include "lochom/membership_box.hpp"

namespace lochom {

// ---------------------------------------------------------------------------
// DegreePattern / ExtendedDegree

std::vector<int> DegreePattern::representative() const {
    std::vector<int> a = a_plus;
    for (int j : negative.elements()) a[static_cast<std::size_t>(j)] = -1;
    return a;
}

long DegreePattern::positive_degree() const {
    return std::accumulate(a_plus.begin(), a_plus.end(), 0L);
}

DegreePattern pattern_of(std::span<const int> degree) {
    DegreePattern p;
    p.clamped = false;
    p.a_plus.assign(degree.begin(), degree.end());
    for (std::size_t j = 0; j < degree.size(); ++j) {
        if (degree[j] < 0) {
            p.negative.insert(static_cast<int>(j));
            p.a_plus[j] = 0;
        }
    }
    return p;
}

DegreePattern clamped_pattern_of(std::span<const int> degree, const VarDegreeBounds& bounds) {
    DegreePattern p = pattern_of(degree);
    for (std::size_t j = 0; j < p.a_plus.size(); ++j) p.a_plus[j] = std::min(p.a_plus[j], bounds.rho[j]);
    p.clamped = true;
    return p;
}

long ExtendedDegree::value() const {
    if (kind_ != Kind::Finite) throw DomainError("extended degree " + to_string() + " has no integer value");
    return value_;
}

std::string ExtendedDegree::to_string() const {
    switch (kind_) {
    case Kind::PlusInfinity: return "inf";
    case Kind::MinusInfinity: return "-inf";
    case Kind::Finite: break;
    }
    return std::to_string(value_);
}

ExtendedDegree ExtendedDegree::parse(const std::string& text) {
    if (text == "inf") return plus_infinity();
    if (text == "-inf") return minus_infinity();
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        throw ParseError("not an extended degree: '" + text + "'", 0);
    }
    if (used != text.size()) throw ParseError("not an extended degree: '" + text + "'", used);
    return finite(v);
}

// ---------------------------------------------------------------------------

namespace {

void check_proper(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw DomainError("R/I is the zero ring for the unit ideal");
    if (ideal.dim() > kMaxSubsetVars) throw DomainError("too many variables for degree complexes");
}

void check_index(const MonomialIdeal& ideal, int i) {
    if (i < 0 || i > ideal.dim()) {
        throw DomainError("cohomological degree " + std::to_string(i) + " outside [0," +
                          std::to_string(ideal.dim()) + "]");
    }
}

// Facets of the complex whose faces are marked in `face` (2^d entries).
SimplicialComplex complex_from_face_bits(int d, const std::vector<std::uint64_t>& face) {
    auto has = [&face](std::uint32_t mask) { return (face[mask >> 6] >> (mask & 63)) & 1u; };
    std::vector<VertexSet> facets;
    const std::uint32_t limit = 1u << d;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (!has(mask)) continue;
        bool maximal = true;
        for (int v = 0; v < d && maximal; ++v) {
            const std::uint32_t bit = 1u << v;
            if (!(mask & bit) && has(mask | bit)) maximal = false;
        }
        if (maximal) facets.emplace_back(mask);
    }
    return SimplicialComplex::from_facets(d, std::move(facets));
}

struct FaceBitsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& bits) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t w : bits) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }
};

} // namespace

std::uint64_t pattern_count(const VarDegreeBounds& bounds) {
    std::uint64_t count = 1;
    for (int r : bounds.rho) {
        const auto side = static_cast<std::uint64_t>(r) + 2;
        if (count > std::numeric_limits<std::uint64_t>::max() / side) return std::numeric_limits<std::uint64_t>::max();
        count *= side;
    }
    return count;
}

SimplicialComplex degree_complex(const MonomialIdeal& ideal, std::span<const int> degree) {
    check_proper(ideal);
    const int d = ideal.dim();
    if (static_cast<int>(degree.size()) != d) throw DomainError("degree vector length differs from d");
    const DegreePattern p = pattern_of(degree);
    const Monomial target(p.a_plus);
    const VertexSet free = VertexSet::full(d).minus(p.negative);

    std::vector<VertexSet> faces;
    const std::uint32_t bits = free.bits();
    for (std::uint32_t sub = bits;; sub = (sub - 1) & bits) {
        const VertexSet f(sub);
        if (!contains(project(ideal, f | p.negative), target)) faces.push_back(f);
        if (sub == 0) break;
    }
    return SimplicialComplex::from_facets(d, std::move(faces));
}

std::size_t cohomology_dim_at(const MonomialIdeal& ideal, int i, std::span<const int> degree, Field field) {
    check_proper(ideal);
    check_index(ideal, i);
    const int q = i - pattern_of(degree).negative.size() - 1;
    if (q < -1) {
        if (static_cast<int>(degree.size()) != ideal.dim()) throw DomainError("degree vector length differs from d");
        return 0;
    }
    return reduced_homology_dims(degree_complex(ideal, degree), field).dim(q);
}

// The scan visits every pattern (G, a+) with a+ in prod_{j not in G} [0, rho_j].
// Membership x^{a+} in I_S is read from the box with the coordinates in S
// lifted to rho; homology is cached per distinct face set.
std::vector<CohomologyTable> cohomology_tables(const MonomialIdeal& ideal, Field field, const TableOptions& options) {
    check_proper(ideal);
    const int d = ideal.dim();
    const VarDegreeBounds rho = var_degree_bounds(ideal);
    const std::uint64_t patterns = pattern_count(rho);
    if (patterns > options.pattern_cap) {
        throw ResourceCapError("cohomology table needs " + std::to_string(patterns) +
                                   " degree patterns, above the cap of " + std::to_string(options.pattern_cap),
                               patterns, options.pattern_cap);
    }
    const MembershipBox box(ideal, options.pattern_cap);

    std::vector<CohomologyTable> tables(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        auto& t = tables[static_cast<std::size_t>(i)];
        t.i = i;
        t.field = field;
        t.rho = rho;
    }

    const std::uint32_t subset_count = 1u << d;
    const std::size_t words = (subset_count + 63) / 64;
    std::unordered_map<std::vector<std::uint64_t>, HomologyProfile, FaceBitsHash> cache;
    std::vector<std::uint64_t> face(words);
    std::vector<std::uint64_t> lifted_index(subset_count);

    std::vector<VertexSet> negatives;
    for (std::uint32_t mask = 0; mask < subset_count; ++mask) negatives.emplace_back(mask);
    std::sort(negatives.begin(), negatives.end());

    for (VertexSet negative : negatives) {
        const VertexSet free = VertexSet::full(d).minus(negative);
        const std::vector<int> free_vars = free.elements();
        std::vector<int> a_plus(static_cast<std::size_t>(d), 0);

        while (true) {
            // cell index of a+ with the coordinates of `lifted` raised to rho
            std::uint64_t base = 0;
            for (int j = 0; j < d; ++j) {
                const int c = negative.contains(j) ? rho[j] : a_plus[static_cast<std::size_t>(j)];
                base += static_cast<std::uint64_t>(c) * box.stride(j);
            }
            std::fill(face.begin(), face.end(), 0);
            const std::uint32_t fbits = free.bits();
            for (std::uint32_t sub = fbits;; sub = (sub - 1) & fbits) {
                std::uint64_t index = base;
                for (std::uint32_t b = sub; b != 0; b &= b - 1) {
                    const int j = std::countr_zero(b);
                    index += static_cast<std::uint64_t>(rho[j] - a_plus[static_cast<std::size_t>(j)]) * box.stride(j);
                }
                if (!box.cell(index)) face[sub >> 6] |= std::uint64_t{1} << (sub & 63);
                if (sub == 0) break;
            }

            auto it = cache.find(face);
            if (it == cache.end()) {
                it = cache.emplace(face, reduced_homology_dims(complex_from_face_bits(d, face), field)).first;
            }
            const HomologyProfile& profile = it->second;
            for (const auto& [q, dim] : profile.dims) {
                const int i = q + negative.size() + 1;
                if (i < 0 || i > d) continue;
                for (int j : free_vars) {
                    if (a_plus[static_cast<std::size_t>(j)] >= rho[j]) {
                        throw InternalConsistencyError(
                            "nonzero local cohomology at a clamped coordinate (x" + std::to_string(j + 1) +
                            "); the module would not be Artinian");
                    }
                }
                auto& table = tables[static_cast<std::size_t>(i)];
                table.entries.emplace(DegreePattern{a_plus, negative, true}, dim);
                if (!negative.empty()) table.finite_length = false;
            }

            // next a+ in the free box
            std::size_t k = free_vars.size();
            while (k > 0) {
                const int j = free_vars[k - 1];
                auto& c = a_plus[static_cast<std::size_t>(j)];
                if (c < rho[j]) {
                    ++c;
                    break;
                }
                c = 0;
                --k;
            }
            if (k == 0) break;
        }
    }
    return tables;
}

CohomologyTable cohomology_table(const MonomialIdeal& ideal, int i, Field field, const TableOptions& options) {
    check_proper(ideal);
    check_index(ideal, i);
    auto tables = cohomology_tables(ideal, field, options);
    return std::move(tables[static_cast<std::size_t>(i)]);
}

bool is_finite_length(const MonomialIdeal& ideal, int i, Field field, const TableOptions& options) {
    return cohomology_table(ideal, i, field, options).finite_length;
}

ExtendedDegree indeg(const CohomologyTable& table) {
    if (!table.finite_length) return ExtendedDegree::minus_infinity();
    if (table.empty()) return ExtendedDegree::plus_infinity();
    long best = std::numeric_limits<long>::max();
    for (const auto& [pattern, dim] : table.entries) best = std::min(best, pattern.positive_degree());
    return ExtendedDegree::finite(best);
}

ExtendedDegree topdeg(const CohomologyTable& table) {
    if (table.empty()) return ExtendedDegree::minus_infinity();
    long best = std::numeric_limits<long>::min();
    for (const auto& [pattern, dim] : table.entries) best = std::max(best, pattern.top_total_degree());
    return ExtendedDegree::finite(best);
}

ExtendedDegree indeg(const MonomialIdeal& ideal, int i, Field field, const TableOptions& options) {
    return indeg(cohomology_table(ideal, i, field, options));
}

ExtendedDegree topdeg(const MonomialIdeal& ideal, int i, Field field, const TableOptions& options) {
    return topdeg(cohomology_table(ideal, i, field, options));
}

long regularity(const std::vector<CohomologyTable>& tables) {
    long best = std::numeric_limits<long>::min();
    for (const auto& t : tables) {
        if (!t.empty()) best = std::max(best, topdeg(t).value() + t.i);
    }
    if (best == std::numeric_limits<long>::min()) {
        throw InternalConsistencyError("every local cohomology module of a nonzero ring vanished");
    }
    return best;
}

long regularity(const MonomialIdeal& ideal, Field field, const TableOptions& options) {
    return regularity(cohomology_tables(ideal, field, options));
}

} // namespace lochom
