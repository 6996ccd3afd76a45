#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lochom/monomial.hpp"
#include "lochom/simplicial.hpp"

namespace lochom {

/// Canonical representative of a class of Z^d-degrees a sharing the same
/// degree complex: the negative support G = {j : a_j < 0} and the positive
/// part a+ (zero on G), clamped at the per-variable generator bound rho.
struct DegreePattern {
    std::vector<int> a_plus;
    VertexSet negative;
    bool clamped = true;

    /// a+ with -1 on the negative support; the degree of largest total
    /// degree in the class.
    std::vector<int> representative() const;
    long positive_degree() const;
    /// |a+| - |G|
    long top_total_degree() const { return positive_degree() - negative.size(); }

    friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
    friend std::strong_ordering operator<=>(const DegreePattern& a, const DegreePattern& b) {
        if (auto c = a.negative <=> b.negative; c != 0) return c;
        if (auto c = a.a_plus <=> b.a_plus; c != 0) return c;
        return a.clamped <=> b.clamped;
    }
};

/// Splits a Z^d-degree into (G_a, a+); no clamping.
DegreePattern pattern_of(std::span<const int> degree);
/// As above, with a+ clamped at `bounds`.
DegreePattern clamped_pattern_of(std::span<const int> degree, const VarDegreeBounds& bounds);

/// An integer degree, or +inf (zero module), or -inf (support unbounded below).
class ExtendedDegree {
public:
    enum class Kind { Finite, PlusInfinity, MinusInfinity };

    static ExtendedDegree finite(long value) { return ExtendedDegree(Kind::Finite, value); }
    static ExtendedDegree plus_infinity() { return ExtendedDegree(Kind::PlusInfinity, 0); }
    static ExtendedDegree minus_infinity() { return ExtendedDegree(Kind::MinusInfinity, 0); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    /// Throws DomainError on an infinite value.
    long value() const;

    /// Integer, `inf` or `-inf`.
    std::string to_string() const;
    static ExtendedDegree parse(const std::string& text);

    friend bool operator==(const ExtendedDegree&, const ExtendedDegree&) = default;

private:
    ExtendedDegree(Kind kind, long value) : kind_(kind), value_(value) {}
    Kind kind_;
    long value_;
};

/// The full Z^d-graded module H^i_m(R/I) as a finite map from degree
/// patterns to (nonzero) dimensions.
struct CohomologyTable {
    int i = 0;
    Field field;
    std::map<DegreePattern, std::size_t> entries;
    VarDegreeBounds rho;
    bool finite_length = true;

    bool empty() const { return entries.empty(); }
    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

struct TableOptions {
    /// Maximum number of degree patterns, prod_j (rho_j + 2), per table scan.
    std::uint64_t pattern_cap = 10'000'000;
};

/// prod_j (rho_j + 2): every (G, clamped a+) pair, saturating at UINT64_MAX.
std::uint64_t pattern_count(const VarDegreeBounds& bounds);

/// Δ_a(I): faces F of [d] \ G_a with x^{a+} not in I_{F ∪ G_a}.
SimplicialComplex degree_complex(const MonomialIdeal& ideal, std::span<const int> degree);

/// dim_k H^i_m(R/I)_a = dim_k H̃_{i-|G_a|-1}(Δ_a(I); k).
std::size_t cohomology_dim_at(const MonomialIdeal& ideal, int i, std::span<const int> degree, Field field);

CohomologyTable cohomology_table(const MonomialIdeal& ideal, int i, Field field, const TableOptions& options = {});
/// Tables for every i in [0, d] from a single pattern scan.
std::vector<CohomologyTable> cohomology_tables(const MonomialIdeal& ideal, Field field,
                                               const TableOptions& options = {});

bool is_finite_length(const MonomialIdeal& ideal, int i, Field field, const TableOptions& options = {});

ExtendedDegree indeg(const CohomologyTable& table);
ExtendedDegree topdeg(const CohomologyTable& table);
ExtendedDegree indeg(const MonomialIdeal& ideal, int i, Field field, const TableOptions& options = {});
ExtendedDegree topdeg(const MonomialIdeal& ideal, int i, Field field, const TableOptions& options = {});

/// max_i topdeg H^i + i over the nonzero tables of `tables` (indexed by i).
long regularity(const std::vector<CohomologyTable>& tables);
long regularity(const MonomialIdeal& ideal, Field field, const TableOptions& options = {});

} // namespace lochom
