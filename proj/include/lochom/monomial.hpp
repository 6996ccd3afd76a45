#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lochom/vertex_set.hpp"

namespace lochom {

/// x^a for an exponent vector a in N^d.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int d) { return Monomial(std::vector<int>(static_cast<std::size_t>(d), 0)); }
    static Monomial variable(int d, int j);

    int dim() const { return static_cast<int>(exponents_.size()); }
    int operator[](int j) const { return exponents_[static_cast<std::size_t>(j)]; }
    std::span<const int> exponents() const { return exponents_; }

    long degree() const;
    bool is_one() const;
    /// Variables with a positive exponent.
    VertexSet support() const;

    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    /// `x1^2*x3`, or `1`.
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Lexicographic on exponent vectors.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exponents_;
};

/// Per-variable maximum exponent over the minimal generators.
struct VarDegreeBounds {
    std::vector<int> rho;

    int operator[](int j) const { return rho[static_cast<std::size_t>(j)]; }
    friend bool operator==(const VarDegreeBounds&, const VarDegreeBounds&) = default;
};

/// A monomial ideal in k[x1..xd], held by its minimal generators in
/// lexicographic order so that structural equality is ideal equality.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Minimalizes `gens`. Throws DomainError on a generator of the wrong dimension.
    MonomialIdeal(int d, std::vector<Monomial> gens);

    static MonomialIdeal zero(int d) { return MonomialIdeal(d, {}); }
    static MonomialIdeal unit(int d) { return MonomialIdeal(d, {Monomial::one(d)}); }
    /// The irrelevant ideal (x1, ..., xd).
    static MonomialIdeal maximal(int d);

    int dim() const { return d_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_squarefree() const;

    /// Comma separated generator list in the ideal text grammar.
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int d_ = 0;
    std::vector<Monomial> gens_;
};

/// Parses `x1*x3, x2^2*x4` style text (commas or newlines between terms).
/// `0` or an empty list is the zero ideal, `1` the unit ideal.
MonomialIdeal parse_ideal(std::string_view text, int d);

/// Divisibility-minimal subset, sorted lexicographically and deduplicated.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^n for n >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, int n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// Inclusion of ideals.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

/// pi_F(I): every x_j with j in F set to 1 (0-based indices in `vars`).
MonomialIdeal project(const MonomialIdeal& ideal, VertexSet vars);

/// (J : x_j).
MonomialIdeal colon_variable(const MonomialIdeal& ideal, int j);
/// (J : m) = intersection over j of (J : x_j).
MonomialIdeal colon_maximal(const MonomialIdeal& ideal);
/// (I :_R m^infinity).
MonomialIdeal saturate_irrelevant(const MonomialIdeal& ideal);

MonomialIdeal radical(const MonomialIdeal& ideal);
VarDegreeBounds var_degree_bounds(const MonomialIdeal& ideal);

/// dim_k (R/I)_t. Chooses between the two counting routes below.
std::uint64_t hilbert_function(const MonomialIdeal& ideal, int t);
/// Inclusion-exclusion over lcm's of generator subsets, pruning lcm degree > t.
std::uint64_t hilbert_function_inclusion_exclusion(const MonomialIdeal& ideal, int t);
/// Enumerates every monomial of degree t and tests membership.
std::uint64_t hilbert_function_enumerate(const MonomialIdeal& ideal, int t);

/// dim R/I: size of the largest face of the complex of sqrt(I).
int krull_dimension(const MonomialIdeal& ideal);

} // namespace lochom
