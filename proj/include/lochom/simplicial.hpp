#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lochom/monomial.hpp"
#include "lochom/vertex_set.hpp"

namespace lochom {

/// Coefficient field of a homology computation: Q (characteristic 0) or F_p.
class Field {
public:
    Field() = default;
    /// Throws DomainError unless `characteristic` is 0 or a prime.
    static Field of(int characteristic);
    static Field rationals() { return Field(); }

    int characteristic() const { return characteristic_; }

    friend bool operator==(Field, Field) = default;

private:
    explicit Field(int p) : characteristic_(p) {}
    int characteristic_ = 0;
};

/// A simplicial complex on [d], held by its facets (an antichain in
/// canonical order).
///
/// Two degenerate kinds matter for reduced homology. The void complex has
/// no faces at all, not even the empty one, and is homologically zero. The
/// irrelevant complex {∅} has only the empty face and carries H̃_{-1} = k.
class SimplicialComplex {
public:
    enum class Kind { Void, Irrelevant, Ordinary };

    SimplicialComplex() = default;

    /// Reduces `faces` to its inclusion-maximal members.
    static SimplicialComplex from_facets(int d, std::vector<VertexSet> faces);
    static SimplicialComplex void_complex(int d) { return from_facets(d, {}); }
    static SimplicialComplex irrelevant(int d) { return from_facets(d, {VertexSet{}}); }
    static SimplicialComplex simplex(int d) { return from_facets(d, {VertexSet::full(d)}); }

    int vertex_count() const { return d_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    Kind kind() const;

    bool contains(VertexSet face) const;
    /// All faces including ∅ (unless void), sorted by size then lexicographically.
    std::vector<VertexSet> faces() const;
    /// Largest face size minus one; -1 for the irrelevant complex, -2 when void.
    int dimension() const;

    /// Faces G with G ∩ F = ∅ and G ∪ F a face.
    SimplicialComplex link(VertexSet face) const;
    /// Cone with apex `apex`, which must be a vertex not used by any facet.
    SimplicialComplex cone(int apex) const;

    /// One facet per line as comma separated 1-based vertices; `void` or `{}`
    /// for the degenerate kinds.
    std::string to_text() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int d_ = 0;
    std::vector<VertexSet> facets_;
};

/// dim_k H̃_q for q in [-1, d-1]; absent degrees are zero.
struct HomologyProfile {
    int characteristic = 0;
    std::map<int, std::size_t> dims;

    std::size_t dim(int q) const {
        auto it = dims.find(q);
        return it == dims.end() ? 0 : it->second;
    }
    bool is_zero() const { return dims.empty(); }
    /// sum_q (-1)^q dim H̃_q
    long euler_characteristic() const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Faces are exactly the F with prod_{j in F} x_j not in sqrt(I).
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);
/// Squarefree ideal of the minimal non-faces. Throws on the void complex.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Reduced homology from the boundary matrices of the full face poset.
HomologyProfile reduced_homology_dims(const SimplicialComplex& complex, Field field);

/// Rank of an integer matrix over `field` (rows of equal length).
std::size_t matrix_rank(std::vector<std::vector<long>> rows, Field field);

/// sum over faces F (∅ included) of (-1)^{|F|-1}; 0 for the void complex.
long reduced_euler_characteristic(const SimplicialComplex& complex);

} // namespace lochom
