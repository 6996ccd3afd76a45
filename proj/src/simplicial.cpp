#include "lochom/simplicial.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <utility>

#include <gmpxx.h>

#include "lochom/errors.hpp"

namespace lochom {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int k = 2; static_cast<long>(k) * k <= p; ++k) {
        if (p % k == 0) return false;
    }
    return true;
}

void check_vertex_count(int d) {
    if (d < 1 || d > kMaxSubsetVars) {
        throw DomainError("vertex count must lie in [1," + std::to_string(kMaxSubsetVars) + "]");
    }
}

// byte per subset of [d]: 1 iff the subset is a face
std::vector<std::uint8_t> face_bitmap(const SimplicialComplex& k) {
    const int d = k.vertex_count();
    const std::uint32_t limit = 1u << d;
    std::vector<std::uint8_t> face(limit, 0);
    for (VertexSet f : k.facets()) face[f.bits()] = 1;
    // down-closure: mask is a face if mask + v is, for some v
    for (int v = 0; v < d; ++v) {
        const std::uint32_t bit = 1u << v;
        for (std::uint32_t mask = limit; mask-- > 0;) {
            if (!(mask & bit) && face[mask | bit]) face[mask] = 1;
        }
    }
    return face;
}

} // namespace

Field Field::of(int characteristic) {
    if (characteristic != 0 && !is_prime(characteristic)) {
        throw DomainError("field characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    }
    return Field(characteristic);
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_facets(int d, std::vector<VertexSet> faces) {
    check_vertex_count(d);
    const VertexSet all = VertexSet::full(d);
    for (VertexSet f : faces) {
        if (!f.is_subset_of(all)) throw DomainError("face " + f.to_string() + " uses a vertex outside [d]");
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexSet> facets;
    // sorted by size, so a proper superset of faces[k] comes later
    for (std::size_t k = 0; k < faces.size(); ++k) {
        bool maximal = true;
        for (std::size_t m = k + 1; m < faces.size() && maximal; ++m) {
            if (faces[m] != faces[k] && faces[k].is_subset_of(faces[m])) maximal = false;
        }
        if (maximal) facets.push_back(faces[k]);
    }
    SimplicialComplex c;
    c.d_ = d;
    c.facets_ = std::move(facets);
    return c;
}

SimplicialComplex::Kind SimplicialComplex::kind() const {
    if (facets_.empty()) return Kind::Void;
    if (facets_.size() == 1 && facets_.front().empty()) return Kind::Irrelevant;
    return Kind::Ordinary;
}

bool SimplicialComplex::contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.is_subset_of(f); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    std::vector<VertexSet> out;
    for (VertexSet f : facets_) {
        // all submasks of f
        const std::uint32_t bits = f.bits();
        for (std::uint32_t sub = bits;; sub = (sub - 1) & bits) {
            out.emplace_back(sub);
            if (sub == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int SimplicialComplex::dimension() const {
    if (facets_.empty()) return -2;
    int best = 0;
    for (VertexSet f : facets_) best = std::max(best, f.size());
    return best - 1;
}

SimplicialComplex SimplicialComplex::link(VertexSet face) const {
    std::vector<VertexSet> pieces;
    for (VertexSet f : facets_) {
        if (face.is_subset_of(f)) pieces.push_back(f.minus(face));
    }
    return from_facets(d_, std::move(pieces));
}

SimplicialComplex SimplicialComplex::cone(int apex) const {
    if (apex < 0 || apex >= d_) throw DomainError("cone apex outside [d]");
    std::vector<VertexSet> coned;
    for (VertexSet f : facets_) {
        if (f.contains(apex)) throw DomainError("cone apex already a vertex of the complex");
        coned.push_back(f | VertexSet::of({apex}));
    }
    return from_facets(d_, std::move(coned));
}

std::string SimplicialComplex::to_text() const {
    switch (kind()) {
    case Kind::Void: return "void\n";
    case Kind::Irrelevant: return "{}\n";
    case Kind::Ordinary: break;
    }
    std::string out;
    for (VertexSet f : facets_) {
        bool first = true;
        for (int v : f.elements()) {
            if (!first) out += ',';
            out += std::to_string(v + 1);
            first = false;
        }
        out += '\n';
    }
    return out;
}

long HomologyProfile::euler_characteristic() const {
    long chi = 0;
    for (const auto& [q, dim] : dims) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(dim);
    return chi;
}

long reduced_euler_characteristic(const SimplicialComplex& complex) {
    long chi = 0;
    for (VertexSet f : complex.faces()) chi += ((f.size() - 1) % 2 == 0) ? 1 : -1;
    return chi;
}

// ---------------------------------------------------------------------------
// Stanley-Reisner correspondence

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    const int d = ideal.dim();
    check_vertex_count(d);
    const std::uint32_t limit = 1u << d;
    std::vector<std::uint8_t> nonface(limit, 0);
    for (const auto& g : ideal.gens()) nonface[g.support().bits()] = 1;
    for (int v = 0; v < d; ++v) {
        const std::uint32_t bit = 1u << v;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            if ((mask & bit) && nonface[mask ^ bit]) nonface[mask] = 1;
        }
    }
    std::vector<VertexSet> facets;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (nonface[mask]) continue;
        bool maximal = true;
        for (int v = 0; v < d && maximal; ++v) {
            if (!(mask & (1u << v)) && !nonface[mask | (1u << v)]) maximal = false;
        }
        if (maximal) facets.emplace_back(mask);
    }
    return SimplicialComplex::from_facets(d, std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    if (complex.kind() == SimplicialComplex::Kind::Void) {
        throw DomainError("the void complex has no Stanley-Reisner ideal");
    }
    const int d = complex.vertex_count();
    const auto face = face_bitmap(complex);
    std::vector<Monomial> gens;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        if (face[mask]) continue;
        bool minimal = true;
        for (int v = 0; v < d && minimal; ++v) {
            if ((mask & (1u << v)) && !face[mask ^ (1u << v)]) minimal = false;
        }
        if (!minimal) continue;
        std::vector<int> e(static_cast<std::size_t>(d), 0);
        for (int v : VertexSet(mask).elements()) e[static_cast<std::size_t>(v)] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(d, std::move(gens));
}

// ---------------------------------------------------------------------------
// Ranks

namespace {

std::size_t rank_mod_p(std::vector<std::vector<long>>& m, long p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (auto& row : m) {
        for (auto& x : row) x = ((x % p) + p) % p;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        // inverse via Fermat
        long inv = 1, base = m[rank][c], e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const long factor = m[r][c] * inv % p;
            for (std::size_t k = c; k < cols; ++k) {
                m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

// Fraction-free (Bareiss) elimination; every intermediate entry is a minor
// of the input, and each division is exact.
template <typename Int, typename Step>
std::size_t bareiss_rank(std::vector<std::vector<Int>>& m, Step&& step) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    Int previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                m[r][k] = step(m[rank][c], m[r][k], m[r][c], m[rank][k], previous);
            }
            m[r][c] = 0;
        }
        previous = m[rank][c];
        ++rank;
    }
    return rank;
}

struct Overflow {};

std::size_t rank_rational(const std::vector<std::vector<long>>& input) {
    try {
        auto m = input;
        return bareiss_rank(m, [](long a, long b, long c, long e, long prev) {
            const __int128 v = (static_cast<__int128>(a) * b - static_cast<__int128>(c) * e) / prev;
            if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min()) throw Overflow{};
            return static_cast<long>(v);
        });
    } catch (const Overflow&) {
        std::vector<std::vector<mpz_class>> m;
        m.reserve(input.size());
        for (const auto& row : input) m.emplace_back(row.begin(), row.end());
        return bareiss_rank(m, [](const mpz_class& a, const mpz_class& b, const mpz_class& c,
                                  const mpz_class& e, const mpz_class& prev) {
            mpz_class v = a * b - c * e;
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            return v;
        });
    }
}

} // namespace

std::size_t matrix_rank(std::vector<std::vector<long>> rows, Field field) {
    if (rows.empty() || rows.front().empty()) return 0;
    if (field.characteristic() == 0) return rank_rational(rows);
    return rank_mod_p(rows, field.characteristic());
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& complex, Field field) {
    HomologyProfile profile;
    profile.characteristic = field.characteristic();
    if (complex.kind() == SimplicialComplex::Kind::Void) return profile;

    // cells[k] = faces with k vertices, i.e. cells of degree k - 1
    std::vector<std::vector<VertexSet>> cells(static_cast<std::size_t>(complex.dimension() + 2));
    for (VertexSet f : complex.faces()) cells[static_cast<std::size_t>(f.size())].push_back(f);

    // rank of the boundary from size-k faces to size-(k-1) faces
    std::vector<std::size_t> boundary_rank(cells.size() + 1, 0);
    for (std::size_t k = 1; k < cells.size(); ++k) {
        const auto& lower = cells[k - 1];
        const auto& upper = cells[k];
        std::unordered_map<std::uint32_t, std::size_t> row_of;
        for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r].bits(), r);
        std::vector<std::vector<long>> matrix(lower.size(), std::vector<long>(upper.size(), 0));
        for (std::size_t c = 0; c < upper.size(); ++c) {
            long sign = 1;
            for (int v : upper[c].elements()) {
                VertexSet facet = upper[c];
                facet.erase(v);
                matrix[row_of.at(facet.bits())][c] = sign;
                sign = -sign;
            }
        }
        boundary_rank[k] = matrix_rank(std::move(matrix), field);
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const std::size_t dim = cells[k].size() - boundary_rank[k] - boundary_rank[k + 1];
        if (dim != 0) profile.dims[static_cast<int>(k) - 1] = dim;
    }
    return profile;
}

} // namespace lochom
