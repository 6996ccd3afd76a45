#include "lochom/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <utility>

#include "lochom/errors.hpp"
#include "lochom/membership_box.hpp"

namespace lochom {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
        if (e < 0) throw DomainError("monomial exponents must be non-negative");
    }
}

Monomial Monomial::variable(int d, int j) {
    if (j < 0 || j >= d) throw DomainError("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(j)] = 1;
    return Monomial(std::move(e));
}

long Monomial::degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0L);
}

bool Monomial::is_one() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

VertexSet Monomial::support() const {
    VertexSet s;
    for (int j = 0; j < dim(); ++j) {
        if (exponents_[static_cast<std::size_t>(j)] > 0) s.insert(j);
    }
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        if (exponents_[j] > other.exponents_[j]) return false;
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = a.exponents_[j] + b.exponents_[j];
    Monomial m;
    m.exponents_ = std::move(e);
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::max(a.exponents_[j], b.exponents_[j]);
    Monomial m;
    m.exponents_ = std::move(e);
    return m;
}

std::string Monomial::to_string() const {
    std::string out;
    for (int j = 0; j < dim(); ++j) {
        const int e = (*this)[j];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(j + 1);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

namespace {

void check_same_dim(const std::vector<Monomial>& gens, int d) {
    for (const auto& g : gens) {
        if (g.dim() != d) throw DomainError("monomials of mixed ambient dimension");
    }
}

void check_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) throw DomainError("ideals live in rings of different dimension");
}

} // namespace

MonomialIdeal::MonomialIdeal(int d, std::vector<Monomial> gens) : d_(d) {
    if (d < 1) throw DomainError("variable count must be positive");
    check_same_dim(gens, d);
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal(int d) {
    std::vector<Monomial> gens;
    for (int j = 0; j < d; ++j) gens.push_back(Monomial::variable(d, j));
    return MonomialIdeal(d, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) {
        return std::all_of(g.exponents().begin(), g.exponents().end(), [](int e) { return e <= 1; });
    });
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "0";
    std::string out;
    for (const auto& g : gens_) {
        if (!out.empty()) out += ", ";
        out += g.to_string();
    }
    return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    if (gens.empty()) return gens;
    const int d = gens.front().dim();
    check_same_dim(gens, d);

    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // A divisor of g has strictly smaller degree unless it equals g, so only
    // lower-degree survivors need checking.
    std::vector<std::pair<long, std::size_t>> by_degree;
    by_degree.reserve(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) by_degree.emplace_back(gens[k].degree(), k);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::size_t> kept;
    std::size_t lower_end = 0;  // kept[0, lower_end) have degree < current
    long current_degree = std::numeric_limits<long>::min();
    for (const auto& [deg, k] : by_degree) {
        if (deg != current_degree) {
            lower_end = kept.size();
            current_degree = deg;
        }
        bool redundant = false;
        for (std::size_t s = 0; s < lower_end && !redundant; ++s) {
            redundant = gens[kept[s]].divides(gens[k]);
        }
        if (!redundant) kept.push_back(k);
    }

    std::sort(kept.begin(), kept.end());
    std::vector<Monomial> out;
    out.reserve(kept.size());
    for (std::size_t k : kept) out.push_back(std::move(gens[k]));
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum class Kind { Var, Number, Caret, Star, Separator, Minus } kind;
    long value = 0;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == ',' || c == '\n') {
            // runs of separators collapse; leading ones are dropped
            if (!tokens.empty() && tokens.back().kind != Token::Kind::Separator) {
                tokens.push_back({Token::Kind::Separator, 0, pos});
            }
            ++pos;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos;
            long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > std::numeric_limits<int>::max() / 4) throw ParseError("integer too large", start);
                ++pos;
            }
            tokens.push_back({Token::Kind::Number, value, start});
        } else if (c == 'x' || c == 'X') {
            tokens.push_back({Token::Kind::Var, 0, pos++});
        } else if (c == '^') {
            tokens.push_back({Token::Kind::Caret, 0, pos++});
        } else if (c == '*') {
            tokens.push_back({Token::Kind::Star, 0, pos++});
        } else if (c == '-') {
            tokens.push_back({Token::Kind::Minus, 0, pos++});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
    }
    if (!tokens.empty() && tokens.back().kind == Token::Kind::Separator) tokens.pop_back();
    return tokens;
}

class IdealParser {
public:
    IdealParser(std::string_view text, int d) : tokens_(tokenize(text)), end_pos_(text.size()), d_(d) {}

    MonomialIdeal parse() {
        if (d_ < 1) throw DomainError("variable count must be positive");
        if (tokens_.empty()) return MonomialIdeal::zero(d_);
        if (tokens_.size() == 1 && tokens_[0].kind == Token::Kind::Number &&
            (tokens_[0].value == 0 || tokens_[0].value == 1)) {
            return tokens_[0].value == 0 ? MonomialIdeal::zero(d_) : MonomialIdeal::unit(d_);
        }
        std::vector<Monomial> gens;
        gens.push_back(term());
        while (!at_end()) {
            expect(Token::Kind::Separator, "expected ',' between terms");
            gens.push_back(term());
        }
        return MonomialIdeal(d_, std::move(gens));
    }

private:
    Monomial term() {
        std::vector<int> e(static_cast<std::size_t>(d_), 0);
        factor(e);
        while (!at_end() && peek().kind == Token::Kind::Star) {
            ++next_;
            factor(e);
        }
        return Monomial(std::move(e));
    }

    void factor(std::vector<int>& e) {
        expect(Token::Kind::Var, "expected variable 'x<index>'");
        const Token index = expect(Token::Kind::Number, "expected variable index");
        if (index.value < 1 || index.value > d_) {
            throw ParseError("variable index " + std::to_string(index.value) + " out of range [1," +
                                 std::to_string(d_) + "]",
                             index.pos);
        }
        long exponent = 1;
        if (!at_end() && peek().kind == Token::Kind::Caret) {
            ++next_;
            if (!at_end() && peek().kind == Token::Kind::Minus) throw ParseError("negative exponent", peek().pos);
            const Token e_tok = expect(Token::Kind::Number, "expected exponent");
            if (e_tok.value == 0) throw ParseError("exponent must be positive", e_tok.pos);
            exponent = e_tok.value;
        }
        auto& slot = e[static_cast<std::size_t>(index.value - 1)];
        slot += static_cast<int>(exponent);
    }

    Token expect(Token::Kind kind, const char* message) {
        if (at_end()) throw ParseError(message, end_pos_);
        if (peek().kind != kind) throw ParseError(message, peek().pos);
        return tokens_[next_++];
    }

    bool at_end() const { return next_ >= tokens_.size(); }
    const Token& peek() const { return tokens_[next_]; }

    std::vector<Token> tokens_;
    std::size_t end_pos_;
    int d_;
    std::size_t next_ = 0;
};

} // namespace

MonomialIdeal parse_ideal(std::string_view text, int d) {
    return IdealParser(text, d).parse();
}

// ---------------------------------------------------------------------------
// Arithmetic

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_dim(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto& g : a.gens()) {
        for (const auto& h : b.gens()) gens.push_back(g * h);
    }
    return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int n) {
    if (n < 1) throw DomainError("power exponent must be at least 1");
    MonomialIdeal result = ideal;
    for (int k = 1; k < n; ++k) result = product(result, ideal);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_dim(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto& g : a.gens()) {
        for (const auto& h : b.gens()) gens.push_back(lcm(g, h));
    }
    return MonomialIdeal(a.dim(), std::move(gens));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
    if (m.dim() != ideal.dim()) throw DomainError("monomial and ideal dimensions differ");
    return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_dim(a, b);
    return std::all_of(a.gens().begin(), a.gens().end(), [&](const Monomial& g) { return contains(b, g); });
}

MonomialIdeal project(const MonomialIdeal& ideal, VertexSet vars) {
    if (!vars.is_subset_of(VertexSet::full(ideal.dim()))) throw DomainError("projection index out of range");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
        std::vector<int> e(g.exponents().begin(), g.exponents().end());
        for (int j : vars.elements()) e[static_cast<std::size_t>(j)] = 0;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(ideal.dim(), std::move(gens));
}

MonomialIdeal colon_variable(const MonomialIdeal& ideal, int j) {
    if (j < 0 || j >= ideal.dim()) throw DomainError("variable index out of range");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
        std::vector<int> e(g.exponents().begin(), g.exponents().end());
        auto& slot = e[static_cast<std::size_t>(j)];
        slot = std::max(0, slot - 1);
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(ideal.dim(), std::move(gens));
}

MonomialIdeal colon_maximal(const MonomialIdeal& ideal) {
    MonomialIdeal result = colon_variable(ideal, 0);
    for (int j = 1; j < ideal.dim(); ++j) result = intersect(result, colon_variable(ideal, j));
    return result;
}

namespace {

MonomialIdeal saturate_by_colon_fixpoint(const MonomialIdeal& ideal) {
    MonomialIdeal current = ideal;
    while (true) {
        MonomialIdeal next = colon_maximal(current);
        if (next == current) return current;
        current = std::move(next);
    }
}

} // namespace

// x^b is in (J : m^inf) iff x^b * x_j^N is in J for every j and large N,
// i.e. iff b lies in every projection J_{j}. Minimal generators of that
// intersection are lcm's of projected generators, so they sit inside the
// exponent box of J and can be read off its membership bitmap.
MonomialIdeal saturate_irrelevant(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) return ideal;
    const int d = ideal.dim();
    const VarDegreeBounds bounds = var_degree_bounds(ideal);
    const std::uint64_t volume = MembershipBox::volume_of(bounds);
    if (volume == 0 || volume > MembershipBox::kDefaultMaxVolume) return saturate_by_colon_fixpoint(ideal);

    const MembershipBox box(ideal);
    std::vector<std::uint8_t> saturated(volume, 0);
    std::vector<int> point(static_cast<std::size_t>(d), 0);
    std::vector<Monomial> gens;
    for (std::uint64_t index = 0; index < volume; ++index) {
        bool in_all = true;
        for (int j = 0; j < d && in_all; ++j) in_all = box.contains(point, VertexSet::of({j}));
        saturated[index] = in_all ? 1 : 0;
        if (in_all) {
            bool minimal = true;
            for (int j = 0; j < d && minimal; ++j) {
                if (point[static_cast<std::size_t>(j)] > 0 && saturated[index - box.stride(j)]) minimal = false;
            }
            if (minimal) gens.emplace_back(point);
        }
        for (int j = 0; j < d; ++j) {
            auto& c = point[static_cast<std::size_t>(j)];
            if (c < bounds[j]) {
                ++c;
                break;
            }
            c = 0;
        }
    }
    return MonomialIdeal(d, std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
        std::vector<int> e(g.exponents().begin(), g.exponents().end());
        for (auto& x : e) x = x > 0 ? 1 : 0;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(ideal.dim(), std::move(gens));
}

VarDegreeBounds var_degree_bounds(const MonomialIdeal& ideal) {
    VarDegreeBounds b{std::vector<int>(static_cast<std::size_t>(ideal.dim()), 0)};
    for (const auto& g : ideal.gens()) {
        for (int j = 0; j < ideal.dim(); ++j) {
            b.rho[static_cast<std::size_t>(j)] = std::max(b.rho[static_cast<std::size_t>(j)], g[j]);
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// Hilbert function

namespace {

// C(n, k) with k small; 0 for n < k or n < 0.
std::uint64_t binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (long i = 1; i <= k; ++i) r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    return static_cast<std::uint64_t>(r);
}

// Number of monomials of degree t in d variables.
std::uint64_t monomials_of_degree(int d, long t) {
    if (t < 0) return 0;
    return binomial(t + d - 1, d - 1);
}

void check_hilbert_args(const MonomialIdeal& ideal, int t) {
    if (ideal.is_unit()) throw DomainError("Hilbert function of R/I needs a proper ideal");
    if (t < 0) throw DomainError("degree must be non-negative");
}

void inclusion_exclusion(const std::vector<Monomial>& gens, std::size_t next, const Monomial& current_lcm,
                         bool odd, int d, int t, __int128& total) {
    for (std::size_t k = next; k < gens.size(); ++k) {
        Monomial m = lcm(current_lcm, gens[k]);
        const long deg = m.degree();
        if (deg > t) continue;
        const auto term = static_cast<__int128>(monomials_of_degree(d, t - deg));
        total += odd ? term : -term;
        inclusion_exclusion(gens, k + 1, m, !odd, d, t, total);
    }
}

} // namespace

std::uint64_t hilbert_function_inclusion_exclusion(const MonomialIdeal& ideal, int t) {
    check_hilbert_args(ideal, t);
    const int d = ideal.dim();
    // in_ideal = sum over nonempty subsets S of (-1)^{|S|+1} #{deg t multiples of lcm(S)}
    __int128 in_ideal = 0;
    inclusion_exclusion(ideal.gens(), 0, Monomial::one(d), true, d, t, in_ideal);
    return static_cast<std::uint64_t>(static_cast<__int128>(monomials_of_degree(d, t)) - in_ideal);
}

std::uint64_t hilbert_function_enumerate(const MonomialIdeal& ideal, int t) {
    check_hilbert_args(ideal, t);
    const int d = ideal.dim();
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    std::uint64_t count = 0;
    // Walk compositions of t into d parts.
    auto walk = [&](auto&& self, int j, int remaining) -> void {
        if (j == d - 1) {
            e[static_cast<std::size_t>(j)] = remaining;
            if (!contains(ideal, Monomial(e))) ++count;
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            e[static_cast<std::size_t>(j)] = v;
            self(self, j + 1, remaining - v);
        }
    };
    walk(walk, 0, t);
    return count;
}

std::uint64_t hilbert_function(const MonomialIdeal& ideal, int t) {
    check_hilbert_args(ideal, t);
    if (monomials_of_degree(ideal.dim(), t) < 1'000'000) return hilbert_function_enumerate(ideal, t);
    return hilbert_function_inclusion_exclusion(ideal, t);
}

// ---------------------------------------------------------------------------

int krull_dimension(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw DomainError("dimension of R/I needs a proper ideal");
    const int d = ideal.dim();
    if (d > kMaxSubsetVars) throw DomainError("too many variables for subset enumeration");
    std::vector<std::uint32_t> supports;
    for (const auto& g : ideal.gens()) supports.push_back(g.support().bits());
    int best = 0;
    const std::uint32_t limit = 1u << d;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        const bool face = std::none_of(supports.begin(), supports.end(),
                                       [mask](std::uint32_t s) { return (s & ~mask) == 0; });
        if (face) best = size;
    }
    return best;
}

} // namespace lochom
