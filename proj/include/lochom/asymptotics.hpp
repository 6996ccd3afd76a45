#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lochom/monomial.hpp"
#include "lochom/simplicial.hpp"
#include "lochom/takayama.hpp"

namespace lochom {

/// Invariants of H^i_m(R/J_n) for one power, J_n = I^n or its saturation.
struct PowerRow {
    int n = 0;
    ExtendedDegree indeg = ExtendedDegree::plus_infinity();
    ExtendedDegree topdeg = ExtendedDegree::minus_infinity();
    bool finite_length = true;
    /// reg(R/J_n)
    long reg = 0;

    friend bool operator==(const PowerRow&, const PowerRow&) = default;
};

struct PowerSequenceReport {
    MonomialIdeal ideal;
    int i = 0;
    Field field;
    bool saturated = false;
    std::vector<PowerRow> rows;
    int n_min = 1;
    int n_max = 0;
};

struct SequenceOptions {
    int n_min = 1;
    bool saturated = false;
    TableOptions table;
    /// Called with each row as soon as it is computed, in increasing n.
    std::function<void(const PowerRow&)> on_row;
};

/// The ideal a row of the sequence is computed on.
MonomialIdeal power_for_row(const MonomialIdeal& ideal, int n, bool saturated);

/// Rows n = options.n_min .. n_max. A pattern-cap overflow is rethrown as a
/// ResourceCapError naming the n at which it tripped.
PowerSequenceReport power_sequence(const MonomialIdeal& ideal, int i, int n_max, Field field,
                                   const SequenceOptions& options = {});

enum class DichotomyCase {
    /// H̃_{i-1}(Δ(I)) != 0: indeg H^i_m(R/I^n) = 0 whenever finite length.
    NonvanishingHomology,
    /// H̃_{i-1}(Δ(I)) = 0: indeg H^i_m(R/I^n) >= n whenever finite length.
    VanishingHomology,
};

std::string to_string(DichotomyCase c);

struct DichotomyViolation {
    int n = 0;
    ExtendedDegree observed = ExtendedDegree::plus_infinity();
    std::string expected;
};

struct DichotomyVerdict {
    std::size_t h_tilde_dim = 0;
    DichotomyCase dichotomy_case = DichotomyCase::VanishingHomology;
    bool per_n_consistent = true;
    std::vector<DichotomyViolation> violations;
    /// Some computed n has finite length and H^i_m(R/sqrt(I)) != 0, which
    /// forces the nonvanishing case.
    bool remark44_applies = false;
    std::vector<std::string> warnings;
};

struct DichotomyReport {
    DichotomyVerdict verdict;
    PowerSequenceReport sequence;
};

/// Per-n check of the dichotomy for 1 <= i <= dim R/I over the computed range.
DichotomyReport dichotomy_report(const MonomialIdeal& ideal, int i, int n_max, Field field,
                                 const SequenceOptions& options = {});

struct LinearFit {
    long slope = 0;
    long intercept = 0;
    int stable_from = 1;
    /// Set when the fitted slope is negative, which cannot happen for monomial ideals.
    std::optional<std::string> warning;
};

struct RegularityFit {
    /// reg(R/I^n) for n = 1..n_max.
    std::vector<long> regularities;
    std::optional<LinearFit> fit;
};

/// reg(R/I^n) for n = 1..n_max and the line through the longest terminal run
/// of at least three equal first differences, if any.
RegularityFit regularity_linear_fit(const MonomialIdeal& ideal, int n_max, Field field,
                                    const SequenceOptions& options = {});
/// The fitting step alone, on reg values for n = first_n, first_n + 1, ...
std::optional<LinearFit> fit_terminal_line(const std::vector<long>& regularities, int first_n = 1);

struct Rational {
    long num = 0;
    long den = 1;

    static Rational of(long num, long den);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
};

/// Finite-sample estimates only: min_n indeg(n)/n and the ratio at the last
/// computed n. They do not certify a liminf or a limit.
struct RatioSummary {
    Rational liminf_estimate;
    Rational last_ratio;
};

RatioSummary ratio_summary(const PowerSequenceReport& report);

} // namespace lochom
