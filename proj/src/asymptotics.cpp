#include "lochom/asymptotics.hpp"

#include <numeric>

#include "lochom/errors.hpp"

namespace lochom {

MonomialIdeal power_for_row(const MonomialIdeal& ideal, int n, bool saturated) {
    MonomialIdeal p = power(ideal, n);
    return saturated ? saturate_irrelevant(p) : p;
}

namespace {

void check_sequence_args(const MonomialIdeal& ideal, int n_max, const SequenceOptions& options) {
    if (ideal.is_unit()) throw DomainError("R/I is the zero ring for the unit ideal");
    if (options.n_min < 1 || n_max < options.n_min) {
        throw DomainError("power range " + std::to_string(options.n_min) + ".." + std::to_string(n_max) +
                          " is empty or starts below 1");
    }
}

std::vector<CohomologyTable> tables_for_power(const MonomialIdeal& ideal, int n, int i, Field field,
                                              const SequenceOptions& options) {
    const MonomialIdeal target = power_for_row(ideal, n, options.saturated);
    try {
        return cohomology_tables(target, field, options.table);
    } catch (const ResourceCapError& e) {
        throw ResourceCapError("n=" + std::to_string(n) + " i=" + std::to_string(i) + ": " + e.what(), e.patterns(),
                               e.cap());
    }
}

} // namespace

PowerSequenceReport power_sequence(const MonomialIdeal& ideal, int i, int n_max, Field field,
                                   const SequenceOptions& options) {
    check_sequence_args(ideal, n_max, options);
    if (i < 0 || i > ideal.dim()) throw DomainError("cohomological degree outside [0,d]");

    PowerSequenceReport report;
    report.ideal = ideal;
    report.i = i;
    report.field = field;
    report.saturated = options.saturated;
    report.n_min = options.n_min;
    report.n_max = n_max;
    for (int n = options.n_min; n <= n_max; ++n) {
        const auto tables = tables_for_power(ideal, n, i, field, options);
        const auto& table = tables[static_cast<std::size_t>(i)];
        PowerRow row;
        row.n = n;
        row.indeg = indeg(table);
        row.topdeg = topdeg(table);
        row.finite_length = table.finite_length;
        row.reg = regularity(tables);
        report.rows.push_back(row);
        if (options.on_row) options.on_row(row);
    }
    return report;
}

std::string to_string(DichotomyCase c) {
    return c == DichotomyCase::NonvanishingHomology ? "CASE1" : "CASE2";
}

DichotomyReport dichotomy_report(const MonomialIdeal& ideal, int i, int n_max, Field field,
                                 const SequenceOptions& options) {
    check_sequence_args(ideal, n_max, options);
    if (ideal.is_zero()) throw DomainError("the zero ideal has no powers to compare");
    const int dim = krull_dimension(ideal);
    if (i < 1 || i > dim) {
        throw DomainError("dichotomy needs 1 <= i <= dim R/I = " + std::to_string(dim) + ", got " + std::to_string(i));
    }

    DichotomyReport out;
    DichotomyVerdict& v = out.verdict;
    v.h_tilde_dim = reduced_homology_dims(stanley_reisner_complex(ideal), field).dim(i - 1);
    v.dichotomy_case = v.h_tilde_dim > 0 ? DichotomyCase::NonvanishingHomology : DichotomyCase::VanishingHomology;

    out.sequence = power_sequence(ideal, i, n_max, field, options);

    bool any_finite = false;
    for (const auto& row : out.sequence.rows) {
        if (!row.finite_length) continue;
        any_finite = true;
        if (v.dichotomy_case == DichotomyCase::NonvanishingHomology) {
            if (!(row.indeg == ExtendedDegree::finite(0))) v.violations.push_back({row.n, row.indeg, "indeg = 0"});
        } else {
            if (!row.indeg.is_finite() || row.indeg.value() < row.n) {
                // +inf (zero module) also satisfies indeg >= n
                if (row.indeg.kind() != ExtendedDegree::Kind::PlusInfinity) {
                    v.violations.push_back({row.n, row.indeg, "indeg >= " + std::to_string(row.n)});
                }
            }
        }
    }

    if (any_finite) {
        const auto radical_table = cohomology_table(radical(ideal), i, field, options.table);
        v.remark44_applies = !radical_table.empty();
        if (v.remark44_applies && v.dichotomy_case == DichotomyCase::VanishingHomology) {
            v.violations.push_back({0, ExtendedDegree::finite(0),
                                    "H^i_m(R/sqrt(I)) != 0 with a finite-length power forces CASE1"});
        }
    } else {
        v.warnings.push_back("no computed power had finite length; the per-n checks are vacuous");
    }
    v.per_n_consistent = v.violations.empty();
    return out;
}

std::optional<LinearFit> fit_terminal_line(const std::vector<long>& regularities, int first_n) {
    const std::size_t count = regularities.size();
    if (count < 4) return std::nullopt;
    const long last_diff = regularities[count - 1] - regularities[count - 2];
    std::size_t run = 1;  // trailing equal first differences
    while (run + 1 < count &&
           regularities[count - 1 - run] - regularities[count - 2 - run] == last_diff) {
        ++run;
    }
    if (run < 3) return std::nullopt;
    LinearFit fit;
    fit.slope = last_diff;
    const long n_last = first_n + static_cast<long>(count) - 1;
    fit.intercept = regularities[count - 1] - last_diff * n_last;
    fit.stable_from = first_n + static_cast<int>(count - 1 - run);
    if (fit.slope < 0) fit.warning = "negative slope " + std::to_string(fit.slope) + " for a monomial ideal";
    return fit;
}

RegularityFit regularity_linear_fit(const MonomialIdeal& ideal, int n_max, Field field,
                                    const SequenceOptions& options) {
    if (n_max < 4) throw DomainError("a regularity fit needs n_max >= 4");
    SequenceOptions opts = options;
    opts.n_min = 1;
    check_sequence_args(ideal, n_max, opts);
    RegularityFit out;
    for (int n = 1; n <= n_max; ++n) {
        const auto tables = tables_for_power(ideal, n, 0, field, opts);
        out.regularities.push_back(regularity(tables));
    }
    out.fit = fit_terminal_line(out.regularities);
    return out;
}

Rational Rational::of(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

RatioSummary ratio_summary(const PowerSequenceReport& report) {
    if (report.rows.empty()) throw DomainError("ratio summary of an empty report");
    RatioSummary s;
    bool first = true;
    for (const auto& row : report.rows) {
        if (!row.indeg.is_finite()) {
            throw DomainError("ratio summary needs finite indeg at every n; n=" + std::to_string(row.n) + " has " +
                              row.indeg.to_string());
        }
        const Rational r = Rational::of(row.indeg.value(), row.n);
        if (first || r < s.liminf_estimate) s.liminf_estimate = r;
        first = false;
        s.last_ratio = r;
    }
    return s;
}

} // namespace lochom
