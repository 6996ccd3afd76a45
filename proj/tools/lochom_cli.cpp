// lochom: local cohomology of powers of monomial ideals from the command line.
//
// Exit status: 0 success, 2 usage or parse error, 3 pattern cap exceeded,
// 4 internal-consistency violation.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lochom/asymptotics.hpp"
#include "lochom/errors.hpp"
#include "lochom/monomial.hpp"
#include "lochom/serialize.hpp"
#include "lochom/simplicial.hpp"
#include "lochom/takayama.hpp"

namespace {

using namespace lochom;

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    std::string ideal_text;
    std::string ideal_file;
    int d = 0;
    std::string i = "all";
    std::string powers = "1..1";
    bool saturated = false;
    int characteristic = 0;
    OutputFormat format = OutputFormat::Text;
    std::uint64_t pattern_cap = TableOptions{}.pattern_cap;
};

struct ResolvedConfig {
    MonomialIdeal ideal;
    std::string source;
    std::vector<int> degrees;  // empty means `all`
    int n_first = 1;
    int n_last = 1;
    Field field;
    SequenceOptions options;
};

int infer_dimension(const std::string& text) {
    static const std::regex var(R"([xX]\s*(\d+))");
    int d = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it) {
        d = std::max(d, std::stoi((*it)[1].str()));
    }
    return d;
}

std::pair<int, int> parse_powers(const std::string& text) {
    static const std::regex range(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, range)) throw ParseError("powers must look like a..b, got '" + text + "'", 0);
    const int a = std::stoi(m[1].str());
    const int b = m[2].matched ? std::stoi(m[2].str()) : a;
    if (a < 1 || b < a) throw DomainError("power range " + text + " is empty or starts below 1");
    return {a, b};
}

ResolvedConfig resolve(const RunConfig& cfg) {
    ResolvedConfig r;
    if (!cfg.ideal_file.empty()) {
        std::ifstream in(cfg.ideal_file);
        if (!in) throw DomainError("cannot read ideal file '" + cfg.ideal_file + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        r.source = buffer.str();
    } else {
        r.source = cfg.ideal_text;
    }
    const int d = cfg.d > 0 ? cfg.d : infer_dimension(r.source);
    if (d < 1) throw DomainError("cannot infer the variable count; pass --d");
    r.ideal = parse_ideal(r.source, d);
    r.field = Field::of(cfg.characteristic);
    if (cfg.i != "all") {
        std::size_t used = 0;
        int i = -1;
        try {
            i = std::stoi(cfg.i, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != cfg.i.size()) throw ParseError("--i takes an integer or 'all', got '" + cfg.i + "'", 0);
        if (i < 0 || i > d) throw DomainError("--i " + cfg.i + " outside [0," + std::to_string(d) + "]");
        r.degrees = {i};
    }
    std::tie(r.n_first, r.n_last) = parse_powers(cfg.powers);
    r.options.n_min = r.n_first;
    r.options.saturated = cfg.saturated;
    r.options.table.pattern_cap = cfg.pattern_cap;
    return r;
}

std::vector<int> degrees_or(const ResolvedConfig& r, int lo, int hi) {
    if (!r.degrees.empty()) return r.degrees;
    std::vector<int> all;
    for (int i = lo; i <= hi; ++i) all.push_back(i);
    return all;
}

// ---------------------------------------------------------------------------

int cmd_delta(const RunConfig& cfg) {
    const auto r = resolve(cfg);
    const SimplicialComplex delta = stanley_reisner_complex(radical(r.ideal));
    if (cfg.format == OutputFormat::Json) {
        std::cout << complex_to_json(delta).dump() << '\n';
    } else {
        std::cout << delta.to_text();
    }
    return 0;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

int cmd_cohomology(const RunConfig& cfg) {
    const auto r = resolve(cfg);
    const auto degrees = degrees_or(r, 0, r.ideal.dim());
    nlohmann::json tables_json = nlohmann::json::array();
    if (cfg.format == OutputFormat::Csv) std::cout << "n,i,char,finite_length,G,a_plus,dim\n";

    for (int n = r.n_first; n <= r.n_last; ++n) {
        const MonomialIdeal target = power_for_row(r.ideal, n, cfg.saturated);
        std::vector<CohomologyTable> tables;
        try {
            tables = cohomology_tables(target, r.field, r.options.table);
        } catch (const ResourceCapError& e) {
            throw ResourceCapError("n=" + std::to_string(n) + " i=" + cfg.i + ": " + e.what(), e.patterns(), e.cap());
        }
        for (int i : degrees) {
            const auto& t = tables[static_cast<std::size_t>(i)];
            switch (cfg.format) {
            case OutputFormat::Json:
                tables_json.push_back({{"n", n}, {"table", table_to_json(t)}});
                break;
            case OutputFormat::Csv:
                for (const auto& [p, dim] : t.entries) {
                    std::cout << n << ',' << i << ',' << t.field.characteristic() << ','
                              << (t.finite_length ? "true" : "false") << ',' << csv_quote(p.negative.to_string())
                              << ',' << csv_quote(format_degree_vector(p.a_plus)) << ',' << dim << '\n';
                }
                break;
            case OutputFormat::Text:
                std::cout << "# n=" << n << " i=" << i << " char=" << t.field.characteristic()
                          << " finite_length=" << (t.finite_length ? "true" : "false")
                          << " entries=" << t.entries.size() << '\n';
                for (const auto& [p, dim] : t.entries) {
                    std::cout << "G=" << p.negative.to_string() << " a+=" << format_degree_vector(p.a_plus)
                              << " dim=" << dim << '\n';
                }
                break;
            }
        }
    }
    if (cfg.format == OutputFormat::Json) {
        const nlohmann::json out = {{"ideal", r.ideal.to_string()},
                                    {"d", r.ideal.dim()},
                                    {"saturated", cfg.saturated},
                                    {"tables", tables_json}};
        std::cout << out.dump() << '\n';
    }
    return 0;
}

// Streams rows as CSV for text/csv output; JSON output is buffered.
SequenceOptions streaming(const ResolvedConfig& r, const RunConfig& cfg, int i) {
    SequenceOptions opts = r.options;
    if (cfg.format != OutputFormat::Json) {
        opts.on_row = [i, field = r.field, sat = cfg.saturated](const PowerRow& row) {
            std::cout << row_to_csv(row, i, field, sat) << '\n' << std::flush;
        };
    }
    return opts;
}

int cmd_indeg(const RunConfig& cfg) {
    const auto r = resolve(cfg);
    if (cfg.format != OutputFormat::Json) std::cout << kRowCsvHeader << '\n';
    nlohmann::json reports = nlohmann::json::array();
    for (int i : degrees_or(r, 0, r.ideal.dim())) {
        const auto report = power_sequence(r.ideal, i, r.n_last, r.field, streaming(r, cfg, i));
        if (cfg.format == OutputFormat::Json) reports.push_back(report_to_json(report));
    }
    if (cfg.format == OutputFormat::Json) std::cout << reports.dump() << '\n';
    return 0;
}

int cmd_dichotomy(const RunConfig& cfg) {
    const auto r = resolve(cfg);
    if (cfg.format != OutputFormat::Json) std::cout << kRowCsvHeader << '\n';
    nlohmann::json out = nlohmann::json::array();
    const int dim = krull_dimension(r.ideal);
    for (int i : degrees_or(r, 1, dim)) {
        const auto rep = dichotomy_report(r.ideal, i, r.n_last, r.field, streaming(r, cfg, i));
        const auto& v = rep.verdict;
        bool all_finite = !rep.sequence.rows.empty();
        for (const auto& row : rep.sequence.rows) all_finite = all_finite && row.indeg.is_finite();
        if (cfg.format == OutputFormat::Json) {
            nlohmann::json entry = {{"sequence", report_to_json(rep.sequence)}, {"verdict", verdict_to_json(v)}};
            if (all_finite) {
                const auto s = ratio_summary(rep.sequence);
                entry["ratio_estimates"] = {{"min", s.liminf_estimate.to_string()},
                                            {"last", s.last_ratio.to_string()}};
            }
            out.push_back(entry);
            continue;
        }
        std::cout << "# i=" << i << " verdict=" << to_string(v.dichotomy_case) << " h_tilde_dim=" << v.h_tilde_dim
                  << " per_n_consistent=" << (v.per_n_consistent ? "true" : "false")
                  << " remark44_applies=" << (v.remark44_applies ? "true" : "false") << '\n';
        for (const auto& viol : v.violations) {
            std::cout << "# violation n=" << viol.n << " observed=" << viol.observed.to_string()
                      << " expected: " << viol.expected << '\n';
        }
        for (const auto& w : v.warnings) std::cout << "# warning: " << w << '\n';
        if (all_finite) {
            const auto s = ratio_summary(rep.sequence);
            std::cout << "# ratio estimates (finite sample, not a limit): min indeg/n=" << s.liminf_estimate.to_string()
                      << " last indeg/n=" << s.last_ratio.to_string() << '\n';
        }
    }
    if (cfg.format == OutputFormat::Json) std::cout << out.dump() << '\n';
    return 0;
}

int cmd_reg(const RunConfig& cfg) {
    const auto r = resolve(cfg);
    if (cfg.format != OutputFormat::Json) std::cout << "n,char,saturated,reg\n";
    SequenceOptions opts = r.options;
    if (cfg.format != OutputFormat::Json) {
        opts.on_row = [&](const PowerRow& row) {
            std::cout << row.n << ',' << r.field.characteristic() << ',' << (cfg.saturated ? "true" : "false") << ','
                      << row.reg << '\n'
                      << std::flush;
        };
    }
    const auto report = power_sequence(r.ideal, 0, r.n_last, r.field, opts);
    RegularityFit fit;
    for (const auto& row : report.rows) fit.regularities.push_back(row.reg);
    fit.fit = fit_terminal_line(fit.regularities, r.n_first);
    if (cfg.format == OutputFormat::Json) {
        auto j = fit_to_json(fit);
        j["n_first"] = r.n_first;
        std::cout << j.dump() << '\n';
    } else if (fit.fit) {
        std::cout << "# fit: slope=" << fit.fit->slope << " intercept=" << fit.fit->intercept
                  << " stable_from=" << fit.fit->stable_from << '\n';
        if (fit.fit->warning) std::cout << "# warning: " << *fit.fit->warning << '\n';
    } else {
        std::cout << "# fit: none (no terminal run of 3 equal differences)\n";
    }
    return 0;
}

void add_common_flags(CLI::App* sub, RunConfig& cfg) {
    auto* ideal = sub->add_option("--ideal", cfg.ideal_text, "Ideal generators, e.g. \"x1*x3, x2^2\"");
    auto* file = sub->add_option("--ideal-file", cfg.ideal_file, "File holding the ideal generators");
    ideal->excludes(file);
    file->excludes(ideal);
    sub->add_option("--d", cfg.d, "Number of variables (default: largest index used)")->check(CLI::Range(1, kMaxSubsetVars));
    sub->add_option("--i", cfg.i, "Cohomological degree, or 'all'");
    sub->add_option("--powers", cfg.powers, "Range of powers a..b");
    sub->add_flag("--saturated", cfg.saturated, "Use the saturation (I^n : m^inf)");
    sub->add_option("--char", cfg.characteristic, "Field characteristic: 0 or a prime");
    sub->add_option("--format", cfg.format, "Output format: text, json, csv")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{
                {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}},
            CLI::ignore_case));
    sub->add_option("--pattern-cap", cfg.pattern_cap, "Maximum degree patterns per table")->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local cohomology of powers of monomial ideals via degree complexes"};
    app.require_subcommand(1);
    RunConfig cfg;

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const RunConfig&);
    };
    const Command commands[] = {
        {"delta", "Print the complex of sqrt(I)", cmd_delta},
        {"cohomology", "Z^d-graded tables of H^i_m(R/I^n)", cmd_cohomology},
        {"indeg", "indeg/topdeg/reg of H^i_m(R/I^n) over a range of powers", cmd_indeg},
        {"dichotomy", "Check the homology dichotomy for initial degrees across powers", cmd_dichotomy},
        {"reg", "reg(R/I^n) across powers and its eventual linear function", cmd_reg},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        add_common_flags(sub, cfg);
        subs.emplace_back(sub, &c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cfg.ideal_text.empty() && cfg.ideal_file.empty()) {
            throw DomainError("one of --ideal or --ideal-file is required");
        }
        for (const auto& [sub, cmd] : subs) {
            if (sub->parsed()) return cmd->run(cfg);
        }
    } catch (const ParseError& e) {
        std::cerr << "lochom: parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "lochom: " << e.what() << '\n';
        return 2;
    } catch (const ResourceCapError& e) {
        std::cerr << "lochom: pattern cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "lochom: internal consistency violation: " << e.what() << '\n';
        return 4;
    }
    return 2;
}
