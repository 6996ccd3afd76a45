#include "lochom/serialize.hpp"

#include <cctype>

#include "lochom/errors.hpp"

namespace lochom {

using nlohmann::json;

std::vector<int> parse_degree_vector(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    std::vector<int> out;
    expect('(');
    skip();
    if (pos < text.size() && text[pos] == ')') {
        ++pos;
    } else {
        while (true) {
            skip();
            bool negative = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
                throw ParseError("expected an integer", pos);
            }
            long v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos++] - '0');
                if (v > 1'000'000'000) throw ParseError("integer too large", pos);
            }
            out.push_back(static_cast<int>(negative ? -v : v));
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(')');
            break;
        }
    }
    skip();
    if (pos != text.size()) throw ParseError("trailing input after degree vector", pos);
    return out;
}

std::string format_degree_vector(const std::vector<int>& degree) {
    std::string s = "(";
    for (std::size_t j = 0; j < degree.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(degree[j]);
    }
    return s + ")";
}

json table_to_json(const CohomologyTable& table) {
    json entries = json::array();
    for (const auto& [pattern, dim] : table.entries) {
        json g = json::array();
        for (int v : pattern.negative.elements()) g.push_back(v + 1);
        entries.push_back({{"G", g}, {"a_plus", pattern.a_plus}, {"dim", dim}});
    }
    return {{"i", table.i},
            {"char", table.field.characteristic()},
            {"finite_length", table.finite_length},
            {"entries", entries}};
}

CohomologyTable table_from_json(const json& j, const VarDegreeBounds& rho) {
    try {
        CohomologyTable t;
        t.i = j.at("i").get<int>();
        t.field = Field::of(j.at("char").get<int>());
        t.finite_length = j.at("finite_length").get<bool>();
        t.rho = rho;
        for (const auto& e : j.at("entries")) {
            DegreePattern p;
            p.a_plus = e.at("a_plus").get<std::vector<int>>();
            for (int v : e.at("G").get<std::vector<int>>()) {
                if (v < 1 || v > static_cast<int>(p.a_plus.size())) throw DomainError("G index out of range");
                p.negative.insert(v - 1);
            }
            p.clamped = true;
            const auto dim = e.at("dim").get<std::size_t>();
            if (dim == 0) throw DomainError("table entries must have positive dimension");
            t.entries.emplace(std::move(p), dim);
        }
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed cohomology table JSON: ") + e.what(), 0);
    }
}

json complex_to_json(const SimplicialComplex& complex) {
    const char* kind = "ordinary";
    switch (complex.kind()) {
    case SimplicialComplex::Kind::Void: kind = "void"; break;
    case SimplicialComplex::Kind::Irrelevant: kind = "irrelevant"; break;
    case SimplicialComplex::Kind::Ordinary: break;
    }
    json facets = json::array();
    for (VertexSet f : complex.facets()) {
        json face = json::array();
        for (int v : f.elements()) face.push_back(v + 1);
        facets.push_back(face);
    }
    return {{"d", complex.vertex_count()}, {"kind", kind}, {"facets", facets}};
}

std::string row_to_csv(const PowerRow& row, int i, Field field, bool saturated) {
    return std::to_string(row.n) + ',' + std::to_string(i) + ',' + std::to_string(field.characteristic()) + ',' +
           (saturated ? "true" : "false") + ',' + (row.finite_length ? "true" : "false") + ',' +
           row.indeg.to_string() + ',' + row.topdeg.to_string() + ',' + std::to_string(row.reg);
}

json report_to_json(const PowerSequenceReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"indeg", r.indeg.to_string()},
                        {"topdeg", r.topdeg.to_string()},
                        {"finite_length", r.finite_length},
                        {"reg", r.reg}});
    }
    return {{"ideal", report.ideal.to_string()},
            {"d", report.ideal.dim()},
            {"i", report.i},
            {"char", report.field.characteristic()},
            {"saturated", report.saturated},
            {"rows", rows},
            {"n_max", report.n_max}};
}

json verdict_to_json(const DichotomyVerdict& verdict) {
    json violations = json::array();
    for (const auto& v : verdict.violations) {
        violations.push_back({{"n", v.n}, {"observed", v.observed.to_string()}, {"expected", v.expected}});
    }
    return {{"h_tilde_dim", verdict.h_tilde_dim},
            {"case", to_string(verdict.dichotomy_case)},
            {"per_n_consistent", verdict.per_n_consistent},
            {"violations", violations},
            {"remark44_applies", verdict.remark44_applies},
            {"warnings", verdict.warnings}};
}

json fit_to_json(const RegularityFit& fit) {
    json out = {{"reg", fit.regularities}};
    if (fit.fit) {
        json f = {{"slope", fit.fit->slope}, {"intercept", fit.fit->intercept}, {"stable_from", fit.fit->stable_from}};
        if (fit.fit->warning) f["warning"] = *fit.fit->warning;
        out["fit"] = f;
    } else {
        out["fit"] = nullptr;
    }
    return out;
}

} // namespace lochom
