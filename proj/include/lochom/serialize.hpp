#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lochom/asymptotics.hpp"
#include "lochom/simplicial.hpp"
#include "lochom/takayama.hpp"

namespace lochom {

/// `(-1,0,2)` -> {-1, 0, 2}
std::vector<int> parse_degree_vector(std::string_view text);
std::string format_degree_vector(const std::vector<int>& degree);

/// {"i", "char", "finite_length", "entries": [{"G", "a_plus", "dim"}]}
/// G holds 1-based variable indices.
nlohmann::json table_to_json(const CohomologyTable& table);
/// Inverse of table_to_json. `rho` is not part of the wire format and is
/// left empty unless given.
CohomologyTable table_from_json(const nlohmann::json& j, const VarDegreeBounds& rho = {});

nlohmann::json complex_to_json(const SimplicialComplex& complex);

/// `n,i,char,saturated,finite_length,indeg,topdeg,reg`
inline constexpr std::string_view kRowCsvHeader = "n,i,char,saturated,finite_length,indeg,topdeg,reg";
std::string row_to_csv(const PowerRow& row, int i, Field field, bool saturated);

nlohmann::json report_to_json(const PowerSequenceReport& report);
nlohmann::json verdict_to_json(const DichotomyVerdict& verdict);
nlohmann::json fit_to_json(const RegularityFit& fit);

} // namespace lochom
