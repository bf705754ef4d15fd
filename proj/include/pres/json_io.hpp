#pragma once

#include <string>

#include "json.hpp"
#include "pres/cover.hpp"
#include "pres/du.hpp"
#include "pres/fixtures.hpp"
#include "pres/greedy.hpp"
#include "pres/pres_solver.hpp"

namespace pres {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const AdmissibleSubtable& a);
AdmissibleSubtable subtable_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PresResult& r);
nlohmann::json to_json(const GreedyTrace& t);
nlohmann::json to_json(const CoverReport& r);
nlohmann::json to_json(const CoverBound& b, int q, int v);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const DuSearchResult& r);
nlohmann::json to_json(const ProductBoundReport& r);
nlohmann::json to_json(const ReproReport& r);

/// {"vars": {name: value, ...}}
Assignment assignment_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Assignment& a);
Assignment load_assignment(const std::string& path);

/// M_f as CSV: header row of column elements, then one line per row element.
std::string subtraction_table_csv(const SubtractionTable& t);

}  // namespace pres
