#include "pres/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pres {

using nlohmann::json;

json to_json(const AdmissibleSubtable& a) {
    json cells = json::array();
    for (auto [r, c] : a.cells) cells.push_back({r, c});
    return json{{"cells", cells}};
}

AdmissibleSubtable subtable_from_json(const json& j) {
    AdmissibleSubtable a;
    for (const auto& cell : j.at("cells")) a.cells.push_back({cell.at(0).get<int>(), cell.at(1).get<int>()});
    std::sort(a.cells.begin(), a.cells.end());
    return a;
}

json to_json(const PresResult& r) {
    json j{{"schema_version", kSchemaVersion},
           {"found", r.found},
           {"stats",
            {{"subsets_tested", r.stats.subsets_tested},
             {"matchings_run", r.stats.matchings_run},
             {"elapsed_seconds", r.stats.elapsed_seconds}}}};
    if (r.found) {
        j["pres"] = r.value;
        j["witness_S"] = r.witness_S;
        j["witness_A"] = to_json(r.witness_A);
        j["witness_g"] = json{{"images", r.witness_g}};
    } else {
        j["lower_bound"] = r.value;
    }
    return j;
}

json to_json(const GreedyTrace& t) {
    json steps = json::array();
    for (const GreedyStep& s : t.steps) {
        json cells = json::array();
        for (auto [r, c] : s.cells) cells.push_back({r, c});
        steps.push_back({{"mu", s.mu}, {"v", s.v}, {"cells", cells}, {"n", s.n}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"n0", t.n0},
                {"steps", steps},
                {"S", t.final_S},
                {"A", to_json(t.final_A)},
                {"upper_bound", (int)t.final_S.size()}};
}

json to_json(const CoverReport& r) {
    return json{{"schema_version", kSchemaVersion},
                {"S", r.s},
                {"is_cover", r.is_cover},
                {"uncovered_rows", r.uncovered_rows},
                {"rows_hit", r.rows_hit}};
}

json to_json(const CoverBound& b, int q, int v) {
    json values = json::array();
    for (size_t i = 0; i < b.values.size(); ++i) {
        std::ostringstream exact;
        exact << b.values[i];
        values.push_back(
            {{"k", (int)i + 1}, {"exact", exact.str()}, {"decimal", b.values[i].convert_to<double>()}});
    }
    return json{{"schema_version", kSchemaVersion}, {"q", q}, {"v", v}, {"min_k", b.min_k}, {"values", values}};
}

json to_json(const VerifyReport& r) {
    json violations = json::array();
    for (const Violation& v : r.violations)
        violations.push_back(
            {{"constraint", v.constraint}, {"lhs", v.lhs}, {"relation", rel_string(v.rel)}, {"rhs", v.rhs}});
    return json{{"schema_version", kSchemaVersion},
                {"feasible", r.violations.empty()},
                {"consistent", r.inconsistencies.empty()},
                {"violations", violations},
                {"inconsistencies", r.inconsistencies},
                {"objective", r.objective}};
}

json to_json(const DuSearchResult& r) {
    return json{{"schema_version", kSchemaVersion},
                {"best_du", r.best_du},
                {"witness", r.witness},
                {"nodes", r.nodes},
                {"complete", r.complete}};
}

json to_json(const ProductBoundReport& r) {
    return json{{"schema_version", kSchemaVersion},
                {"delta_f", r.delta_f},
                {"delta_gf", r.delta_gf},
                {"Vg", r.vg},
                {"rhs", r.rhs},
                {"holds", r.holds}};
}

json to_json(const ReproReport& r) {
    // no timings here: identical invocations must print identical bytes
    json rows = json::array();
    for (const ReproRow& row : r.rows) {
        json jr{{"q", row.q}, {"d", row.d}, {"expected", row.expected}, {"status", row.status}};
        if (row.status != "skip") jr["computed"] = row.computed;
        rows.push_back(jr);
    }
    return json{{"schema_version", kSchemaVersion},
                {"table", r.table},
                {"rows", rows},
                {"matches", r.matches},
                {"mismatches", r.mismatches},
                {"skips", r.skips}};
}

Assignment assignment_from_json(const json& j) {
    Assignment a;
    for (const auto& [name, value] : j.at("vars").items()) a[name] = value.get<long long>();
    return a;
}

json to_json(const Assignment& a) {
    json vars = json::object();
    for (const auto& [name, value] : a) vars[name] = value;
    return json{{"vars", vars}};
}

Assignment load_assignment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open assignment file: " + path);
    json j;
    in >> j;
    return assignment_from_json(j);
}

std::string subtraction_table_csv(const SubtractionTable& t) {
    std::ostringstream os;
    os << "r\\c";
    for (int c : t.col_order) os << "," << c;
    os << "\n";
    for (size_t i = 0; i < t.row_order.size(); ++i) {
        os << t.row_order[i];
        for (size_t j = 0; j < t.col_order.size(); ++j) os << "," << t.entries[i][j];
        os << "\n";
    }
    return os.str();
}

}  // namespace pres
