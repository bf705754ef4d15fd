#include "pres/fixtures.hpp"

#include <chrono>
#include <stdexcept>

namespace pres {

namespace {

// pres(x^2) over prime fields, p <= 337
const std::vector<FixtureRow> kT3 = {
    {3, 2, 2},   {5, 2, 3},   {7, 2, 3},   {11, 2, 3},  {13, 2, 4},  {17, 2, 4},  {19, 2, 4},
    {23, 2, 4},  {29, 2, 4},  {31, 2, 4},  {37, 2, 4},  {41, 2, 5},  {43, 2, 4},  {47, 2, 4},
    {53, 2, 5},  {59, 2, 5},  {61, 2, 5},  {67, 2, 5},  {71, 2, 5},  {73, 2, 5},  {79, 2, 5},
    {83, 2, 5},  {89, 2, 5},  {97, 2, 5},  {101, 2, 5}, {103, 2, 4}, {107, 2, 5}, {109, 2, 5},
    {113, 2, 5}, {127, 2, 5}, {131, 2, 5}, {137, 2, 5}, {139, 2, 5}, {149, 2, 5}, {151, 2, 5},
    {157, 2, 5}, {163, 2, 5}, {167, 2, 5}, {173, 2, 5}, {179, 2, 5}, {181, 2, 5}, {191, 2, 5},
    {193, 2, 5}, {197, 2, 5}, {199, 2, 5}, {211, 2, 5}, {223, 2, 5}, {227, 2, 5}, {229, 2, 5},
    {233, 2, 5}, {239, 2, 5}, {241, 2, 5}, {251, 2, 5}, {257, 2, 6}, {263, 2, 5}, {269, 2, 5},
    {271, 2, 5}, {277, 2, 6}, {281, 2, 6}, {293, 2, 5}, {307, 2, 5}, {311, 2, 5}, {313, 2, 6},
    {317, 2, 5}, {331, 2, 6}, {337, 2, 6}};

// pres(x^2) over proper prime powers, q <= 343
const std::vector<FixtureRow> kT4 = {{9, 2, 3},   {25, 2, 4},  {27, 2, 4},  {49, 2, 5},
                                     {81, 2, 5},  {121, 2, 5}, {125, 2, 5}, {169, 2, 5},
                                     {243, 2, 6}, {289, 2, 6}, {343, 2, 6}};

// pres(x^d) over F_p, p = 1 mod 4, non-equivalent d | p-1
const std::vector<FixtureRow> kT8 = {
    {5, 2, 3, 2, 3},     {13, 2, 4, 2, 7},    {13, 3, 5, 3, 9},    {13, 4, 5, 4, 10},
    {13, 6, 7, 6, 11},   {17, 2, 4, 2, 9},    {17, 4, 5, 4, 13},   {17, 8, 9, 8, 15},
    {29, 2, 4, 2, 15},   {29, 4, 6, 4, 22},   {29, 7, 9, 7, 25},   {29, 14, 15, 14, 27},
    {37, 2, 4, 2, 19},   {37, 3, 6, 3, 25},   {37, 4, 7, 4, 28},   {37, 6, 7, 6, 31},
    {37, 9, 9, 9, 33},   {37, 12, 14, 12, 34},{37, 18, 19, 18, 35},{41, 2, 5, 2, 21},
    {41, 4, 6, 4, 31},   {41, 5, 7, 5, 33},   {41, 8, 11, 8, 36},  {41, 10, 12, 10, 37},
    {41, 20, 21, 20, 39},{53, 2, 5, 2, 27},   {53, 4, 7, 4, 40},   {53, 13, 15, 13, 49},
    {53, 26, 27, 26, 51},{61, 2, 5, 2, 31},   {61, 3, 6, 3, 41},   {61, 4, 6, 4, 46},
    {61, 5, 7, 5, 49},   {61, 6, 9, 6, 51},   {61, 10, 13, 10, 55},{61, 12, 15, 12, 56},
    {61, 15, 17, 15, 57},{61, 20, 23, 20, 58},{61, 30, 31, 30, 59},{73, 2, 5, 2, 37},
    {73, 3, 6, 3, 49},   {73, 4, 7, 4, 55},   {73, 6, 9, 6, 61},   {73, 8, 9, 8, 64},
    {73, 9, 11, 9, 65},  {73, 12, 15, 12, 67},{73, 18, 19, 18, 69},{73, 24, 27, 24, 70},
    {73, 36, 37, 36, 71},{89, 2, 5, 2, 45},   {89, 4, 7, 4, 67},   {89, 8, 12, 8, 78},
    {89, 11, 15, 11, 81},{89, 22, 24, 22, 85},{89, 44, 45, 44, 87},{97, 2, 5, 2, 49},
    {97, 3, 7, 3, 65},   {97, 4, 7, 4, 73},   {97, 6, 10, 6, 81},  {97, 8, 13, 8, 85},
    {97, 12, 16, 12, 89},{97, 16, 21, 16, 91},{97, 24, 25, 24, 93},{97, 32, 36, 32, 94},
    {97, 48, 49, 48, 95},{101, 2, 5, 2, 51},  {101, 4, 8, 4, 76},  {101, 5, 8, 5, 81},
    {101, 10, 15, 10, 91},{101, 20, 26, 20, 96},{101, 25, 25, 25, 97},{101, 50, 51, 50, 99}};

// pres(x^d) over F_p, p = 3 mod 4, non-equivalent d | p-1
const std::vector<FixtureRow> kT9 = {
    {3, 2, 2, 2, 2},     {7, 2, 3, 2, 4},     {7, 3, 3, 3, 5},     {11, 2, 3, 2, 6},
    {11, 5, 5, 5, 9},    {19, 2, 4, 2, 10},   {19, 3, 5, 3, 13},   {19, 6, 7, 6, 16},
    {19, 9, 9, 9, 17},   {23, 2, 4, 2, 12},   {23, 11, 11, 11, 21},{31, 2, 4, 2, 16},
    {31, 3, 5, 3, 21},   {31, 5, 7, 5, 25},   {31, 6, 8, 6, 26},   {31, 10, 12, 10, 28},
    {31, 15, 15, 15, 29},{43, 2, 4, 2, 22},   {43, 3, 6, 3, 29},   {43, 6, 9, 6, 36},
    {43, 7, 10, 7, 37},  {43, 14, 17, 14, 40},{43, 21, 21, 21, 41},{47, 2, 4, 2, 24},
    {47, 23, 23, 23, 45},{59, 2, 5, 2, 30},   {59, 29, 29, 29, 57},{67, 2, 5, 2, 34},
    {67, 3, 6, 3, 45},   {67, 6, 10, 6, 56},  {67, 11, 13, 11, 61},{67, 22, 26, 22, 64},
    {67, 33, 33, 33, 65},{71, 2, 5, 2, 36},   {71, 5, 8, 5, 57},   {71, 7, 11, 7, 61},
    {71, 10, 14, 10, 64},{71, 14, 18, 14, 66},{71, 35, 35, 35, 69},{79, 2, 5, 2, 40},
    {79, 3, 6, 3, 53},   {79, 6, 11, 6, 66},  {79, 13, 17, 13, 73},{79, 26, 29, 26, 76},
    {79, 39, 39, 39, 77},{83, 2, 5, 2, 42},   {83, 41, 41, 41, 81},{103, 2, 4, 2, 52},
    {103, 3, 6, 3, 69},  {103, 6, 11, 6, 86}, {103, 17, 22, 17, 97},{103, 34, 37, 34, 100},
    {103, 51, 51, 51, 101}};

void check_xd_rows(const std::vector<FixtureRow>& rows) {
    for (const FixtureRow& row : rows) {
        if ((row.q - 1) % row.d != 0) throw std::logic_error("fixture d does not divide p-1");
        if (row.u != row.d) throw std::logic_error("fixture u(x^d) != d");
        if (row.upper != row.q - (row.q - 1) / row.d) throw std::logic_error("fixture upper bound off");
    }
}

struct FixtureChecker {
    FixtureChecker() {
        check_xd_rows(kT8);
        check_xd_rows(kT9);
    }
};
const FixtureChecker kChecked;

int default_max_q(FixtureTable t) {
    switch (t) {
        case FixtureTable::T3: return 31;
        case FixtureTable::T4: return 27;
        case FixtureTable::T8:
        case FixtureTable::T9: return 19;
    }
    return 0;
}

}  // namespace

FixtureTable fixture_table_from_name(const std::string& name) {
    if (name == "T3") return FixtureTable::T3;
    if (name == "T4") return FixtureTable::T4;
    if (name == "T8") return FixtureTable::T8;
    if (name == "T9") return FixtureTable::T9;
    throw std::invalid_argument("unknown fixture table: " + name);
}

std::string fixture_table_name(FixtureTable t) {
    switch (t) {
        case FixtureTable::T3: return "T3";
        case FixtureTable::T4: return "T4";
        case FixtureTable::T8: return "T8";
        case FixtureTable::T9: return "T9";
    }
    return "?";
}

const std::vector<FixtureRow>& fixture_rows(FixtureTable t) {
    switch (t) {
        case FixtureTable::T3: return kT3;
        case FixtureTable::T4: return kT4;
        case FixtureTable::T8: return kT8;
        case FixtureTable::T9: return kT9;
    }
    return kT3;
}

ReproReport repro_appendix(FixtureTable t, ReproLimits limits) {
    auto t0 = std::chrono::steady_clock::now();
    int max_q = limits.max_q > 0 ? limits.max_q : default_max_q(t);
    ReproReport report;
    report.table = fixture_table_name(t);
    for (const FixtureRow& row : fixture_rows(t)) {
        ReproRow out;
        out.q = row.q;
        out.d = row.d;
        out.expected = row.pres_value;
        double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (row.q > max_q || (limits.time_budget > 0 && spent > limits.time_budget)) {
            out.status = "skip";
            ++report.skips;
            report.rows.push_back(out);
            continue;
        }
        auto row_t0 = std::chrono::steady_clock::now();
        GroupPtr g = Group::parse("gf:" + std::to_string(row.q));
        FunctionTable f = FunctionTable::pow_map(g, row.d);
        PresOptions opts;
        opts.workers = limits.workers;
        PresResult res = solve_pres_exact(f, opts);
        out.computed = res.value;
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - row_t0).count();
        out.status = (res.found && res.value == row.pres_value) ? "match" : "mismatch";
        (out.status == "match" ? report.matches : report.mismatches)++;
        report.rows.push_back(out);
    }
    return report;
}

}  // namespace pres
