#pragma once

#include <string>
#include <vector>

#include "pres/pres_solver.hpp"

namespace pres {

enum class FixtureTable { T3, T4, T8, T9 };

/// One published row: q (or p), exponent d, the reported pres value, and for
/// the x^d tables also the printed uniformity and upper bound (-1 elsewhere).
struct FixtureRow {
    int q = 0;
    int d = 2;
    int pres_value = 0;
    int u = -1;
    int upper = -1;
};

FixtureTable fixture_table_from_name(const std::string& name);  // "T3".."T9"
std::string fixture_table_name(FixtureTable t);

/// Transcribed rows; the loader cross-checks u = d and upper = p - (p-1)/d
/// for the x^d tables.
const std::vector<FixtureRow>& fixture_rows(FixtureTable t);

struct ReproLimits {
    int max_q = 0;          // 0: table-specific desk-scale default
    double time_budget = 0; // seconds; 0: no budget
    int workers = 1;
};

struct ReproRow {
    int q = 0;
    int d = 2;
    int expected = 0;
    int computed = -1;
    std::string status;  // match | mismatch | skip
    double seconds = 0;
};

struct ReproReport {
    std::string table;
    std::vector<ReproRow> rows;
    int matches = 0;
    int mismatches = 0;
    int skips = 0;
};

/// Recomputes each in-limit row with the exact solver and diffs against the
/// published value. Rows beyond the limits are reported as skips.
ReproReport repro_appendix(FixtureTable t, ReproLimits limits = {});

}  // namespace pres
