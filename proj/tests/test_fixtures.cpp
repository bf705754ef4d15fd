#include "doctest.h"
#include "pres/fixtures.hpp"
#include "pres/json_io.hpp"
#include "pres/function_table.hpp"

using namespace pres;

TEST_CASE("fixture tables are loaded and self-consistent") {
    CHECK(fixture_rows(FixtureTable::T3).size() == 66);
    CHECK(fixture_rows(FixtureTable::T4).size() == 11);
    CHECK(fixture_rows(FixtureTable::T8).size() == 72);
    CHECK(fixture_rows(FixtureTable::T9).size() == 53);

    for (FixtureTable t : {FixtureTable::T8, FixtureTable::T9})
        for (const FixtureRow& row : fixture_rows(t)) {
            CHECK(row.u == row.d);
            CHECK(row.upper == row.q - (row.q - 1) / row.d);
        }

    // the real uniformity of x^d matches the printed one at desk scale
    for (const FixtureRow& row : fixture_rows(FixtureTable::T8)) {
        if (row.q > 17) continue;
        FunctionTable f = FunctionTable::pow_map(Group::parse("gf:" + std::to_string(row.q)), row.d);
        CHECK(f.uniformity() == row.u);
        CHECK(f.image_size() == (row.q - 1) / row.d + 1);
    }

    CHECK(fixture_table_from_name("T4") == FixtureTable::T4);
    CHECK_THROWS_AS(fixture_table_from_name("T5"), std::invalid_argument);
}

TEST_CASE("repro diffs published rows at desk scale") {
    ReproLimits limits;
    limits.max_q = 13;
    ReproReport t3 = repro_appendix(FixtureTable::T3, limits);
    CHECK(t3.table == "T3");
    CHECK(t3.mismatches == 0);
    CHECK(t3.matches == 5);  // p = 3, 5, 7, 11, 13
    CHECK(t3.skips == (int)fixture_rows(FixtureTable::T3).size() - 5);
    for (const ReproRow& row : t3.rows)
        if (row.status == "match") CHECK(row.computed == row.expected);

    ReproReport t9 = repro_appendix(FixtureTable::T9, limits);
    CHECK(t9.mismatches == 0);
    CHECK(t9.matches == 5);  // (3,2) (7,2) (7,3) (11,2) (11,5)
}

TEST_CASE("repro reports are byte-identical across invocations") {
    ReproLimits limits;
    limits.max_q = 11;
    std::string a = to_json(repro_appendix(FixtureTable::T9, limits)).dump(2);
    std::string b = to_json(repro_appendix(FixtureTable::T9, limits)).dump(2);
    CHECK(a == b);
}

TEST_CASE("repro honors an exhausted time budget") {
    ReproLimits limits;
    limits.max_q = 31;
    limits.time_budget = 1e-9;
    ReproReport r = repro_appendix(FixtureTable::T3, limits);
    CHECK(r.matches + r.mismatches <= 1);
    CHECK(r.skips >= (int)fixture_rows(FixtureTable::T3).size() - 1);
}
