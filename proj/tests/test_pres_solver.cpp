#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pres/json_io.hpp"
#include "pres/pres_solver.hpp"

using namespace pres;

TEST_CASE("pres model shape") {
    FunctionTable f = testutil::f9_square();
    IpModel model = build_pres_ip(f);
    CHECK(model.vars.size() == 9 * (5 + 1));
    int eq = 0, le = 0;
    for (const IpConstraint& c : model.cons) (c.rel == Rel::Eq ? eq : le)++;
    CHECK(eq == 9 + 5);
    CHECK(le == 9 * 5);

    GroupPtr f3 = Group::parse("gf:3");
    IpModel small = build_pres_ip(FunctionTable::pow_map(f3, 2));
    int binaries = 0;
    for (const IpVariable& v : small.vars) binaries += v.kind == VarKind::Binary;
    CHECK(binaries == 9);  // 3 * (V+1) with V = 2
}

TEST_CASE("feasibility matching on the F9 example") {
    FunctionTable f = testutil::f9_square();

    MatchResult yes = feasibility_matching(f, {0, 1, 3});
    CHECK(yes.feasible);
    CHECK(check_admissible(yes.witness.cells, f));
    CHECK(range_of(yes.witness).size() == 9);
    std::vector<int> vals = yes.witness.value_set(f);
    for (int v : vals) CHECK((v == 0 || v == 1 || v == 3));

    CHECK_FALSE(feasibility_matching(f, {0}).feasible);
    CHECK(feasibility_matching(f, {0, 1, 2, 3, 4, 5, 6, 7, 8}).feasible);
    CHECK_THROWS_AS(feasibility_matching(f, {}), std::invalid_argument);
}

TEST_CASE("matching with S = G is always feasible") {
    std::mt19937 rng(11);
    GroupPtr z8 = Group::cyclic(8);
    std::vector<int> all(8);
    for (int i = 0; i < 8; ++i) all[i] = i;
    for (int t = 0; t < 20; ++t) {
        FunctionTable f = testutil::random_function(z8, rng);
        CHECK(feasibility_matching(f, all).feasible);
    }
}

TEST_CASE("matching feasibility is monotone in S") {
    std::mt19937 rng(12);
    GroupPtr z6 = Group::cyclic(6);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int t = 0; t < 30; ++t) {
        FunctionTable f = testutil::random_function(z6, rng);
        std::vector<int> s = {pick(rng), pick(rng)};
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!feasibility_matching(f, s).feasible) continue;
        std::vector<int> bigger = s;
        int extra = pick(rng);
        if (std::find(bigger.begin(), bigger.end(), extra) == bigger.end()) bigger.push_back(extra);
        CHECK(feasibility_matching(f, bigger).feasible);
    }
}

TEST_CASE("exact pres on published values") {
    PresResult r9 = solve_pres_exact(testutil::f9_square());
    CHECK(r9.found);
    CHECK(r9.value == 3);
    CHECK(r9.witness_S == std::vector<int>{0, 1, 3});  // the worked example's value set

    PresResult r5 = solve_pres_exact(FunctionTable::pow_map(Group::parse("gf:5"), 2));
    CHECK(r5.value == 3);

    PresResult r7 = solve_pres_exact(FunctionTable::pow_map(Group::parse("gf:7"), 3));
    CHECK(r7.value == 3);
}

TEST_CASE("witnesses are valid certificates") {
    for (const char* spec : {"gf:9:poly=2,2,1", "gf:7", "zn:8"}) {
        GroupPtr g = Group::parse(spec);
        std::mt19937 rng(55);
        FunctionTable f = g->field() ? FunctionTable::pow_map(g, 2) : testutil::random_function(g, rng);
        PresResult r = solve_pres_exact(f);
        REQUIRE(r.found);
        CHECK(check_admissible(r.witness_A.cells, f));
        CHECK((int)range_of(r.witness_A).size() == g->order());
        CHECK((int)r.witness_S.size() == r.value);
        FunctionTable gw(f.group(), r.witness_g);
        CHECK(add_functions(gw, f).is_permutation());
        CHECK(gw.image_size() <= r.value);
    }
}

TEST_CASE("solver agrees with the definition oracle on q <= 5") {
    CHECK(pres_bruteforce_oracle(FunctionTable::pow_map(Group::parse("gf:5"), 2)) == 3);
    CHECK(pres_bruteforce_oracle(FunctionTable::pow_map(Group::parse("gf:3"), 2)) == 2);
    GroupPtr z4 = Group::cyclic(4);
    CHECK(pres_bruteforce_oracle(FunctionTable(z4, {0, 1, 2, 3})) == 1);
    CHECK(pres_bruteforce_oracle(FunctionTable(Group::cyclic(3), {0, 0, 0})) == 3);
    CHECK_THROWS_AS(pres_bruteforce_oracle(testutil::f9_square()), std::invalid_argument);

    std::mt19937 rng(2024);
    for (const char* spec : {"zn:3", "zn:4", "zn:5", "prod:(zn:2)x(zn:2)"}) {
        GroupPtr g = Group::parse(spec);
        for (int t = 0; t < 15; ++t) {
            FunctionTable f = testutil::random_function(g, rng);
            CHECK(solve_pres_exact(f).value == pres_bruteforce_oracle(f));
        }
    }
}

TEST_CASE("pres is translation invariant") {
    std::mt19937 rng(321);
    GroupPtr z6 = Group::cyclic(6);
    for (int t = 0; t < 10; ++t) {
        FunctionTable f = testutil::random_function(z6, rng);
        int base = solve_pres_exact(f).value;
        for (int c = 1; c < 6; ++c) {
            std::vector<int> shifted(6);
            for (int x = 0; x < 6; ++x) shifted[x] = z6->add(f(x), c);
            CHECK(solve_pres_exact(FunctionTable(z6, shifted)).value == base);
        }
    }
}

TEST_CASE("symmetry reduction and workers do not change the value") {
    std::mt19937 rng(77);
    for (const char* spec : {"zn:8", "zn:9", "gf:9:poly=2,2,1"}) {
        GroupPtr g = Group::parse(spec);
        for (int t = 0; t < 6; ++t) {
            FunctionTable f =
                t == 0 && g->field() ? FunctionTable::pow_map(g, 2) : testutil::random_function(g, rng);
            PresOptions plain;
            PresResult base = solve_pres_exact(f, plain);
            PresOptions nosym;
            nosym.symmetry = false;
            CHECK(solve_pres_exact(f, nosym).value == base.value);
            PresOptions threaded;
            threaded.workers = 4;
            PresResult par = solve_pres_exact(f, threaded);
            CHECK(par.value == base.value);
            CHECK(par.witness_S == base.witness_S);  // deterministic reduction
        }
    }
}

TEST_CASE("pres sits between the generic bounds") {
    std::mt19937 rng(808);
    for (const char* spec : {"zn:7", "zn:8", "gf:8"}) {
        GroupPtr g = Group::parse(spec);
        for (int t = 0; t < 12; ++t) {
            FunctionTable f = testutil::random_function(g, rng);
            PresResult r = solve_pres_exact(f);
            CHECK(r.value >= f.uniformity());
            CHECK(r.value <= g->order() - f.image_size() + 1);
        }
    }
}

TEST_CASE("max_k exhaustion reports a lower bound") {
    FunctionTable f = testutil::f9_square();
    PresOptions opts;
    opts.max_k = 2;
    PresResult r = solve_pres_exact(f, opts);
    CHECK_FALSE(r.found);
    CHECK(r.value == 3);  // pres(f) > max_k
}

TEST_CASE("verify accepts a range-G witness with the published value set") {
    FunctionTable f = testutil::f9_square();
    MatchResult match = feasibility_matching(f, {0, 1, 3});
    REQUIRE(match.feasible);
    Assignment good = encode_pres_assignment(f, match.witness);

    VerifyReport ok = verify_pres_solution(f, good);
    CHECK(ok.ok());
    CHECK(ok.objective == 3);

    // all-zero assignment violates every row constraint
    Assignment zeros = good;
    for (auto& [name, value] : zeros) value = 0;
    VerifyReport bad = verify_pres_solution(f, zeros);
    int rows_violated = 0;
    for (const Violation& v : bad.violations) rows_violated += v.constraint.rfind("row_", 0) == 0;
    CHECK(rows_violated == 9);

    // flipping a single x touches exactly its row, column, and link rows
    Assignment flipped = good;
    REQUIRE(flipped.at("x_3_1") == 0);  // alpha - 1 = -alpha^3 is outside the value set
    flipped["x_3_1"] = 1;
    VerifyReport rep = verify_pres_solution(f, flipped);
    std::vector<std::string> names;
    for (const Violation& v : rep.violations) names.push_back(v.constraint);
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"col_1", "link_3_1", "row_3"});

    Assignment missing = good;
    missing.erase("y_0");
    CHECK_THROWS_AS(verify_pres_solution(f, missing), std::invalid_argument);
}

TEST_CASE("the example subtable itself is not a range-G witness") {
    // The shaded subtable of the worked example is admissible but its range
    // covers only six rows, so the row constraints flag the rows outside the
    // printed range {0, a^2, -1, -a^2, -a, -a^3} and the doubled ones.
    FunctionTable f = testutil::f9_square();
    Assignment enc = encode_pres_assignment(f, AdmissibleSubtable{testutil::table1_cells()});
    VerifyReport rep = verify_pres_solution(f, enc);
    std::vector<std::string> names;
    for (const Violation& v : rep.violations) names.push_back(v.constraint);
    std::sort(names.begin(), names.end());
    CHECK(names ==
          std::vector<std::string>{"row_1", "row_2", "row_3", "row_4", "row_5", "row_7"});
    CHECK(rep.objective == 3);
}

TEST_CASE("assignment json round trip verifies") {
    FunctionTable f = testutil::f9_square();
    PresResult r = solve_pres_exact(f);
    Assignment enc = encode_pres_assignment(f, r.witness_A);
    nlohmann::json j = to_json(enc);
    Assignment back = assignment_from_json(j);
    CHECK(verify_pres_solution(f, back).ok());
}
