#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pres/subtraction.hpp"

namespace pres {

using BigRational = boost::multiprecision::cpp_rational;

struct CoverReport {
    std::vector<int> s;
    bool is_cover = false;
    std::vector<int> uncovered_rows;  // ascending
    std::vector<int> rows_hit;        // per row: cells of M_f with value in S
};

/// S covers G iff every row of M_f holds at least one entry with value in S.
CoverReport is_cover(const FunctionTable& f, const std::vector<int>& s);

struct CoverBound {
    int min_k = 0;                      // least k with expected uncovered mass < 1
    std::vector<BigRational> values;    // q * sum_i (-1)^i C(k,i) C(v,i)/C(q,i) for k = 1..min_k
};

/// Exact rational evaluation of the expected-cover inequality.
CoverBound expected_cover_bound(int q, int v);

struct Alg2Result {
    bool success = false;
    AdmissibleSubtable a;            // valid when success
    std::vector<int> leftover_rows;  // unassigned rows at termination
    std::uint64_t iterations = 0;
};

/// Two-step assignment repair restricted to cells with values in S: first-fit
/// rows into open columns, then move unassigned rows in, evicting the oldest
/// occupant on overflow (FIFO). A seed switches both choices to a seeded RNG.
/// Rejects S that is not a cover. max_iters 0 means 10*q^2.
Alg2Result algorithm2(const FunctionTable& f, const std::vector<int>& s, std::uint64_t max_iters = 0,
                      std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace pres
