#pragma once

#include <utility>
#include <vector>

#include "pres/subtraction.hpp"

namespace pres {

/// Working square table for the subtable construction: rows from P_0, columns
/// are (image element, copy index) with j-1 copies of every column whose image
/// has j preimages, ordered by j, then element, then copy.
struct M0Table {
    const FunctionTable* f = nullptr;
    std::vector<int> rows;                      // alive rows, ascending
    std::vector<std::pair<int, int>> cols;      // alive (column element, copy >= 1)

    int side() const { return (int)rows.size(); }
    int entry(int row_elem, int col_elem) const { return f->group()->sub(row_elem, col_elem); }
};

/// Side length is q - V(f); empty for permutations.
M0Table build_m0(const FunctionTable& f);

/// Number of distinct rows of M containing v; copies in one row count once.
int appearance_count(const M0Table& m, int v);

enum class GreedyStrategy { Average, Greedy };

struct GreedyStep {
    int mu = 0;                              // selection threshold used
    int v = 0;                               // chosen value
    std::vector<std::pair<int, int>> cells;  // B_i as (row, column element)
    int n = 0;                               // side length after the step
};

struct GreedyTrace {
    int n0 = 0;
    std::vector<GreedyStep> steps;
    std::vector<int> final_S;   // ascending
    AdmissibleSubtable final_A;
};

/// Iterative subtable construction: start from the zero diagonal, repeatedly
/// pick a value with at least average appearance (strategy Average, smallest
/// qualifying element) or maximum appearance (strategy Greedy, all its cells),
/// delete the matched rows/columns, and close with the leftover diagonal.
/// Always returns an admissible subtable with range G.
GreedyTrace algorithm1(const FunctionTable& f, int k, GreedyStrategy strategy = GreedyStrategy::Average);

/// n_0 = q/2 (even) or (q-1)/2 (odd, divisor q-1); n_k = n_{k-1} - ceil(n^2/q).
/// Returns the sequence from n_0 down to 0 (or through upto_k steps).
std::vector<long long> recurrence_nk(long long q, bool odd_variant, int upto_k = -1);

/// ceil(2*sqrt(q)) - 1, improved to 2*sqrt(q) - 2 at perfect squares; the odd
/// form replaces q by q-1.
long long two_to_one_bound(long long q, bool odd);

/// (u(f), q - V(f) + 1)
std::pair<int, int> generic_bounds(const FunctionTable& f);

}  // namespace pres
