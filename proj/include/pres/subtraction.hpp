#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pres/function_table.hpp"

namespace pres {

using BigInt = boost::multiprecision::cpp_int;

/// q x V(f) table with entry m_{r,c} = r - c. Rows ordered P_1,...,P_u,P_0,
/// columns P_1,...,P_u, ascending element index within each block, so the
/// upper diagonal is all zero.
struct SubtractionTable {
    std::vector<int> row_order;               // q elements
    std::vector<int> col_order;               // V(f) image elements
    std::vector<std::vector<int>> entries;    // entries[i][j] = sub(row_order[i], col_order[j])

    int entry(int row_elem, int col_elem, const Group& g) const { return g.sub(row_elem, col_elem); }
};

SubtractionTable build_subtraction_table(const FunctionTable& f);

/// Cell set of M_f addressed by (row element, column element). Value set and
/// range are always derived from the cells.
struct AdmissibleSubtable {
    std::vector<std::pair<int, int>> cells;  // sorted

    std::vector<int> value_set(const FunctionTable& f) const;  // ascending, distinct
    std::vector<int> range() const;                            // ascending, distinct rows
};

/// (A2) plus cell validity: exactly #preim(f,c) distinct cells per image
/// column and q cells total. (A1) holds by construction of value_set.
bool check_admissible(const std::vector<std::pair<int, int>>& cells, const FunctionTable& f);

std::vector<int> range_of(const AdmissibleSubtable& a);

/// Number of functions realizing one admissible subtable: prod_t (t!)^{#P_t}.
BigInt correspondence_count(const FunctionTable& f);

/// One realization g of A. The selector indexes the prod_t (t!)^{#P_t}
/// pairings column by column (M_f column order, mixed radix, least significant
/// first); 0 pairs ascending preimages with ascending chosen rows.
FunctionTable realize_function(const AdmissibleSubtable& a, const FunctionTable& f, const BigInt& selector);

/// The subtable a function g induces: cell (g(x)+f(x), f(x)) for every x.
AdmissibleSubtable subtable_of(const FunctionTable& g, const FunctionTable& f);

/// q x q variant with one column per domain element and entry r - f(c).
/// Columns grouped by image (M_f column order), preimages ascending within.
struct DecompressedTable {
    std::vector<int> row_order;             // q elements, same order as M_f
    std::vector<int> col_order;             // q domain elements
    std::vector<std::vector<int>> entries;  // entries[i][j] = sub(row_order[i], f(col_order[j]))
};

DecompressedTable build_decompressed_table(const FunctionTable& f);

}  // namespace pres
