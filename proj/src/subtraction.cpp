#include "pres/subtraction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pres {

namespace {

std::vector<int> block_ordered_rows(const FunctionTable& f) {
    const PreimagePartition& part = f.partition();
    std::vector<int> rows;
    rows.reserve(f.size());
    for (int t = 1; t <= part.u; ++t) rows.insert(rows.end(), part.sets[t].begin(), part.sets[t].end());
    rows.insert(rows.end(), part.sets[0].begin(), part.sets[0].end());
    return rows;
}

std::vector<int> block_ordered_cols(const FunctionTable& f) {
    const PreimagePartition& part = f.partition();
    std::vector<int> cols;
    cols.reserve(f.image_size());
    for (int t = 1; t <= part.u; ++t) cols.insert(cols.end(), part.sets[t].begin(), part.sets[t].end());
    return cols;
}

}  // namespace

SubtractionTable build_subtraction_table(const FunctionTable& f) {
    SubtractionTable t;
    t.row_order = block_ordered_rows(f);
    t.col_order = block_ordered_cols(f);
    const Group& g = *f.group();
    t.entries.resize(t.row_order.size());
    for (size_t i = 0; i < t.row_order.size(); ++i) {
        t.entries[i].resize(t.col_order.size());
        for (size_t j = 0; j < t.col_order.size(); ++j)
            t.entries[i][j] = g.sub(t.row_order[i], t.col_order[j]);
    }
    return t;
}

std::vector<int> AdmissibleSubtable::value_set(const FunctionTable& f) const {
    std::set<int> vals;
    for (auto [r, c] : cells) vals.insert(f.group()->sub(r, c));
    return {vals.begin(), vals.end()};
}

std::vector<int> AdmissibleSubtable::range() const {
    std::set<int> rows;
    for (auto [r, c] : cells) rows.insert(r);
    return {rows.begin(), rows.end()};
}

std::vector<int> range_of(const AdmissibleSubtable& a) { return a.range(); }

bool check_admissible(const std::vector<std::pair<int, int>>& cells, const FunctionTable& f) {
    int q = f.size();
    if ((int)cells.size() != q) return false;
    std::set<std::pair<int, int>> distinct(cells.begin(), cells.end());
    if ((int)distinct.size() != q) return false;
    std::map<int, int> per_col;
    for (auto [r, c] : cells) {
        if (r < 0 || r >= q || c < 0 || c >= q) return false;
        if (f.preimage_count(c) == 0) return false;  // column must be an image element
        ++per_col[c];
    }
    for (int c : f.image_elements())
        if (per_col[c] != f.preimage_count(c)) return false;
    return true;
}

BigInt correspondence_count(const FunctionTable& f) {
    BigInt total = 1;
    for (int c : f.image_elements()) {
        BigInt fact = 1;
        for (int t = 2; t <= f.preimage_count(c); ++t) fact *= t;
        total *= fact;
    }
    return total;
}

FunctionTable realize_function(const AdmissibleSubtable& a, const FunctionTable& f, const BigInt& selector) {
    if (!check_admissible(a.cells, f)) throw std::invalid_argument("subtable is not admissible");
    if (selector < 0 || selector >= correspondence_count(f))
        throw std::invalid_argument("selector out of range");

    std::map<int, std::vector<int>> rows_by_col;
    for (auto [r, c] : a.cells) rows_by_col[c].push_back(r);

    std::vector<int> g_images(f.size(), -1);
    BigInt rest = selector;
    for (int c : block_ordered_cols(f)) {
        std::vector<int>& rows = rows_by_col[c];
        std::sort(rows.begin(), rows.end());
        const std::vector<int>& xs = f.preimages(c);
        int t = (int)xs.size();
        BigInt fact = 1;
        for (int i = 2; i <= t; ++i) fact *= i;
        BigInt code = rest % fact;
        rest /= fact;
        // decode lexicographic permutation rank into a pairing
        std::vector<int> avail = rows;
        for (int i = 0; i < t; ++i) {
            BigInt f2 = 1;
            for (int j = 2; j <= t - 1 - i; ++j) f2 *= j;
            int pick = (int)(code / f2);
            code %= f2;
            g_images[xs[i]] = f.group()->sub(avail[pick], c);
            avail.erase(avail.begin() + pick);
        }
    }
    return FunctionTable(f.group(), std::move(g_images));
}

AdmissibleSubtable subtable_of(const FunctionTable& g, const FunctionTable& f) {
    if (g.group() != f.group()) throw std::invalid_argument("functions live on different groups");
    std::set<std::pair<int, int>> cells;
    for (int x = 0; x < f.size(); ++x) cells.insert({f.group()->add(g(x), f(x)), f(x)});
    return AdmissibleSubtable{{cells.begin(), cells.end()}};
}

DecompressedTable build_decompressed_table(const FunctionTable& f) {
    DecompressedTable t;
    t.row_order = block_ordered_rows(f);
    for (int c : block_ordered_cols(f)) {
        const std::vector<int>& xs = f.preimages(c);
        t.col_order.insert(t.col_order.end(), xs.begin(), xs.end());
    }
    const Group& g = *f.group();
    t.entries.resize(t.row_order.size());
    for (size_t i = 0; i < t.row_order.size(); ++i) {
        t.entries[i].resize(t.col_order.size());
        for (size_t j = 0; j < t.col_order.size(); ++j)
            t.entries[i][j] = g.sub(t.row_order[i], f(t.col_order[j]));
    }
    return t;
}

}  // namespace pres
