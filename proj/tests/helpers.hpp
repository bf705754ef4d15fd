#pragma once

#include <random>
#include <vector>

#include "pres/function_table.hpp"

namespace testutil {

using namespace pres;

// F9 built on the x^2+2x+2 modulus; index map for the printed tables:
// 0->0, 1->1, -1->2, alpha->3, alpha^2->4, -alpha^3->5, -alpha->6,
// alpha^3->7, -alpha^2->8.
inline GroupPtr f9_group() { return Group::parse("gf:9:poly=2,2,1"); }

inline FunctionTable f9_square() { return FunctionTable::pow_map(f9_group(), 2); }

// Published subtraction table of x^2 over F9, translated to element indices.
// Rows 0,1,a^2,-1,-a^2,a,a^3,-a,-a^3; columns 0,1,a^2,-1,-a^2.
struct PaperTable {
    std::vector<int> rows, cols;
    std::vector<std::vector<int>> entries;
};

inline PaperTable table1() {
    return {{0, 1, 4, 2, 8, 3, 7, 6, 5},
            {0, 1, 4, 2, 8},
            {{0, 2, 8, 1, 4},
             {1, 0, 6, 2, 5},
             {4, 3, 0, 5, 8},
             {2, 1, 7, 0, 3},
             {8, 7, 4, 6, 0},
             {3, 5, 2, 4, 7},
             {7, 6, 3, 8, 2},
             {6, 8, 5, 7, 1},
             {5, 4, 1, 3, 6}}};
}

// Shaded admissible subtable of Table 1, value set {0, 1, alpha}.
inline std::vector<std::pair<int, int>> table1_cells() {
    return {{0, 0}, {2, 1}, {2, 2}, {4, 1}, {4, 4}, {5, 2}, {5, 4}, {6, 8}, {8, 8}};
}

// The realization g printed in the worked example.
inline std::vector<int> table1_paper_g() { return {0, 3, 1, 0, 0, 1, 1, 0, 3}; }

// Published decompressed table: columns are domain elements
// 0,1,-1,a,-a,a^2,-a^2,a^3,-a^3.
inline PaperTable table7() {
    return {{0, 1, 4, 2, 8, 3, 7, 6, 5},
            {0, 1, 2, 3, 6, 4, 8, 7, 5},
            {{0, 2, 2, 8, 8, 1, 1, 4, 4},
             {1, 0, 0, 6, 6, 2, 2, 5, 5},
             {4, 3, 3, 0, 0, 5, 5, 8, 8},
             {2, 1, 1, 7, 7, 0, 0, 3, 3},
             {8, 7, 7, 4, 4, 6, 6, 0, 0},
             {3, 5, 5, 2, 2, 4, 4, 7, 7},
             {7, 6, 6, 3, 3, 8, 8, 2, 2},
             {6, 8, 8, 5, 5, 7, 7, 1, 1},
             {5, 4, 4, 1, 1, 3, 3, 6, 6}}};
}

// Shaded one-per-column subtable of the decompressed example, as
// (row element, domain column element).
inline std::vector<std::pair<int, int>> table7_cells() {
    return {{0, 0}, {2, 2}, {2, 4}, {4, 1}, {4, 3}, {5, 6}, {5, 8}, {6, 5}, {8, 7}};
}

// The worked two-to-one example over a group of order 8: Z4 x Z2 relabeled so
// that the deterministic tie-breaks retrace the published steps. Label k
// carries the printed name: 0, a4->1, a3->2, a1->3, a2->4, a5->5, a6->6, a7->7.
inline GroupPtr table2_group() {
    const std::pair<int, int> elem[8] = {{0, 0}, {3, 0}, {0, 1}, {1, 0}, {2, 0}, {2, 1}, {3, 1}, {1, 1}};
    auto index_of = [&](int z4, int z2) {
        for (int i = 0; i < 8; ++i)
            if (elem[i] == std::pair{z4, z2}) return i;
        return -1;
    };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            table[a][b] = index_of((elem[a].first + elem[b].first) % 4, (elem[a].second + elem[b].second) % 2);
    return Group::cayley(table, "cayley:<table2>");
}

// Two-to-one f with image {0, a1, a2, a3} = {0, 3, 4, 2}.
inline FunctionTable table2_f() { return FunctionTable(table2_group(), {0, 0, 2, 2, 3, 3, 4, 4}); }

inline FunctionTable random_function(const GroupPtr& g, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, g->order() - 1);
    std::vector<int> images(g->order());
    for (int& v : images) v = pick(rng);
    return FunctionTable(g, std::move(images));
}

// Random two-to-one f over an even-order group: random image set of size q/2,
// random pairing of the domain onto it.
inline FunctionTable random_two_to_one(const GroupPtr& g, std::mt19937& rng) {
    int q = g->order();
    std::vector<int> domain(q), image_pool(q);
    for (int i = 0; i < q; ++i) domain[i] = image_pool[i] = i;
    std::shuffle(domain.begin(), domain.end(), rng);
    std::shuffle(image_pool.begin(), image_pool.end(), rng);
    std::vector<int> images(q);
    for (int i = 0; i < q / 2; ++i) {
        images[domain[2 * i]] = image_pool[i];
        images[domain[2 * i + 1]] = image_pool[i];
    }
    return FunctionTable(g, std::move(images));
}

}  // namespace testutil
