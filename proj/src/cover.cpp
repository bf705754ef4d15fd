#include "pres/cover.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace pres {

CoverReport is_cover(const FunctionTable& f, const std::vector<int>& s) {
    int q = f.size();
    std::vector<char> in_s(q, 0);
    for (int v : s) {
        if (v < 0 || v >= q) throw std::out_of_range("value set element out of range");
        in_s[v] = 1;
    }
    CoverReport report;
    report.s = s;
    std::sort(report.s.begin(), report.s.end());
    report.rows_hit.assign(q, 0);
    for (int r = 0; r < q; ++r) {
        for (int c : f.image_elements())
            if (in_s[f.group()->sub(r, c)]) ++report.rows_hit[r];
        if (report.rows_hit[r] == 0) report.uncovered_rows.push_back(r);
    }
    report.is_cover = report.uncovered_rows.empty();
    return report;
}

namespace {

BigInt big_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

}  // namespace

CoverBound expected_cover_bound(int q, int v) {
    if (v < 1 || v > q) throw std::invalid_argument("need 1 <= v <= q");
    CoverBound bound;
    for (int k = 1; k <= q; ++k) {
        BigRational sum = 0;
        for (int i = 0; i <= k; ++i) {
            BigRational term(big_binom(k, i) * big_binom(v, i), big_binom(q, i));
            sum += (i % 2 == 0) ? term : -term;
        }
        bound.values.push_back(BigRational(q) * sum);
        if (bound.values.back() < 1) {
            bound.min_k = k;
            return bound;
        }
    }
    throw std::logic_error("expected-cover mass never dropped below 1");  // impossible: k=q gives 0
}

Alg2Result algorithm2(const FunctionTable& f, const std::vector<int>& s, std::uint64_t max_iters,
                      std::optional<std::uint64_t> seed) {
    CoverReport cover = is_cover(f, s);
    if (!cover.is_cover) throw std::invalid_argument("value set is not a cover of G");
    int q = f.size();
    if (max_iters == 0) max_iters = 10ull * q * q;

    std::vector<char> in_s(q, 0);
    for (int v : s) in_s[v] = 1;

    const std::vector<int>& cols = f.image_elements();
    std::vector<std::vector<int>> q_of_row(q);  // columns usable per row
    for (int r = 0; r < q; ++r)
        for (int c : cols)
            if (in_s[f.group()->sub(r, c)]) q_of_row[r].push_back(c);

    std::vector<int> cap(q, 0), col_pos(q, -1);
    for (size_t j = 0; j < cols.size(); ++j) {
        cap[cols[j]] = f.preimage_count(cols[j]);
        col_pos[cols[j]] = (int)j;
    }
    std::vector<std::deque<int>> assigned(cols.size());  // FIFO per column

    // Step 1: first fit into columns that still have openings
    std::deque<int> b;
    for (int r = 0; r < q; ++r) {
        bool placed = false;
        for (int c : q_of_row[r]) {
            auto& bucket = assigned[col_pos[c]];
            if ((int)bucket.size() < cap[c]) {
                bucket.push_back(r);
                placed = true;
                break;
            }
        }
        if (!placed) b.push_back(r);
    }

    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);

    // Step 2: force rows in, evicting the oldest occupant on overflow
    Alg2Result result;
    while (!b.empty() && result.iterations < max_iters) {
        ++result.iterations;
        int r = b.front();
        b.pop_front();
        int c;
        if (rng) {
            c = q_of_row[r][(*rng)() % q_of_row[r].size()];
        } else {
            c = q_of_row[r][0];
            int best_open = cap[c] - (int)assigned[col_pos[c]].size();
            for (int cand : q_of_row[r]) {
                int open = cap[cand] - (int)assigned[col_pos[cand]].size();
                if (open > best_open) {
                    c = cand;
                    best_open = open;
                }
            }
        }
        auto& bucket = assigned[col_pos[c]];
        bucket.push_back(r);
        if ((int)bucket.size() > cap[c]) {
            size_t victim = rng ? (*rng)() % (bucket.size() - 1) : 0;
            b.push_back(bucket[victim]);
            bucket.erase(bucket.begin() + victim);
        }
    }

    result.leftover_rows = {b.begin(), b.end()};
    std::sort(result.leftover_rows.begin(), result.leftover_rows.end());
    result.success = b.empty();
    if (result.success) {
        for (size_t j = 0; j < cols.size(); ++j)
            for (int r : assigned[j]) result.a.cells.push_back({r, cols[j]});
        std::sort(result.a.cells.begin(), result.a.cells.end());
    }
    return result;
}

}  // namespace pres
