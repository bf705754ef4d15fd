#include "pres/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace pres {

M0Table build_m0(const FunctionTable& f) {
    M0Table m;
    m.f = &f;
    const PreimagePartition& part = f.partition();
    m.rows = part.sets[0];
    // glued copies: j ascending, then element, then copy index
    for (int j = 2; j <= part.u; ++j)
        for (int c : part.sets[j])
            for (int copy = 1; copy <= j - 1; ++copy) m.cols.push_back({c, copy});
    return m;
}

int appearance_count(const M0Table& m, int v) {
    int count = 0;
    for (int r : m.rows) {
        for (const auto& [c, copy] : m.cols)
            if (m.entry(r, c) == v) {
                ++count;
                break;
            }
    }
    return count;
}

namespace {

// q odd, f(0)=0, two-to-one on the nonzero elements: the value 0 never shows
// up in M_0, so averages run over G\{0}.
bool odd_two_to_one(const FunctionTable& f) {
    if (f.size() % 2 == 0 || f(0) != 0) return false;
    if (f.preimage_count(0) != 1) return false;
    for (int c : f.image_elements())
        if (c != 0 && f.preimage_count(c) != 2) return false;
    return true;
}

}  // namespace

GreedyTrace algorithm1(const FunctionTable& f, int k, GreedyStrategy strategy) {
    if (k < 0) throw std::invalid_argument("step budget must be >= 0");
    int q = f.size();
    const Group& g = *f.group();
    int divisor = odd_two_to_one(f) ? q - 1 : q;

    GreedyTrace trace;
    std::set<int> s = {0};
    std::vector<std::pair<int, int>> cells;  // accumulated A
    for (int c : f.image_elements()) cells.push_back({c, c});

    M0Table m = build_m0(f);
    trace.n0 = m.side();

    for (int step = 1; step <= k && m.side() > 0; ++step) {
        // appearance counts; copies of one column share values, count rows once
        std::vector<int> count(q, 0);
        long long mass = 0;
        for (int r : m.rows) {
            std::set<int> vals;
            for (const auto& [c, copy] : m.cols) vals.insert(g.sub(r, c));
            mass += (long long)vals.size();
            for (int v : vals) ++count[v];
        }
        int mu = 0, v = -1;
        if (strategy == GreedyStrategy::Average) {
            mu = (int)((mass + divisor - 1) / divisor);
            for (int cand = 0; cand < q; ++cand)
                if (count[cand] >= mu) {
                    v = cand;
                    break;
                }
            if (v < 0) break;  // unreachable for nonempty M: the max attains the ceiled mean
        } else {
            int best = 0;
            for (int cand = 0; cand < q; ++cand)
                if (count[cand] > best) {
                    best = count[cand];
                    v = cand;
                }
            mu = best;
            if (v < 0) break;
        }

        // B: scan alive rows ascending; in a row take the copy with the
        // smallest second index among the copies holding v
        std::vector<std::pair<int, std::pair<int, int>>> picked;  // (row, col)
        for (int r : m.rows) {
            if ((int)picked.size() == mu) break;
            const std::pair<int, int>* best_col = nullptr;
            for (const auto& col : m.cols)
                if (g.sub(r, col.first) == v && (!best_col || col.second < best_col->second))
                    best_col = &col;
            if (best_col) picked.push_back({r, *best_col});
        }

        GreedyStep rec;
        rec.mu = mu;
        rec.v = v;
        for (const auto& [r, col] : picked) {
            rec.cells.push_back({r, col.first});
            cells.push_back({r, col.first});
            m.rows.erase(std::find(m.rows.begin(), m.rows.end(), r));
            m.cols.erase(std::find(m.cols.begin(), m.cols.end(), col));
        }
        rec.n = m.side();
        s.insert(v);
        trace.steps.push_back(std::move(rec));
    }

    // close with the positional diagonal of the leftover square table
    for (int i = 0; i < m.side(); ++i) {
        int r = m.rows[i];
        int c = m.cols[i].first;
        cells.push_back({r, c});
        s.insert(g.sub(r, c));
    }

    std::sort(cells.begin(), cells.end());
    trace.final_A.cells = std::move(cells);
    trace.final_S = {s.begin(), s.end()};
    return trace;
}

std::vector<long long> recurrence_nk(long long q, bool odd_variant, int upto_k) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (odd_variant && q % 2 == 0) throw std::invalid_argument("odd variant needs odd q");
    if (!odd_variant && q % 2 != 0) throw std::invalid_argument("even variant needs even q");
    long long divisor = odd_variant ? q - 1 : q;
    std::vector<long long> seq = {odd_variant ? (q - 1) / 2 : q / 2};
    while (seq.back() > 0 && (upto_k < 0 || (int)seq.size() <= upto_k)) {
        long long n = seq.back();
        seq.push_back(n - (n * n + divisor - 1) / divisor);
    }
    return seq;
}

long long two_to_one_bound(long long q, bool odd) {
    long long base = odd ? q - 1 : q;
    long long root = (long long)std::llround(std::floor(std::sqrt((double)base)));
    while (root * root > base) --root;
    while ((root + 1) * (root + 1) <= base) ++root;
    if (root * root == base) return 2 * root - 2;
    // ceil(2*sqrt(base)) = ceil(sqrt(4*base)), exact in integers
    long long c = 2 * root;
    while (c * c < 4 * base) ++c;
    return c - 1;
}

std::pair<int, int> generic_bounds(const FunctionTable& f) {
    return {f.uniformity(), f.size() - f.image_size() + 1};
}

}  // namespace pres
