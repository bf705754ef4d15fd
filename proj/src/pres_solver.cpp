#include "pres/pres_solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace pres {

IpModel build_pres_ip(const FunctionTable& f) {
    int q = f.size();
    SubtractionTable m = build_subtraction_table(f);
    IpModel model;
    for (int r = 0; r < q; ++r)
        for (int c : m.col_order)
            model.add_var("x_" + std::to_string(r) + "_" + std::to_string(c), VarKind::Binary, 0, 1);
    for (int v = 0; v < q; ++v) model.add_var("y_" + std::to_string(v), VarKind::Binary, 0, 1);

    auto xvar = [&](int r, int c) { return model.var("x_" + std::to_string(r) + "_" + std::to_string(c)); };
    auto yvar = [&](int v) { return model.var("y_" + std::to_string(v)); };

    for (int r = 0; r < q; ++r) {
        std::vector<LinTerm> terms;
        for (int c : m.col_order) terms.push_back({1, xvar(r, c)});
        model.add_con("row_" + std::to_string(r), std::move(terms), Rel::Eq, 1);
    }
    for (int c : m.col_order) {
        std::vector<LinTerm> terms;
        for (int r = 0; r < q; ++r) terms.push_back({1, xvar(r, c)});
        model.add_con("col_" + std::to_string(c), std::move(terms), Rel::Eq, f.preimage_count(c));
    }
    for (int r = 0; r < q; ++r)
        for (int c : m.col_order)
            model.add_con("link_" + std::to_string(r) + "_" + std::to_string(c),
                          {{1, xvar(r, c)}, {-1, yvar(f.group()->sub(r, c))}}, Rel::Le, 0);

    for (int v = 0; v < q; ++v) model.objective.push_back({1, yvar(v)});
    return model;
}

namespace {

// Matching workspace reused across subsets of one solve.
struct Matcher {
    int q = 0;
    std::vector<int> cols;                 // image elements, M_f column order
    std::vector<int> caps;                 // capacities per column
    std::vector<std::vector<int>> value;   // value[r][j] = sub(r, cols[j])
    std::vector<int> slot_col;             // slot -> column position
    std::vector<std::vector<int>> slots_of_col;

    explicit Matcher(const FunctionTable& f) {
        q = f.size();
        SubtractionTable m = build_subtraction_table(f);
        cols = m.col_order;
        for (int c : cols) caps.push_back(f.preimage_count(c));
        value.assign(q, std::vector<int>((int)cols.size()));
        for (int r = 0; r < q; ++r)
            for (size_t j = 0; j < cols.size(); ++j) value[r][j] = f.group()->sub(r, (int)cols[j]);
        slots_of_col.resize(cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (int s = 0; s < caps[j]; ++s) {
                slots_of_col[j].push_back((int)slot_col.size());
                slot_col.push_back((int)j);
            }
    }

    bool augment(int r, const std::vector<char>& in_s, std::vector<int>& owner,
                 std::vector<char>& seen) const {
        for (size_t j = 0; j < cols.size(); ++j) {
            if (!in_s[value[r][j]]) continue;
            for (int s : slots_of_col[j]) {
                if (seen[s]) continue;
                seen[s] = 1;
                if (owner[s] < 0 || augment(owner[s], in_s, owner, seen)) {
                    owner[s] = r;
                    return true;
                }
            }
        }
        return false;
    }

    MatchResult run(const std::vector<int>& s_elems) const {
        std::vector<char> in_s(q, 0);
        for (int v : s_elems) {
            if (v < 0 || v >= q) throw std::out_of_range("value set element out of range");
            in_s[v] = 1;
        }
        std::vector<int> owner(slot_col.size(), -1);
        std::vector<char> seen(slot_col.size());
        for (int r = 0; r < q; ++r) {
            std::fill(seen.begin(), seen.end(), 0);
            if (!augment(r, in_s, owner, seen)) return {};
        }
        MatchResult result;
        result.feasible = true;
        for (size_t s = 0; s < owner.size(); ++s)
            result.witness.cells.push_back({owner[s], cols[slot_col[s]]});
        std::sort(result.witness.cells.begin(), result.witness.cells.end());
        return result;
    }
};

// Per-value bitmask of rows whose M_f row contains that value.
struct CoverMasks {
    int words = 0;
    std::vector<std::uint64_t> mask;  // q consecutive blocks of `words`
    std::vector<std::uint64_t> full;

    CoverMasks(const FunctionTable& f, const Matcher& m) {
        int q = f.size();
        words = (q + 63) / 64;
        mask.assign((size_t)q * words, 0);
        for (int r = 0; r < q; ++r)
            for (size_t j = 0; j < m.cols.size(); ++j) {
                int v = m.value[r][j];
                mask[(size_t)v * words + r / 64] |= 1ull << (r % 64);
            }
        full.assign(words, 0);
        for (int r = 0; r < q; ++r) full[r / 64] |= 1ull << (r % 64);
    }

    bool covers(const std::vector<int>& s, std::vector<std::uint64_t>& scratch) const {
        std::fill(scratch.begin(), scratch.end(), 0);
        for (int v : s)
            for (int w = 0; w < words; ++w) scratch[w] |= mask[(size_t)v * words + w];
        return scratch == full;
    }
};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                             : a + b;
}

std::uint64_t sat_mul_div(std::uint64_t a, std::uint64_t num, std::uint64_t den) {
    // a * num / den without overflow for the binomial recurrence; saturates.
    std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    g = std::gcd(a, den);
    a /= g;
    den /= g;
    if (num != 0 && a > std::numeric_limits<std::uint64_t>::max() / num)
        return std::numeric_limits<std::uint64_t>::max();
    return a * num / den;
}

// C(n, k), saturating at uint64 max.
std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = sat_mul_div(r, (std::uint64_t)(n - k + i), (std::uint64_t)i);
    return r;
}

// k-subsets of {0..m-1} as ascending position vectors in colexicographic
// order: rank = sum C(a_i, i+1).
struct ColexStream {
    int m = 0, k = 0;

    std::uint64_t count() const { return binom(m, k); }

    std::vector<int> unrank(std::uint64_t rank) const {
        std::vector<int> a(k);
        for (int i = k; i >= 1; --i) {
            int c = i - 1;
            while (binom(c + 1, i) <= rank) ++c;
            a[i - 1] = c;
            rank -= binom(c, i);
        }
        return a;
    }

    bool next(std::vector<int>& a) const {
        for (int i = 0; i < k; ++i) {
            int limit = i + 1 < k ? a[i + 1] : m;
            if (a[i] + 1 < limit) {
                ++a[i];
                for (int j = 0; j < i; ++j) a[j] = j;
                return true;
            }
        }
        return false;
    }
};

struct ChunkHit {
    std::uint64_t rank = 0;
    std::vector<int> s;
    AdmissibleSubtable a;
};

}  // namespace

MatchResult feasibility_matching(const FunctionTable& f, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("value set must be nonempty");
    return Matcher(f).run(s);
}

PresResult solve_pres_exact(const FunctionTable& f, PresOptions opts) {
    auto t0 = std::chrono::steady_clock::now();
    int q = f.size();
    int u = f.uniformity();
    int max_k = opts.max_k > 0 ? opts.max_k : q - f.image_size() + 1;
    if (max_k < u) throw std::invalid_argument("max_k below the uniformity lower bound");
    int workers = std::max(1, opts.workers);

    Matcher matcher(f);
    CoverMasks masks(f, matcher);

    // ground set for the free part of S
    std::vector<int> ground;
    for (int v = opts.symmetry ? 1 : 0; v < q; ++v) ground.push_back(v);

    PresResult result;
    auto finish = [&](PresResult r) {
        r.stats.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };

    for (int k = std::max(1, u); k <= max_k; ++k) {
        int pick = opts.symmetry ? k - 1 : k;
        if (pick > (int)ground.size()) continue;
        ColexStream stream{(int)ground.size(), pick};
        std::uint64_t total = stream.count();
        const std::uint64_t chunk = 4096;

        auto scan_chunk = [&](std::uint64_t begin, std::uint64_t end, PresStats& stats,
                              ChunkHit& hit) {
            std::vector<int> a = stream.unrank(begin);
            std::vector<std::uint64_t> scratch(masks.words);
            std::vector<int> s;
            for (std::uint64_t rank = begin; rank < end; ++rank) {
                s.clear();
                if (opts.symmetry) s.push_back(0);
                for (int pos : a) s.push_back(ground[pos]);
                ++stats.subsets_tested;
                if (masks.covers(s, scratch)) {
                    ++stats.matchings_run;
                    MatchResult mr = matcher.run(s);
                    if (mr.feasible) {
                        std::sort(s.begin(), s.end());
                        hit = {rank, s, std::move(mr.witness)};
                        return true;
                    }
                }
                if (rank + 1 < end) stream.next(a);
            }
            return false;
        };

        std::uint64_t done = 0;
        while (done < total) {
            int batch = workers;
            std::vector<PresStats> stats(batch);
            std::vector<ChunkHit> hits(batch);
            std::vector<char> found(batch, 0);
            std::vector<std::thread> pool;
            for (int w = 0; w < batch; ++w) {
                std::uint64_t begin = done + (std::uint64_t)w * chunk;
                if (begin >= total) break;
                std::uint64_t end = std::min(total, begin + chunk);
                if (workers == 1) {
                    found[w] = scan_chunk(begin, end, stats[w], hits[w]);
                } else {
                    pool.emplace_back(
                        [&, w, begin, end] { found[w] = scan_chunk(begin, end, stats[w], hits[w]); });
                }
            }
            for (auto& th : pool) th.join();
            const ChunkHit* best = nullptr;
            for (int w = 0; w < batch; ++w) {
                result.stats.subsets_tested = sat_add(result.stats.subsets_tested, stats[w].subsets_tested);
                result.stats.matchings_run = sat_add(result.stats.matchings_run, stats[w].matchings_run);
                if (found[w] && (!best || hits[w].rank < best->rank)) best = &hits[w];
            }
            if (best) {
                result.found = true;
                result.value = k;
                result.witness_S = best->s;
                result.witness_A = best->a;
                result.witness_g = realize_function(result.witness_A, f, 0).images();
                return finish(std::move(result));
            }
            done += (std::uint64_t)workers * chunk;
        }
    }
    result.found = false;
    result.value = max_k + 1;  // lower bound
    return finish(std::move(result));
}

int pres_bruteforce_oracle(const FunctionTable& f) {
    int q = f.size();
    if (q > 5) throw std::invalid_argument("brute-force oracle limited to q <= 5");
    const Group& g = *f.group();
    std::vector<int> gi(q, 0);
    int best = q + 1;
    while (true) {
        std::vector<char> hit(q, 0);
        bool perm = true;
        for (int x = 0; x < q && perm; ++x) {
            int y = g.add(gi[x], f(x));
            perm = !hit[y];
            hit[y] = 1;
        }
        if (perm) {
            std::vector<char> used(q, 0);
            int v = 0;
            for (int x = 0; x < q; ++x)
                if (!used[gi[x]]) {
                    used[gi[x]] = 1;
                    ++v;
                }
            best = std::min(best, v);
        }
        int pos = q - 1;
        while (pos >= 0 && gi[pos] == q - 1) gi[pos--] = 0;
        if (pos < 0) break;
        ++gi[pos];
    }
    return best;
}

VerifyReport verify_pres_solution(const FunctionTable& f, const Assignment& a) {
    return check_assignment(build_pres_ip(f), a);
}

Assignment encode_pres_assignment(const FunctionTable& f, const AdmissibleSubtable& sub) {
    if (!check_admissible(sub.cells, f)) throw std::invalid_argument("subtable is not admissible");
    Assignment a;
    int q = f.size();
    for (int r = 0; r < q; ++r)
        for (int c : f.image_elements()) a["x_" + std::to_string(r) + "_" + std::to_string(c)] = 0;
    for (int v = 0; v < q; ++v) a["y_" + std::to_string(v)] = 0;
    for (auto [r, c] : sub.cells) {
        a["x_" + std::to_string(r) + "_" + std::to_string(c)] = 1;
        a["y_" + std::to_string(f.group()->sub(r, c))] = 1;
    }
    return a;
}

}  // namespace pres
