#include "pres/du.hpp"

#include <algorithm>
#include <stdexcept>

namespace pres {

namespace {

std::string xname(int r, int c) { return "x_" + std::to_string(r) + "_" + std::to_string(c); }
std::string zname(int a, int b, int r, int c) {
    return "z_" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(r) + "_" +
           std::to_string(c);
}
std::string dname(int a, int b) { return "delta_" + std::to_string(a) + "_" + std::to_string(b); }

}  // namespace

IpModel build_du_ip(const GroupPtr& group, const FunctionTable* f, bool with_vg) {
    if (!group) throw std::invalid_argument("null group");
    int q = group->order();
    if (q < 2) throw std::invalid_argument("group order must be >= 2");
    if (f && f->group() != group) throw std::invalid_argument("f lives on a different group");

    IpModel model;
    for (int r = 0; r < q; ++r)
        for (int c = 0; c < q; ++c) model.add_var(xname(r, c), VarKind::Binary, 0, 1);
    for (int a = 1; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int r = 0; r < q; ++r)
                for (int c = 0; c < q; ++c) model.add_var(zname(a, b, r, c), VarKind::Binary, 0, 1);
    for (int a = 1; a < q; ++a)
        for (int b = 0; b < q; ++b) model.add_var(dname(a, b), VarKind::Integer, 0, q);
    int du = model.add_var("DU", VarKind::Integer, 0, q);

    for (int r = 0; r < q; ++r) {
        std::vector<LinTerm> terms;
        for (int c = 0; c < q; ++c) terms.push_back({1, model.var(xname(r, c))});
        model.add_con("row_" + std::to_string(r), std::move(terms), Rel::Eq, 1);
    }
    for (int c = 0; c < q; ++c) {
        std::vector<LinTerm> terms;
        for (int r = 0; r < q; ++r) terms.push_back({1, model.var(xname(r, c))});
        model.add_con("col_" + std::to_string(c), std::move(terms), Rel::Eq, 1);
    }
    for (int a = 1; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::vector<LinTerm> terms;
            for (int r = 0; r < q; ++r)
                for (int c = 0; c < q; ++c) terms.push_back({1, model.var(zname(a, b, r, c))});
            terms.push_back({-1, model.var(dname(a, b))});
            model.add_con("deltasum_" + std::to_string(a) + "_" + std::to_string(b), std::move(terms),
                          Rel::Eq, 0);
        }
    for (int a = 1; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int r = 0; r < q; ++r)
                for (int c = 0; c < q; ++c) {
                    int xs = model.var(xname(group->add(r, b), group->add(c, a)));
                    int x = model.var(xname(r, c));
                    int z = model.var(zname(a, b, r, c));
                    std::string tag = std::to_string(a) + "_" + std::to_string(b) + "_" +
                                      std::to_string(r) + "_" + std::to_string(c);
                    model.add_con("zlo_" + tag, {{2, z}, {-1, xs}, {-1, x}}, Rel::Le, 0);
                    model.add_con("zhi_" + tag, {{1, xs}, {1, x}, {-1, z}}, Rel::Le, 1);
                }
    for (int a = 1; a < q; ++a)
        for (int b = 0; b < q; ++b)
            model.add_con("ducap_" + std::to_string(a) + "_" + std::to_string(b),
                          {{1, model.var(dname(a, b))}, {-1, du}}, Rel::Le, 0);

    if (with_vg) {
        for (int v = 0; v < q; ++v) model.add_var("y_" + std::to_string(v), VarKind::Binary, 0, 1);
        int vg = model.add_var("Vg", VarKind::Integer, 0, q);
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c) {
                int fc = f ? (*f)(c) : 0;
                int v = group->sub(r, fc);
                model.add_con("link_" + std::to_string(r) + "_" + std::to_string(c),
                              {{1, model.var(xname(r, c))}, {-1, model.var("y_" + std::to_string(v))}},
                              Rel::Le, 0);
            }
        std::vector<LinTerm> terms;
        for (int v = 0; v < q; ++v) terms.push_back({1, model.var("y_" + std::to_string(v))});
        terms.push_back({-1, vg});
        model.add_con("vgsum", std::move(terms), Rel::Eq, 0);
    }

    model.objective.push_back({1, du});
    return model;
}

Assignment encode_du_assignment(const GroupPtr& group, const FunctionTable* f,
                                const std::vector<int>& perm, bool with_vg) {
    int q = group->order();
    if ((int)perm.size() != q) throw std::invalid_argument("permutation must have q images");
    Assignment a;
    for (int r = 0; r < q; ++r)
        for (int c = 0; c < q; ++c) a[xname(r, c)] = perm[c] == r ? 1 : 0;
    int du = 0;
    for (int d = 1; d < q; ++d)
        for (int b = 0; b < q; ++b) {
            long long count = 0;
            for (int r = 0; r < q; ++r)
                for (int c = 0; c < q; ++c) {
                    int z = (perm[c] == r && perm[group->add(c, d)] == group->add(r, b)) ? 1 : 0;
                    a[zname(d, b, r, c)] = z;
                    count += z;
                }
            a[dname(d, b)] = count;
            du = std::max(du, (int)count);
        }
    a["DU"] = du;
    if (with_vg) {
        std::vector<char> used(q, 0);
        for (int c = 0; c < q; ++c) used[group->sub(perm[c], f ? (*f)(c) : 0)] = 1;
        long long vg = 0;
        for (int v = 0; v < q; ++v) {
            a["y_" + std::to_string(v)] = used[v];
            vg += used[v];
        }
        a["Vg"] = vg;
    }
    return a;
}

VerifyReport verify_du_solution(const GroupPtr& group, const FunctionTable* f, const Assignment& a,
                                bool with_vg) {
    return verify_du_solution(build_du_ip(group, f, with_vg), group, a);
}

VerifyReport verify_du_solution(const IpModel& model, const GroupPtr& group, const Assignment& a) {
    VerifyReport report = check_assignment(model, a);

    int q = group->order();
    std::vector<int> perm(q, -1);
    bool decodable = true;
    for (int c = 0; c < q && decodable; ++c) {
        for (int r = 0; r < q; ++r)
            if (a.at(xname(r, c)) != 0) {
                if (perm[c] >= 0) decodable = false;
                perm[c] = r;
            }
        if (perm[c] < 0) decodable = false;
    }
    std::vector<char> hit(q, 0);
    for (int c = 0; c < q && decodable; ++c) {
        if (hit[perm[c]]) decodable = false;
        hit[perm[c]] = 1;
    }
    if (!decodable) {
        report.inconsistencies.push_back("x block does not decode to a permutation matrix");
        return report;
    }
    // matches the z-product semantics; for abelian groups this is exactly
    // #{c : F(c+a) - F(c) = b}
    int max_delta = 0;
    for (int d = 1; d < q; ++d)
        for (int b = 0; b < q; ++b) {
            long long count = 0;
            for (int c = 0; c < q; ++c)
                if (perm[group->add(c, d)] == group->add(perm[c], b)) ++count;
            max_delta = std::max(max_delta, (int)count);
            if (a.at(dname(d, b)) != count)
                report.inconsistencies.push_back(dname(d, b) + " != recomputed count " +
                                                 std::to_string(count));
        }
    if (a.at("DU") != max_delta)
        report.inconsistencies.push_back("DU != recomputed max delta " + std::to_string(max_delta));
    return report;
}

DuSearchResult min_du_permutation_search(const GroupPtr& group, std::uint64_t node_budget) {
    if (!group) throw std::invalid_argument("null group");
    int q = group->order();
    // ldiff[x][x2] is the direction d with x + d = x2
    std::vector<std::vector<int>> ldiff(q, std::vector<int>(q)), sub(q, std::vector<int>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            ldiff[x][y] = group->add(group->neg(x), y);
            sub[x][y] = group->sub(x, y);
        }

    DuSearchResult result;
    result.complete = true;
    if (q == 1) {
        result.best_du = 0;
        result.witness = {0};
        return result;
    }

    int best = q + 1;
    std::vector<int> witness;
    std::vector<int> perm(q, -1);
    std::vector<char> used(q, 0);
    std::vector<std::vector<int>> count(q, std::vector<int>(q, 0));  // [a][b]
    bool out_of_budget = false;

    // F and F+const share all difference counts, so F(0)=0 loses no optima.
    perm[0] = 0;
    used[0] = 1;

    auto dfs = [&](auto&& self, int x) -> void {
        if (out_of_budget) return;
        if (x == q) {
            int du = 0;
            for (int d = 1; d < q; ++d)
                for (int b = 0; b < q; ++b) du = std::max(du, count[d][b]);
            if (du < best) {
                best = du;
                witness = perm;
            }
            return;
        }
        for (int y = 0; y < q; ++y) {
            if (used[y]) continue;
            if (node_budget && result.nodes >= node_budget) {
                out_of_budget = true;
                return;
            }
            ++result.nodes;
            // incremental difference counts against already placed points
            std::vector<std::pair<int, int>> bumped;
            bool ok = true;
            for (int x2 = 0; x2 < x && ok; ++x2) {
                int d1 = ldiff[x][x2], b1 = sub[perm[x2]][y];
                int d2 = ldiff[x2][x], b2 = sub[y][perm[x2]];
                for (auto [d, b] : {std::pair{d1, b1}, std::pair{d2, b2}}) {
                    if (++count[d][b] >= best) ok = false;
                    bumped.push_back({d, b});
                    if (!ok) break;
                }
            }
            if (ok) {
                perm[x] = y;
                used[y] = 1;
                self(self, x + 1);
                perm[x] = -1;
                used[y] = 0;
            }
            for (auto [d, b] : bumped) --count[d][b];
        }
    };
    dfs(dfs, 1);

    result.best_du = best;
    result.witness = witness;
    result.complete = !out_of_budget;
    return result;
}

ProductBoundReport du_product_bound_check(const FunctionTable& f, const FunctionTable& g) {
    if (f.group() != g.group()) throw std::invalid_argument("functions live on different groups");
    if (!f.group()->abelian()) throw std::invalid_argument("product bound is stated for abelian groups");
    ProductBoundReport report;
    report.delta_f = f.differential_uniformity();
    report.delta_gf = add_functions(g, f).differential_uniformity();
    report.vg = g.image_size();
    report.rhs = (long long)report.delta_f * ((long long)report.vg * report.vg - report.vg + 1);
    report.holds = report.delta_gf <= report.rhs;
    return report;
}

}  // namespace pres
