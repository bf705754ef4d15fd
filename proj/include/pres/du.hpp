#pragma once

#include <cstdint>
#include <vector>

#include "pres/ip_model.hpp"
#include "pres/subtraction.hpp"

namespace pres {

/// Integer program over the decompressed table that selects a permutation
/// matrix x, linearizes the difference-count products into z variables, and
/// minimizes DU = max delta_{a,b}. A null f means the zero function. When
/// with_vg is set, y variables additionally count the image size of g = F - f.
IpModel build_du_ip(const GroupPtr& group, const FunctionTable* f = nullptr, bool with_vg = false);

/// Feasibility of every model constraint plus independent cross-checks: the x
/// block must decode to a permutation F, each delta_{a,b} must equal the
/// recomputed count of F(c+a)-F(c)=b, and DU must equal their maximum.
VerifyReport verify_du_solution(const GroupPtr& group, const FunctionTable* f, const Assignment& a,
                                bool with_vg = false);

/// Same checks against an already-built model (mutation sweeps reuse one).
VerifyReport verify_du_solution(const IpModel& model, const GroupPtr& group, const Assignment& a);

/// Faithful assignment for a permutation F (x, z products, deltas, DU).
Assignment encode_du_assignment(const GroupPtr& group, const FunctionTable* f,
                                const std::vector<int>& perm, bool with_vg = false);

struct DuSearchResult {
    int best_du = 0;
    std::vector<int> witness;  // permutation images; empty if nothing completed
    std::uint64_t nodes = 0;
    bool complete = false;
};

/// Exact minimum differential uniformity over all permutations of the group,
/// by backtracking over images with incremental difference counts and
/// branch-and-bound pruning. node_budget 0 means unlimited.
DuSearchResult min_du_permutation_search(const GroupPtr& group, std::uint64_t node_budget = 0);

struct ProductBoundReport {
    int delta_f = 0;
    int delta_gf = 0;
    int vg = 0;
    long long rhs = 0;
    bool holds = false;
};

/// delta_{g+f} <= delta_f * (V(g)^2 - V(g) + 1); abelian groups only.
ProductBoundReport du_product_bound_check(const FunctionTable& f, const FunctionTable& g);

}  // namespace pres
