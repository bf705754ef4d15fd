#pragma once

#include <cstdint>
#include <vector>

#include "pres/ip_model.hpp"
#include "pres/subtraction.hpp"

namespace pres {

/// Binary program for pres(f): row constraints (one cell per row), column
/// constraints (#preim cells per image column), and x_{r,c} <= y_{r-c} links;
/// objective minimizes the number of used values.
IpModel build_pres_ip(const FunctionTable& f);

struct MatchResult {
    bool feasible = false;
    AdmissibleSubtable witness;  // range G, value set within S (when feasible)
};

/// Decides whether an admissible subtable with range G and values inside S
/// exists, by maximum bipartite matching of rows against capacity-expanded
/// image columns. Deterministic scan order.
MatchResult feasibility_matching(const FunctionTable& f, const std::vector<int>& s);

struct PresOptions {
    int max_k = 0;      // 0: use q - V(f) + 1
    int workers = 1;
    bool symmetry = true;  // restrict to value sets containing 0
};

struct PresStats {
    std::uint64_t subsets_tested = 0;
    std::uint64_t matchings_run = 0;
    double elapsed_seconds = 0;
};

struct PresResult {
    bool found = false;
    int value = 0;  // pres(f); when !found, max_k+1 is a lower bound
    std::vector<int> witness_S;
    AdmissibleSubtable witness_A;
    std::vector<int> witness_g;  // images of one realization
    PresStats stats;
};

/// Exact pres(f): for k = u(f), u(f)+1, ... enumerates k-subsets in
/// colexicographic order (0 pinned into S under symmetry reduction), prunes
/// non-covers, and reports the first feasible subset at the minimal k. The
/// result does not depend on the worker count.
PresResult solve_pres_exact(const FunctionTable& f, PresOptions opts = {});

/// Definition-level oracle: enumerate all q^q functions g (q <= 5 only).
int pres_bruteforce_oracle(const FunctionTable& f);

VerifyReport verify_pres_solution(const FunctionTable& f, const Assignment& a);

/// x/y encoding of an admissible subtable for the pres model.
Assignment encode_pres_assignment(const FunctionTable& f, const AdmissibleSubtable& a);

}  // namespace pres
