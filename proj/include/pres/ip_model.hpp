#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace pres {

enum class VarKind { Binary, Integer };
enum class Rel { Eq, Le, Ge };

struct IpVariable {
    std::string name;
    VarKind kind = VarKind::Binary;
    long long lower = 0;
    long long upper = 1;
};

struct LinTerm {
    long long coef;
    int var;  // index into IpModel::vars
};

struct IpConstraint {
    std::string name;
    std::vector<LinTerm> terms;
    Rel rel = Rel::Eq;
    long long rhs = 0;
};

/// Solver-neutral integer program: minimize objective subject to linear
/// constraints over binary/integer variables.
struct IpModel {
    std::vector<IpVariable> vars;
    std::vector<IpConstraint> cons;
    std::vector<LinTerm> objective;  // sense is always minimize
    std::unordered_map<std::string, int> var_index;

    int add_var(std::string name, VarKind kind, long long lower, long long upper);
    void add_con(std::string name, std::vector<LinTerm> terms, Rel rel, long long rhs);
    int var(const std::string& name) const;
};

/// Variable assignment by name, as read from {"vars":{...}} files.
using Assignment = std::map<std::string, long long>;

struct Violation {
    std::string constraint;
    long long lhs = 0;
    Rel rel = Rel::Eq;
    long long rhs = 0;
};

struct VerifyReport {
    std::vector<Violation> violations;       // violated model constraints
    std::vector<std::string> inconsistencies;  // failed independent cross-checks
    long long objective = 0;                 // recomputed from the assignment
    bool ok() const { return violations.empty() && inconsistencies.empty(); }
};

/// Evaluates every constraint; throws std::invalid_argument when the
/// assignment misses a model variable or violates a variable bound.
VerifyReport check_assignment(const IpModel& model, const Assignment& a);

std::string rel_string(Rel r);

/// Deterministic LP-format text: Minimize / Subject To / Bounds / Binary /
/// General / End. Identical models produce identical bytes.
std::string lp_string(const IpModel& model);
void export_lp(const IpModel& model, const std::string& path);

}  // namespace pres
