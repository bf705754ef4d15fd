#include "pres/ip_model.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pres {

int IpModel::add_var(std::string name, VarKind kind, long long lower, long long upper) {
    int idx = (int)vars.size();
    var_index.emplace(name, idx);
    vars.push_back({std::move(name), kind, lower, upper});
    return idx;
}

void IpModel::add_con(std::string name, std::vector<LinTerm> terms, Rel rel, long long rhs) {
    for (const LinTerm& t : terms)
        if (t.var < 0 || t.var >= (int)vars.size())
            throw std::invalid_argument("constraint references undeclared variable");
    cons.push_back({std::move(name), std::move(terms), rel, rhs});
}

int IpModel::var(const std::string& name) const {
    auto it = var_index.find(name);
    if (it == var_index.end()) throw std::invalid_argument("unknown variable: " + name);
    return it->second;
}

std::string rel_string(Rel r) {
    switch (r) {
        case Rel::Eq: return "=";
        case Rel::Le: return "<=";
        case Rel::Ge: return ">=";
    }
    return "=";
}

VerifyReport check_assignment(const IpModel& model, const Assignment& a) {
    std::vector<long long> value(model.vars.size());
    for (size_t i = 0; i < model.vars.size(); ++i) {
        auto it = a.find(model.vars[i].name);
        if (it == a.end()) throw std::invalid_argument("assignment misses variable " + model.vars[i].name);
        value[i] = it->second;
        if (value[i] < model.vars[i].lower || value[i] > model.vars[i].upper)
            throw std::invalid_argument("value of " + model.vars[i].name + " violates its bounds");
    }
    VerifyReport report;
    for (const IpConstraint& c : model.cons) {
        long long lhs = 0;
        for (const LinTerm& t : c.terms) lhs += t.coef * value[t.var];
        bool sat = c.rel == Rel::Eq ? lhs == c.rhs : c.rel == Rel::Le ? lhs <= c.rhs : lhs >= c.rhs;
        if (!sat) report.violations.push_back({c.name, lhs, c.rel, c.rhs});
    }
    for (const LinTerm& t : model.objective) report.objective += t.coef * value[t.var];
    return report;
}

namespace {

void append_terms(std::ostream& os, const std::vector<LinTerm>& terms, const IpModel& model) {
    bool first = true;
    for (const LinTerm& t : terms) {
        long long c = t.coef;
        if (first) {
            if (c < 0) os << "- ";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long mag = c < 0 ? -c : c;
        if (mag != 1) os << mag << " ";
        os << model.vars[t.var].name;
    }
}

}  // namespace

std::string lp_string(const IpModel& model) {
    if (model.vars.empty()) throw std::invalid_argument("model has no variables");
    std::ostringstream os;
    os << "Minimize\n obj: ";
    append_terms(os, model.objective, model);
    os << "\nSubject To\n";
    for (const IpConstraint& c : model.cons) {
        os << " " << c.name << ": ";
        append_terms(os, c.terms, model);
        os << " " << rel_string(c.rel) << " " << c.rhs << "\n";
    }
    bool have_bounds = false;
    for (const IpVariable& v : model.vars) have_bounds |= v.kind == VarKind::Integer;
    if (have_bounds) {
        os << "Bounds\n";
        for (const IpVariable& v : model.vars)
            if (v.kind == VarKind::Integer) os << " " << v.lower << " <= " << v.name << " <= " << v.upper << "\n";
    }
    bool have_binary = false;
    for (const IpVariable& v : model.vars) have_binary |= v.kind == VarKind::Binary;
    if (have_binary) {
        os << "Binary\n";
        for (const IpVariable& v : model.vars)
            if (v.kind == VarKind::Binary) os << " " << v.name << "\n";
    }
    if (have_bounds) {
        os << "General\n";
        for (const IpVariable& v : model.vars)
            if (v.kind == VarKind::Integer) os << " " << v.name << "\n";
    }
    os << "End\n";
    return os.str();
}

void export_lp(const IpModel& model, const std::string& path) {
    std::string text = lp_string(model);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write LP file: " + path);
    out << text;
    if (!out) throw std::runtime_error("error while writing LP file: " + path);
}

}  // namespace pres
