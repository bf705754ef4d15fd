#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pres {

/// Arithmetic context for GF(p^e). Elements are dense indices obtained by
/// evaluating the coefficient vector base p, constant term least significant
/// (index 0 is the zero element, index 1 the one element).
struct FieldContext {
    int p = 0;                 // characteristic, prime
    int e = 0;                 // extension degree
    int q = 0;                 // p^e
    std::vector<int> modulus;  // monic irreducible, constant term first, length e+1

    static FieldContext make(int p, int e, std::vector<int> modulus = {});

    /// Lexicographically smallest monic irreducible of degree e, coefficient
    /// tuples compared constant-term first.
    static std::vector<int> default_modulus(int p, int e);
    static bool is_irreducible(const std::vector<int>& poly, int p);

    std::vector<int> to_vec(int a) const;
    int from_vec(const std::vector<int>& v) const;

    int add(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;

    /// a^d with 0^d = 0 for d >= 1; 0^0 is 1 only when zero_pow_zero_one is set.
    int pow(int a, long long d, bool zero_pow_zero_one = false) const;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Finite group with elements 0..q-1 and identity 0. Immutable after
/// construction; safe to share across threads.
class Group {
public:
    enum class Kind { Cyclic, Product, FieldAdditive, Cayley };

    int order() const { return q_; }
    Kind kind() const { return kind_; }
    bool abelian() const { return abelian_; }
    const std::string& spec() const { return spec_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }

    /// Non-null only for field-additive groups.
    const FieldContext* field() const { return field_ ? &*field_ : nullptr; }

    static GroupPtr cyclic(int n);
    static GroupPtr product(GroupPtr a, GroupPtr b);
    static GroupPtr field_additive(FieldContext fc);
    static GroupPtr cayley(std::vector<std::vector<int>> table, std::string spec = "cayley:<inline>");

    /// Grammar: zn:<n> | gf:<p>^<e> | gf:<q> | gf:<q>:poly=<c0,...,ce>
    ///          | prod:(<spec>)x(<spec>) | cayley:<path>
    static GroupPtr parse(const std::string& spec);

private:
    Group() = default;
    void check_element(int a) const;
    void verify() const;  // identity/inverse always, associativity exhaustive for q <= 64

    Kind kind_ = Kind::Cyclic;
    int q_ = 0;
    bool abelian_ = false;
    std::string spec_;

    int n_ = 0;                             // cyclic
    GroupPtr left_, right_;                 // product
    std::optional<FieldContext> field_;     // field-additive
    std::vector<std::vector<int>> table_;   // cayley
    std::vector<int> inv_;                  // cayley inverses
};

}  // namespace pres
