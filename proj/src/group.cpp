#include "pres/group.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pres {

namespace {

constexpr int kMaxOrder = 1 << 16;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// polynomial helpers over F_p, coefficient vectors constant-term first
int poly_deg(const std::vector<int>& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// remainder of a mod b, b monic
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = poly_deg(b);
    for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
        int c = a[da];
        if (c != 0) {
            for (int j = 0; j <= db; ++j) {
                a[da - db + j] = ((a[da - db + j] - c * b[j]) % p + p * p) % p;
            }
        } else {
            a[da] = 0;
        }
    }
    return a;
}

}  // namespace

FieldContext FieldContext::make(int p, int e, std::vector<int> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("field degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
    }
    FieldContext fc;
    fc.p = p;
    fc.e = e;
    fc.q = (int)q;
    if (modulus.empty()) {
        fc.modulus = default_modulus(p, e);
    } else {
        if ((int)modulus.size() != e + 1)
            throw std::invalid_argument("modulus must list e+1 coefficients, constant term first");
        for (int& c : modulus) c = ((c % p) + p) % p;
        if (modulus[e] != 1) throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus polynomial is reducible");
        fc.modulus = std::move(modulus);
    }
    return fc;
}

bool FieldContext::is_irreducible(const std::vector<int>& poly, int p) {
    int e = poly_deg(poly);
    if (e < 1) return false;
    if (e == 1) return true;
    // trial division by every monic polynomial of degree 1..e/2
    for (int d = 1; 2 * d <= e; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            std::vector<int> div(d + 1, 0);
            long long tt = t;
            for (int i = 0; i < d; ++i) {
                div[i] = (int)(tt % p);
                tt /= p;
            }
            div[d] = 1;
            if (poly_deg(poly_mod(poly, div, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<int> FieldContext::default_modulus(int p, int e) {
    if (e == 1) return {0, 1};  // x: F_p[x]/(x) with index = constant term
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
        std::vector<int> cand(e + 1, 0);
        long long tt = t;
        for (int i = 0; i < e; ++i) {
            cand[i] = (int)(tt % p);
            tt /= p;
        }
        cand[e] = 1;
        if (is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<int> FieldContext::to_vec(int a) const {
    std::vector<int> v(e);
    for (int i = 0; i < e; ++i) {
        v[i] = a % p;
        a /= p;
    }
    return v;
}

int FieldContext::from_vec(const std::vector<int>& v) const {
    int idx = 0;
    for (int i = (int)v.size() - 1; i >= 0; --i) idx = idx * p + (((v[i] % p) + p) % p);
    return idx;
}

int FieldContext::add(int a, int b) const {
    int idx = 0, mul = 1;
    for (int i = 0; i < e; ++i) {
        idx += ((a % p) + (b % p)) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return idx;
}

int FieldContext::neg(int a) const {
    int idx = 0, mul = 1;
    for (int i = 0; i < e; ++i) {
        idx += (p - a % p) % p * mul;
        a /= p;
        mul *= p;
    }
    return idx;
}

int FieldContext::mul(int a, int b) const {
    std::vector<int> va = to_vec(a), vb = to_vec(b);
    std::vector<int> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p;
    prod = poly_mod(std::move(prod), modulus, p);
    prod.resize(e);
    return from_vec(prod);
}

int FieldContext::pow(int a, long long d, bool zero_pow_zero_one) const {
    if (d < 0) throw std::invalid_argument("negative exponent");
    if (a == 0 && d == 0) return zero_pow_zero_one ? 1 : 0;
    int result = 1;
    int base = a;
    while (d > 0) {
        if (d & 1) result = mul(result, base);
        base = mul(base, base);
        d >>= 1;
    }
    return result;
}

void Group::check_element(int a) const {
    if (a < 0 || a >= q_) throw std::out_of_range("element index out of range: " + std::to_string(a));
}

int Group::add(int a, int b) const {
    check_element(a);
    check_element(b);
    switch (kind_) {
        case Kind::Cyclic:
            return (a + b) % n_;
        case Kind::Product: {
            int q2 = right_->order();
            return left_->add(a / q2, b / q2) * q2 + right_->add(a % q2, b % q2);
        }
        case Kind::FieldAdditive:
            return field_->add(a, b);
        case Kind::Cayley:
            return table_[a][b];
    }
    return 0;  // unreachable
}

int Group::neg(int a) const {
    check_element(a);
    switch (kind_) {
        case Kind::Cyclic:
            return (n_ - a) % n_;
        case Kind::Product: {
            int q2 = right_->order();
            return left_->neg(a / q2) * q2 + right_->neg(a % q2);
        }
        case Kind::FieldAdditive:
            return field_->neg(a);
        case Kind::Cayley:
            return inv_[a];
    }
    return 0;  // unreachable
}

void Group::verify() const {
    for (int a = 0; a < q_; ++a) {
        if (add(0, a) != a || add(a, 0) != a) throw std::invalid_argument("index 0 is not an identity");
        int na = neg(a);
        if (add(a, na) != 0 || add(na, a) != 0) throw std::invalid_argument("inverse check failed");
        if (neg(na) != a) throw std::invalid_argument("inverse is not an involution");
    }
    if (q_ <= 64) {
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b)
                for (int c = 0; c < q_; ++c)
                    if (add(add(a, b), c) != add(a, add(b, c)))
                        throw std::invalid_argument("operation is not associative");
    } else {
        std::mt19937 rng(0xa55a);
        std::uniform_int_distribution<int> pick(0, q_ - 1);
        for (int t = 0; t < 20000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (add(add(a, b), c) != add(a, add(b, c)))
                throw std::invalid_argument("operation is not associative");
        }
    }
}

GroupPtr Group::cyclic(int n) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("cyclic order out of range");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::Cyclic;
    g->q_ = g->n_ = n;
    g->abelian_ = true;
    g->spec_ = "zn:" + std::to_string(n);
    g->verify();
    return g;
}

GroupPtr Group::product(GroupPtr a, GroupPtr b) {
    if (!a || !b) throw std::invalid_argument("null factor group");
    long long q = (long long)a->order() * b->order();
    if (q > kMaxOrder) throw std::invalid_argument("product order exceeds 2^16");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::Product;
    g->q_ = (int)q;
    g->abelian_ = a->abelian() && b->abelian();
    g->left_ = std::move(a);
    g->right_ = std::move(b);
    g->spec_ = "prod:(" + g->left_->spec() + ")x(" + g->right_->spec() + ")";
    g->verify();
    return g;
}

GroupPtr Group::field_additive(FieldContext fc) {
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::FieldAdditive;
    g->q_ = fc.q;
    g->abelian_ = true;
    std::ostringstream os;
    os << "gf:" << fc.q << ":poly=";
    for (size_t i = 0; i < fc.modulus.size(); ++i) os << (i ? "," : "") << fc.modulus[i];
    g->spec_ = os.str();
    g->field_ = std::move(fc);
    g->verify();
    return g;
}

GroupPtr Group::cayley(std::vector<std::vector<int>> table, std::string spec) {
    int q = (int)table.size();
    if (q < 1 || q > 4096) throw std::invalid_argument("cayley order out of range (1..4096)");
    for (const auto& row : table)
        if ((int)row.size() != q) throw std::invalid_argument("cayley table is not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 0 || v >= q) throw std::invalid_argument("cayley entry out of range");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::Cayley;
    g->q_ = q;
    g->spec_ = std::move(spec);
    g->table_ = std::move(table);
    // rows and columns must be permutations, identity at 0, two-sided inverses
    g->inv_.assign(q, -1);
    for (int a = 0; a < q; ++a) {
        std::vector<bool> seen_row(q, false), seen_col(q, false);
        for (int b = 0; b < q; ++b) {
            if (seen_row[g->table_[a][b]]) throw std::invalid_argument("cayley row is not a permutation");
            seen_row[g->table_[a][b]] = true;
            if (seen_col[g->table_[b][a]]) throw std::invalid_argument("cayley column is not a permutation");
            seen_col[g->table_[b][a]] = true;
            if (g->table_[a][b] == 0 && g->table_[b][a] == 0) g->inv_[a] = b;
        }
    }
    for (int a = 0; a < q; ++a)
        if (g->inv_[a] < 0) throw std::invalid_argument("cayley table lacks a two-sided inverse");
    g->abelian_ = true;
    for (int a = 0; a < q && g->abelian_; ++a)
        for (int b = a + 1; b < q; ++b)
            if (g->table_[a][b] != g->table_[b][a]) {
                g->abelian_ = false;
                break;
            }
    g->verify();
    return g;
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in integer list");
        out.push_back(std::stoi(tok));
    }
    return out;
}

GroupPtr parse_gf(const std::string& body) {
    // body is everything after "gf:": "<p>^<e>" | "<q>" | "<q>:poly=..."
    std::string head = body;
    std::vector<int> poly;
    if (auto pos = body.find(":poly="); pos != std::string::npos) {
        head = body.substr(0, pos);
        poly = parse_int_list(body.substr(pos + 6));
    }
    int p = 0, e = 0;
    if (auto caret = head.find('^'); caret != std::string::npos) {
        p = std::stoi(head.substr(0, caret));
        e = std::stoi(head.substr(caret + 1));
    } else {
        int q = std::stoi(head);
        if (q < 2) throw std::invalid_argument("field order must be >= 2");
        p = 2;
        while (q % p != 0) ++p;
        e = 0;
        int t = q;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        if (t != 1) throw std::invalid_argument("field order is not a prime power: " + head);
    }
    return Group::field_additive(FieldContext::make(p, e, std::move(poly)));
}

GroupPtr parse_prod(const std::string& body) {
    // body: (<spec>)x(<spec>)
    if (body.empty() || body.front() != '(') throw std::invalid_argument("malformed product spec");
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        else if (body[i] == ')') {
            --depth;
            if (depth == 0) {
                split = i;
                break;
            }
        }
    }
    if (split == std::string::npos || split + 2 >= body.size() || body[split + 1] != 'x' ||
        body[split + 2] != '(' || body.back() != ')')
        throw std::invalid_argument("malformed product spec");
    std::string a = body.substr(1, split - 1);
    std::string b = body.substr(split + 3, body.size() - split - 4);
    return Group::product(Group::parse(a), Group::parse(b));
}

GroupPtr parse_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cayley file: " + path);
    nlohmann::json j;
    in >> j;
    int order = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if ((int)table.size() != order) throw std::invalid_argument("cayley table size does not match order");
    return Group::cayley(std::move(table), "cayley:" + path);
}

}  // namespace

GroupPtr Group::parse(const std::string& spec) {
    try {
        if (spec.rfind("zn:", 0) == 0) return cyclic(std::stoi(spec.substr(3)));
        if (spec.rfind("gf:", 0) == 0) return parse_gf(spec.substr(3));
        if (spec.rfind("prod:", 0) == 0) return parse_prod(spec.substr(5));
        if (spec.rfind("cayley:", 0) == 0) return parse_cayley_file(spec.substr(7));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed group spec '" + spec + "': " + e.what());
    }
    throw std::invalid_argument("unknown group spec: " + spec);
}

}  // namespace pres
