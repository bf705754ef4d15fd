#include "pres/function_table.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pres {

FunctionTable::FunctionTable(GroupPtr group, std::vector<int> images)
    : group_(std::move(group)), images_(std::move(images)) {
    if (!group_) throw std::invalid_argument("null group");
    int q = group_->order();
    if ((int)images_.size() != q) throw std::invalid_argument("image table must have exactly q entries");
    preimages_.assign(q, {});
    for (int x = 0; x < q; ++x) {
        int b = images_[x];
        if (b < 0 || b >= q) throw std::invalid_argument("image value out of range");
        preimages_[b].push_back(x);
    }
    int u = 0;
    for (int b = 0; b < q; ++b) {
        if (!preimages_[b].empty()) image_elements_.push_back(b);
        u = std::max(u, (int)preimages_[b].size());
    }
    partition_.u = u;
    partition_.V = (int)image_elements_.size();
    partition_.sets.assign(u + 1, {});
    for (int b = 0; b < q; ++b) partition_.sets[preimages_[b].size()].push_back(b);
}

const std::vector<int>& FunctionTable::preimages(int b) const {
    if (b < 0 || b >= size()) throw std::out_of_range("element index out of range");
    return preimages_[b];
}

FunctionTable FunctionTable::differential(int a) const {
    if (a == 0) throw std::invalid_argument("differential direction must be nonzero");
    int q = size();
    std::vector<int> d(q);
    for (int x = 0; x < q; ++x) d[x] = group_->sub(images_[group_->add(x, a)], images_[x]);
    return FunctionTable(group_, std::move(d));
}

int FunctionTable::differential_uniformity() const {
    int q = size();
    if (q < 2) throw std::invalid_argument("differential uniformity needs q >= 2");
    int best = 0;
    std::vector<int> count(q);
    for (int a = 1; a < q; ++a) {
        std::fill(count.begin(), count.end(), 0);
        for (int x = 0; x < q; ++x) {
            int b = group_->sub(images_[group_->add(x, a)], images_[x]);
            best = std::max(best, ++count[b]);
        }
    }
    return best;
}

FunctionTable FunctionTable::pow_map(GroupPtr field_group, long long d) {
    if (!field_group || !field_group->field())
        throw std::invalid_argument("pow map requires a field-additive group");
    if (d < 1) throw std::invalid_argument("pow map exponent must be >= 1");
    const FieldContext& fc = *field_group->field();
    std::vector<int> images(fc.q);
    for (int x = 0; x < fc.q; ++x) images[x] = fc.pow(x, d);
    return FunctionTable(std::move(field_group), std::move(images));
}

FunctionTable FunctionTable::parse(GroupPtr group, const std::string& spec) {
    if (spec.rfind("pow:", 0) == 0) return pow_map(std::move(group), std::stoll(spec.substr(4)));
    if (spec.rfind("table:", 0) == 0) {
        std::vector<int> images;
        std::istringstream is(spec.substr(6));
        std::string tok;
        while (std::getline(is, tok, ',')) images.push_back(std::stoi(tok));
        return FunctionTable(std::move(group), std::move(images));
    }
    if (spec.rfind("file:", 0) == 0) {
        std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open function file: " + path);
        nlohmann::json j;
        in >> j;
        return FunctionTable(std::move(group), j.at("images").get<std::vector<int>>());
    }
    throw std::invalid_argument("unknown function spec: " + spec);
}

FunctionTable add_functions(const FunctionTable& g, const FunctionTable& f) {
    if (g.group() != f.group()) throw std::invalid_argument("functions live on different groups");
    int q = f.size();
    std::vector<int> sum(q);
    for (int x = 0; x < q; ++x) sum[x] = f.group()->add(g(x), f(x));
    return FunctionTable(f.group(), std::move(sum));
}

PreimagePartition preimage_partition(const FunctionTable& f) { return f.partition(); }

}  // namespace pres
