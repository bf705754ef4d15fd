#pragma once

#include <string>
#include <vector>

#include "pres/group.hpp"

namespace pres {

/// P_t = elements with exactly t preimages, t = 0..u; ascending within each set.
struct PreimagePartition {
    std::vector<std::vector<int>> sets;  // sets[t] = P_t
    int V = 0;                           // image size
    int u = 0;                           // uniformity
};

/// A function f: G -> G as a dense image table. Statistics are computed at
/// construction; instances are immutable and safe for concurrent reads.
class FunctionTable {
public:
    FunctionTable(GroupPtr group, std::vector<int> images);

    const GroupPtr& group() const { return group_; }
    int size() const { return (int)images_.size(); }
    int operator()(int x) const { return images_.at(x); }
    const std::vector<int>& images() const { return images_; }

    const std::vector<int>& image_elements() const { return image_elements_; }  // ascending
    const std::vector<int>& preimages(int b) const;                             // ascending
    int preimage_count(int b) const { return (int)preimages(b).size(); }
    const PreimagePartition& partition() const { return partition_; }

    int image_size() const { return partition_.V; }
    int uniformity() const { return partition_.u; }
    bool is_permutation() const { return partition_.V == size(); }

    /// x -> f(x+a) - f(x); rejects a = 0.
    FunctionTable differential(int a) const;
    int differential_uniformity() const;

    /// x -> x^d over a field-additive group; rejects d = 0.
    static FunctionTable pow_map(GroupPtr field_group, long long d);

    /// Grammar: pow:<d> | table:<i0,...,i_{q-1}> | file:<path>
    static FunctionTable parse(GroupPtr group, const std::string& spec);

private:
    GroupPtr group_;
    std::vector<int> images_;
    std::vector<int> image_elements_;
    std::vector<std::vector<int>> preimages_;  // indexed by element
    PreimagePartition partition_;
};

/// g+f pointwise.
FunctionTable add_functions(const FunctionTable& g, const FunctionTable& f);

PreimagePartition preimage_partition(const FunctionTable& f);

}  // namespace pres
