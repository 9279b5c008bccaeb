#pragma once

#include <vector>

namespace ccn {

/// l-partition of n: l positive parts summing to n, stored ascending.
class PartitionSpec {
public:
    explicit PartitionSpec(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }
    int length() const { return static_cast<int>(parts_.size()); }

    bool operator==(const PartitionSpec& other) const {
        return parts_ == other.parts_;
    }
    bool operator<(const PartitionSpec& other) const {
        return parts_ < other.parts_;
    }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// Sum of part_i * part_j over all unordered pairs of distinct positions.
long long pairwise_product_sum(const PartitionSpec& p);

/// The balanced l-partition of n: (l - r) parts floor(n/l) and r = n mod l
/// parts ceil(n/l). Requires 2 <= l <= n.
PartitionSpec completion_partition(int n, int l);

/// pairwise_product_sum of the completion partition; attains the maximum
/// over all l-partitions of n.
long long completion_sum_product(int n, int l);

struct MaxPartitionResult {
    long long value = 0;
    std::vector<PartitionSpec> argmax; // ascending lexicographic
};

/// Exhaustive maximum of pairwise_product_sum over all l-partitions of n,
/// with the full argmax set. Independent check of completion_sum_product.
/// Guard: n <= 30.
MaxPartitionResult max_partition_oracle(int n, int l);

} // namespace ccn
