#include "ccn/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccn/limits.hpp"

namespace ccn {

PartitionSpec::PartitionSpec(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("partition needs at least one part");
    for (int p : parts_)
        if (p < 1)
            throw std::invalid_argument("partition part must be positive, got " +
                                        std::to_string(p));
    std::sort(parts_.begin(), parts_.end());
    for (int p : parts_) total_ += p;
}

long long pairwise_product_sum(const PartitionSpec& p) {
    const auto& a = p.parts();
    long long sum = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            sum += static_cast<long long>(a[i]) * a[j];
    return sum;
}

PartitionSpec completion_partition(int n, int l) {
    if (l < 2 || l > n)
        throw std::invalid_argument("need 2 <= l <= n, got n=" +
                                    std::to_string(n) + " l=" +
                                    std::to_string(l));
    int floor_part = n / l;
    int remainder = n % l;
    std::vector<int> parts;
    parts.reserve(l);
    for (int i = 0; i < l - remainder; ++i) parts.push_back(floor_part);
    for (int i = 0; i < remainder; ++i) parts.push_back(floor_part + 1);
    return PartitionSpec(std::move(parts));
}

long long completion_sum_product(int n, int l) {
    return pairwise_product_sum(completion_partition(n, l));
}

namespace {

// All l-partitions of n with parts >= lo, nondecreasing, so each multiset
// appears once.
void enumerate_partitions(int n, int l, int lo, std::vector<int>& prefix,
                          MaxPartitionResult& acc) {
    if (l == 1) {
        if (n < lo) return;
        prefix.push_back(n);
        PartitionSpec p(prefix);
        long long value = pairwise_product_sum(p);
        if (acc.argmax.empty() || value > acc.value) {
            acc.value = value;
            acc.argmax.clear();
            acc.argmax.push_back(std::move(p));
        } else if (value == acc.value) {
            acc.argmax.push_back(std::move(p));
        }
        prefix.pop_back();
        return;
    }
    for (int a = lo; a * l <= n; ++a) {
        prefix.push_back(a);
        enumerate_partitions(n - a, l - 1, a, prefix, acc);
        prefix.pop_back();
    }
}

void merge_result(MaxPartitionResult& into, MaxPartitionResult&& from) {
    if (from.argmax.empty()) return;
    if (into.argmax.empty() || from.value > into.value) {
        into = std::move(from);
    } else if (from.value == into.value) {
        for (auto& p : from.argmax) into.argmax.push_back(std::move(p));
    }
}

} // namespace

MaxPartitionResult max_partition_oracle(int n, int l) {
    if (l < 2 || l > n)
        throw std::invalid_argument("need 2 <= l <= n, got n=" +
                                    std::to_string(n) + " l=" +
                                    std::to_string(l));
    if (n > 30)
        throw GuardError("partition oracle guard is n <= 30, got " +
                         std::to_string(n));

    // Split on the smallest part; merged in order, so the output does not
    // depend on the thread count.
    const int max_first = n / l;
    std::vector<MaxPartitionResult> partial(max_first);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int a = 1; a <= max_first; ++a) {
        std::vector<int> prefix{a};
        enumerate_partitions(n - a, l - 1, a, prefix, partial[a - 1]);
    }
    MaxPartitionResult out;
    for (auto& piece : partial) merge_result(out, std::move(piece));
    std::sort(out.argmax.begin(), out.argmax.end());
    return out;
}

} // namespace ccn
