#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace smcov {

// A class of set partitions of {1..k} that share the same block-size profile.
// size_multiplicity[j - 1] is the number of blocks of size j.
struct SetPartitionSignature {
  int block_count = 0;
  std::vector<int> size_multiplicity;
  std::uint64_t weight = 0;  // number of set partitions with this profile
};

// All block-size profiles of set partitions of a k-element set, 0 <= k <= 20.
// The weights sum to the Bell number B_k.
std::vector<SetPartitionSignature> set_partition_signatures(int k);

struct IntegerPartition {
  std::vector<int> parts;                                 // nonincreasing
  std::vector<std::pair<int, int>> distinct_multiplicity;  // (part value, count), descending values
  int size() const { return static_cast<int>(parts.size()); }
};

// All partitions of l, 0 <= l <= 32, in reverse lexicographic order.
// The partition of 0 is the single empty partition.
std::vector<IntegerPartition> integer_partitions(int l);

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);  // n <= 20

}  // namespace smcov
