#include "smcov/combinatorics.hpp"

#include <stdexcept>

namespace smcov {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> raw_partitions(int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_rec(l, l, current, out);
  return out;
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial: n must lie in [0, 20]");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<SetPartitionSignature> set_partition_signatures(int k) {
  if (k < 0 || k > 20) throw std::out_of_range("set_partition_signatures: k must lie in [0, 20]");
  std::vector<SetPartitionSignature> out;
  for (const auto& parts : raw_partitions(k)) {
    SetPartitionSignature sig;
    sig.block_count = static_cast<int>(parts.size());
    sig.size_multiplicity.assign(static_cast<std::size_t>(k), 0);
    for (int p : parts) ++sig.size_multiplicity[static_cast<std::size_t>(p - 1)];
    // k! / prod_j (j!)^{c_j} c_j!, dividing in an order that keeps every
    // intermediate an integer.
    std::uint64_t w = factorial(k);
    for (int p : parts) w /= factorial(p);
    for (int c : sig.size_multiplicity) w /= factorial(c);
    sig.weight = w;
    out.push_back(std::move(sig));
  }
  return out;
}

std::vector<IntegerPartition> integer_partitions(int l) {
  if (l < 0 || l > 32) throw std::out_of_range("integer_partitions: l must lie in [0, 32]");
  std::vector<IntegerPartition> out;
  for (auto& parts : raw_partitions(l)) {
    IntegerPartition ip;
    for (int p : parts) {
      if (ip.distinct_multiplicity.empty() || ip.distinct_multiplicity.back().first != p)
        ip.distinct_multiplicity.emplace_back(p, 1);
      else
        ++ip.distinct_multiplicity.back().second;
    }
    ip.parts = std::move(parts);
    out.push_back(std::move(ip));
  }
  return out;
}

}  // namespace smcov
