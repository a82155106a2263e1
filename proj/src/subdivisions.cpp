#include "monopath/subdivisions.hpp"

#include <algorithm>

#include "monopath/combinatorics.hpp"
#include "monopath/errors.hpp"

namespace monopath {

namespace {

struct PartitionBuilder {
  const Composition& lambda;
  const std::function<void(const OrderedPartition&)>& visit;
  std::vector<int> remaining;
  std::vector<std::vector<int>> blocks;
  int left = 0;
  std::uint64_t count = 0;

  void run() {
    if (left == 0) {
      visit(OrderedPartition(blocks, lambda));
      ++count;
      return;
    }
    const int d = lambda.d();
    unsigned available = 0;
    for (int i = 0; i < d; ++i) {
      if (remaining[i] > 0) available |= 1u << i;
    }
    // Nonempty submasks of the available letters, increasing.
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      if ((mask & available) != mask) continue;
      std::vector<int> block;
      for (int i = 0; i < d; ++i) {
        if (mask & (1u << i)) {
          block.push_back(i + 1);
          --remaining[i];
        }
      }
      left -= static_cast<int>(block.size());
      blocks.push_back(std::move(block));
      run();
      for (int letter : blocks.back()) ++remaining[letter - 1];
      left += static_cast<int>(blocks.back().size());
      blocks.pop_back();
    }
  }
};

}  // namespace

std::uint64_t for_each_proper_partition(const Composition& lambda,
                                        const std::function<void(const OrderedPartition&)>& visit,
                                        const Caps& caps) {
  check_length_cap(lambda, caps.partition_length, "enumerate_proper_partitions");
  if (lambda.d() > 30) throw CapExceeded("too many letters for partition enumeration");
  PartitionBuilder builder{lambda, visit, lambda.parts(), {}, lambda.n(), 0};
  builder.run();
  return builder.count;
}

std::vector<OrderedPartition> enumerate_proper_partitions(const Composition& lambda,
                                                          const Caps& caps) {
  std::vector<OrderedPartition> out;
  for_each_proper_partition(lambda, [&](const OrderedPartition& rho) { out.push_back(rho); }, caps);
  return out;
}

std::vector<SubdivisionFace> subdivision_faces(const OrderedPartition& rho) {
  std::vector<SubdivisionFace> faces;
  std::vector<int> base(rho.composition().d(), 0);
  for (const auto& block : rho.blocks()) {
    faces.push_back({base, block});
    for (int letter : block) ++base[letter - 1];
  }
  return faces;
}

bool refines(const OrderedPartition& fine, const OrderedPartition& coarse) {
  if (!(fine.composition() == coarse.composition())) {
    throw InvalidInput("refines: partitions of different multisets");
  }
  const auto& small = fine.blocks();
  std::size_t next = 0;
  for (const auto& target : coarse.blocks()) {
    std::vector<int> gathered;
    while (gathered.size() < target.size() && next < small.size()) {
      gathered.insert(gathered.end(), small[next].begin(), small[next].end());
      ++next;
    }
    std::sort(gathered.begin(), gathered.end());
    if (gathered != target) return false;
  }
  return next == small.size();
}

std::vector<LambdaWord> atoms_below(const OrderedPartition& rho) {
  std::vector<std::vector<int>> prefixes{{}};
  for (const auto& block : rho.blocks()) {
    std::vector<std::vector<int>> grown;
    std::vector<int> order = block;  // sorted, so next_permutation covers all
    do {
      for (const auto& p : prefixes) {
        auto q = p;
        q.insert(q.end(), order.begin(), order.end());
        grown.push_back(std::move(q));
      }
    } while (std::next_permutation(order.begin(), order.end()));
    prefixes = std::move(grown);
  }
  std::vector<LambdaWord> out;
  out.reserve(prefixes.size());
  for (auto& letters : prefixes) out.emplace_back(std::move(letters), rho.composition());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monopath
