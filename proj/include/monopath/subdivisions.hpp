#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "monopath/caps.hpp"
#include "monopath/ordered_partition.hpp"

namespace monopath {

// The cube base + sum_{r in directions} [0, e_r] of the pile of cubes.
struct SubdivisionFace {
  std::vector<int> base;        // integer point of B(lambda)
  std::vector<int> directions;  // letters r, sorted

  friend bool operator==(const SubdivisionFace&, const SubdivisionFace&) = default;
};

// Every proper ordered partition of M_lambda exactly once. Blocks are chosen
// left to right; candidate blocks run over letter subsets in increasing
// bitmask order.
std::uint64_t for_each_proper_partition(const Composition& lambda,
                                        const std::function<void(const OrderedPartition&)>& visit,
                                        const Caps& caps = {});
std::vector<OrderedPartition> enumerate_proper_partitions(const Composition& lambda,
                                                          const Caps& caps = {});

// One face per block: sum_{i<j} e_{B_i} + sum_{r in B_j} [0, e_r].
std::vector<SubdivisionFace> subdivision_faces(const OrderedPartition& rho);

// Whether every block of coarse is the union of a run of consecutive blocks of
// fine, i.e. fine is obtained by splitting blocks of coarse in order.
bool refines(const OrderedPartition& fine, const OrderedPartition& coarse);

// All-singleton partitions below rho, one per ordering of each block.
std::vector<LambdaWord> atoms_below(const OrderedPartition& rho);

}  // namespace monopath
