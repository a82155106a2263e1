#pragma once

#include <cstdint>

namespace monopath {

// Size guards for the exhaustive scans.
struct Caps {
  int word_length = 12;          // enumerate_words and the scans built on it
  int bfs_length = 10;           // flip-graph breadth-first search
  int partition_length = 9;      // proper ordered partitions
  int permutation_degree = 9;    // d! upper-facet paths
  std::uint64_t field_grid = 1'000'000;   // q^d for the finite-field count
  std::uint64_t box_points = 1'000'000;   // prod (lambda_i + 1)

  // Applies one limit on n to every word-length style cap.
  static Caps with_length_cap(int n) {
    Caps caps;
    caps.word_length = n;
    caps.bfs_length = n;
    caps.partition_length = n;
    return caps;
  }
};

}  // namespace monopath
