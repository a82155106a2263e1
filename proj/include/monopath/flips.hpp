#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "monopath/caps.hpp"
#include "monopath/word.hpp"

namespace monopath {

// Words one flip away: swap positions k, k + 1 whenever w_k != w_{k+1}.
// Ordered by k.
std::vector<LambdaWord> flip_neighbors(const LambdaWord& w);

// Fewest flips turning w into a non-nesting word (breadth-first search).
int incoherency(const LambdaWord& w, const Caps& caps = {});

// Incoherency of every word of lambda at once, from a multi-source search
// seeded with all non-nesting words. Keyed by lexicographic rank.
std::vector<int> incoherency_table(const Composition& lambda, const Caps& caps = {});

struct IncoherencyCensus {
  int maximum = 0;
  std::vector<LambdaWord> attainers;  // lexicographic order
};

// lambda = (2, ..., 2) with d parts.
IncoherencyCensus max_incoherency_census(int d, const Caps& caps = {});

// The words sigma_1 ... sigma_d sigma_d ... sigma_1 for every permutation sigma.
std::vector<LambdaWord> palindromic_nesting_words(int d);

// Number of words reachable from w by flips.
std::uint64_t flip_component_size(const LambdaWord& w, const Caps& caps = {});

}  // namespace monopath
