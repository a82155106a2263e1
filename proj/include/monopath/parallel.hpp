#pragma once

// Exhaustive scans in two flavors: a straightforward serial reference and an
// OpenMP kernel that splits the same index space across threads. The serial
// versions are what the tests trust; the kernels must agree with them.

#include <cstdint>
#include <functional>
#include <span>

#include "monopath/caps.hpp"
#include "monopath/composition.hpp"
#include "monopath/numeric.hpp"

namespace monopath {

// Word-space scan results.
struct WordCensus {
  std::uint64_t words = 0;
  std::uint64_t non_nesting = 0;
  std::uint64_t disagreements = 0;  // is_coherent_path != is_non_nesting
  std::uint64_t certified = 0;      // non-nesting words passing vertex_certificate
};

// Visits the words with lexicographic rank in [begin, end).
void for_each_word_in_range(const Composition& lambda, std::uint64_t begin, std::uint64_t end,
                            const std::function<void(std::span<const int>)>& visit);

namespace serial {

std::uint64_t count_non_nesting(const Composition& lambda, const Caps& caps = {});
WordCensus coherence_census(const Composition& lambda, const Caps& caps = {});
std::uint64_t certified_vertices(const Composition& lambda, const Caps& caps = {});
BigInt field_count(const Composition& lambda, std::uint64_t q, const Caps& caps = {});

}  // namespace serial

namespace par {

std::uint64_t count_non_nesting(const Composition& lambda, const Caps& caps = {});
WordCensus coherence_census(const Composition& lambda, const Caps& caps = {});
std::uint64_t certified_vertices(const Composition& lambda, const Caps& caps = {});
BigInt field_count(const Composition& lambda, std::uint64_t q, const Caps& caps = {});

int max_threads();

}  // namespace par

}  // namespace monopath
