#include "monopath/parallel.hpp"

#include <algorithm>
#include <vector>

#include <omp.h>

#include "monopath/arrangements.hpp"
#include "monopath/coherence.hpp"
#include "monopath/combinatorics.hpp"
#include "monopath/detail/field_grid.hpp"
#include "monopath/errors.hpp"
#include "monopath/geometry.hpp"

namespace monopath {

void for_each_word_in_range(const Composition& lambda, std::uint64_t begin, std::uint64_t end,
                            const std::function<void(std::span<const int>)>& visit) {
  if (begin >= end) return;
  std::vector<int> letters = unrank_word(lambda, begin);
  for (std::uint64_t r = begin; r < end; ++r) {
    visit(letters);
    if (!std::next_permutation(letters.begin(), letters.end())) break;
  }
}

namespace serial {

std::uint64_t count_non_nesting(const Composition& lambda, const Caps& caps) {
  std::uint64_t count = 0;
  for_each_word(lambda, [&](std::span<const int> w) { count += is_non_nesting(w, lambda.d()); },
                caps);
  return count;
}

WordCensus coherence_census(const Composition& lambda, const Caps& caps) {
  WordCensus census;
  for_each_word(lambda, [&](std::span<const int> letters) {
    ++census.words;
    const bool syntactic = is_non_nesting(letters, lambda.d());
    const LambdaWord w({letters.begin(), letters.end()}, lambda);
    census.non_nesting += syntactic;
    census.disagreements += syntactic != is_coherent_path(w).coherent;
  }, caps);
  return census;
}

std::uint64_t certified_vertices(const Composition& lambda, const Caps& caps) {
  std::uint64_t count = 0;
  for_each_word(lambda, [&](std::span<const int> letters) {
    if (!is_non_nesting(letters, lambda.d())) return;
    count += vertex_certificate(LambdaWord({letters.begin(), letters.end()}, lambda), caps);
  }, caps);
  return count;
}

BigInt field_count(const Composition& lambda, std::uint64_t q, const Caps& caps) {
  return char_poly_finite_field(lambda, q, caps);
}

}  // namespace serial

namespace par {

namespace {

// Splits [0, total) into one contiguous chunk per loop iteration.
template <typename Body>
std::uint64_t reduce_chunks(std::uint64_t total, Body body) {
  const auto chunks = static_cast<std::int64_t>(
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(4 * omp_get_max_threads())));
  std::uint64_t sum = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : sum)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(c) / chunks;
    const std::uint64_t end = total * static_cast<std::uint64_t>(c + 1) / chunks;
    sum += body(begin, end);
  }
  return sum;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::uint64_t count_non_nesting(const Composition& lambda, const Caps& caps) {
  check_length_cap(lambda, caps.word_length, "count_non_nesting");
  return reduce_chunks(word_space_size(lambda), [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t local = 0;
    for_each_word_in_range(lambda, b, e,
                           [&](std::span<const int> w) { local += is_non_nesting(w, lambda.d()); });
    return local;
  });
}

WordCensus coherence_census(const Composition& lambda, const Caps& caps) {
  check_length_cap(lambda, caps.word_length, "coherence_census");
  const std::uint64_t total = word_space_size(lambda);
  WordCensus census;
  census.words = total;
  census.non_nesting = count_non_nesting(lambda, caps);
  census.disagreements = reduce_chunks(total, [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t local = 0;
    for_each_word_in_range(lambda, b, e, [&](std::span<const int> letters) {
      const LambdaWord w({letters.begin(), letters.end()}, lambda);
      local += is_non_nesting(letters, lambda.d()) != is_coherent_path(w).coherent;
    });
    return local;
  });
  return census;
}

std::uint64_t certified_vertices(const Composition& lambda, const Caps& caps) {
  check_length_cap(lambda, caps.word_length, "certified_vertices");
  return reduce_chunks(word_space_size(lambda), [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t local = 0;
    for_each_word_in_range(lambda, b, e, [&](std::span<const int> letters) {
      if (!is_non_nesting(letters, lambda.d())) return;
      local += vertex_certificate(LambdaWord({letters.begin(), letters.end()}, lambda), caps);
    });
    return local;
  });
}

BigInt field_count(const Composition& lambda, std::uint64_t q, const Caps& caps) {
  detail::check_field_preconditions(lambda, q, caps);
  const detail::FieldGrid grid(lambda, q);
  const std::uint64_t count = reduce_chunks(
      grid.size(), [&](std::uint64_t b, std::uint64_t e) { return grid.count_range(b, e); });
  return BigInt(std::to_string(count));
}

}  // namespace par

}  // namespace monopath
