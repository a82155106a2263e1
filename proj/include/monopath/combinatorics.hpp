#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "monopath/caps.hpp"
#include "monopath/composition.hpp"
#include "monopath/numeric.hpp"
#include "monopath/word.hpp"

namespace monopath {

// n! / (lambda_1! ... lambda_d!)
BigInt multinomial_count(const Composition& lambda);

// n! / (n - d + 1)!: the number of non-nesting lambda-permutations.
BigInt coherent_count_formula(const Composition& lambda);

// A word is nesting when some i < j < k < l has w_i = w_l, w_j = w_k and no
// copy of w_i among positions j..k. Works on consecutive equal pairs (j, k)
// with prefix counts, O(n^2 d).
bool is_non_nesting(std::span<const int> letters, int d);
bool is_non_nesting(const LambdaWord& w);

// Number of quadruples (i, j, k, l) witnessing a nesting.
std::uint64_t nesting_count(std::span<const int> letters, int d);
std::uint64_t nesting_count(const LambdaWord& w);

// Streams every lambda-permutation once, in lexicographic order.
class WordEnumerator {
 public:
  explicit WordEnumerator(const Composition& lambda, const Caps& caps = {});

  std::optional<LambdaWord> next();

 private:
  Composition lambda_;
  std::vector<int> current_;
  bool done_ = false;
};

std::vector<LambdaWord> enumerate_words(const Composition& lambda, const Caps& caps = {});

// Raw-letter traversal for the hot loops; the callback sees each word in
// lexicographic order. Returns the number of words visited.
std::uint64_t for_each_word(const Composition& lambda,
                            const std::function<void(std::span<const int>)>& visit,
                            const Caps& caps = {});

// Words in lexicographic order, ranked from 0. Ranks fit in 64 bits for the
// sizes the caps allow.
std::uint64_t word_space_size(const Composition& lambda);
std::vector<int> unrank_word(const Composition& lambda, std::uint64_t rank);
std::uint64_t rank_word(std::span<const int> letters, const Composition& lambda);

void check_length_cap(const Composition& lambda, int cap, const char* what);

}  // namespace monopath
