#include "monopath/combinatorics.hpp"

#include <algorithm>
#include <string>

#include "monopath/errors.hpp"

namespace monopath {

BigInt multinomial_count(const Composition& lambda) {
  BigInt out = factorial(lambda.n());
  for (int p : lambda.parts()) out /= factorial(p);
  return out;
}

BigInt coherent_count_formula(const Composition& lambda) {
  return factorial(lambda.n()) / factorial(lambda.n() - lambda.d() + 1);
}

namespace {

// prefix[a][k] = occurrences of letter a + 1 among the first k positions.
std::vector<std::vector<int>> prefix_counts(std::span<const int> letters, int d) {
  const std::size_t n = letters.size();
  std::vector<std::vector<int>> prefix(d, std::vector<int>(n + 1, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (int a = 0; a < d; ++a) prefix[a][k + 1] = prefix[a][k];
    ++prefix[letters[k] - 1][k + 1];
  }
  return prefix;
}

}  // namespace

bool is_non_nesting(std::span<const int> letters, int d) {
  const std::size_t n = letters.size();
  const auto prefix = prefix_counts(letters, d);
  // An enclosed pair can always be shrunk to two consecutive copies of its
  // letter, so only consecutive equal pairs (j, k) need checking.
  std::vector<int> last(d, -1);
  for (std::size_t k = 0; k < n; ++k) {
    const int b = letters[k] - 1;
    const int j = last[b];
    last[b] = static_cast<int>(k);
    if (j < 0) continue;
    for (int a = 0; a < d; ++a) {
      if (a == b) continue;
      const int before = prefix[a][j];
      const int inside = prefix[a][k + 1] - prefix[a][j];
      const int after = prefix[a][n] - prefix[a][k + 1];
      if (before > 0 && inside == 0 && after > 0) return false;
    }
  }
  return true;
}

bool is_non_nesting(const LambdaWord& w) { return is_non_nesting(w.span(), w.d()); }

std::uint64_t nesting_count(std::span<const int> letters, int d) {
  const std::size_t n = letters.size();
  const auto prefix = prefix_counts(letters, d);
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (letters[j] != letters[k]) continue;
      const int b = letters[j] - 1;
      for (int a = 0; a < d; ++a) {
        if (a == b || prefix[a][k + 1] - prefix[a][j] != 0) continue;
        total += static_cast<std::uint64_t>(prefix[a][j]) *
                 static_cast<std::uint64_t>(prefix[a][n] - prefix[a][k + 1]);
      }
    }
  }
  return total;
}

std::uint64_t nesting_count(const LambdaWord& w) { return nesting_count(w.span(), w.d()); }

void check_length_cap(const Composition& lambda, int cap, const char* what) {
  if (lambda.n() > cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(lambda.n()) +
                      " exceeds cap " + std::to_string(cap));
  }
}

WordEnumerator::WordEnumerator(const Composition& lambda, const Caps& caps)
    : lambda_(lambda), current_(lambda.sorted_letters()) {
  check_length_cap(lambda, caps.word_length, "enumerate_words");
}

std::optional<LambdaWord> WordEnumerator::next() {
  if (done_) return std::nullopt;
  LambdaWord out(current_, lambda_);
  done_ = !std::next_permutation(current_.begin(), current_.end());
  return out;
}

std::vector<LambdaWord> enumerate_words(const Composition& lambda, const Caps& caps) {
  std::vector<LambdaWord> out;
  WordEnumerator words(lambda, caps);
  while (auto w = words.next()) out.push_back(std::move(*w));
  return out;
}

std::uint64_t for_each_word(const Composition& lambda,
                            const std::function<void(std::span<const int>)>& visit,
                            const Caps& caps) {
  check_length_cap(lambda, caps.word_length, "for_each_word");
  std::vector<int> letters = lambda.sorted_letters();
  std::uint64_t count = 0;
  do {
    visit(letters);
    ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

namespace {

std::uint64_t multinomial_u64(const std::vector<int>& counts) {
  // Product of binomials C(c_1 + ... + c_i, c_i); every partial product is
  // itself a multinomial so the exact division never truncates.
  unsigned __int128 acc = 1;
  int total = 0;
  for (int c : counts) {
    for (int t = 1; t <= c; ++t) {
      ++total;
      acc = acc * static_cast<unsigned>(total) / static_cast<unsigned>(t);
    }
  }
  if (acc > static_cast<unsigned __int128>(UINT64_MAX)) {
    throw CapExceeded("word space does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::uint64_t word_space_size(const Composition& lambda) {
  return multinomial_u64(lambda.parts());
}

std::vector<int> unrank_word(const Composition& lambda, std::uint64_t rank) {
  std::vector<int> remaining = lambda.parts();
  if (rank >= multinomial_u64(remaining)) throw InvalidInput("word rank out of range");
  std::vector<int> out;
  out.reserve(lambda.n());
  for (int pos = 0; pos < lambda.n(); ++pos) {
    for (int c = 0; c < lambda.d(); ++c) {
      if (remaining[c] == 0) continue;
      --remaining[c];
      const std::uint64_t block = multinomial_u64(remaining);
      if (rank < block) {
        out.push_back(c + 1);
        break;
      }
      rank -= block;
      ++remaining[c];
    }
  }
  return out;
}

std::uint64_t rank_word(std::span<const int> letters, const Composition& lambda) {
  std::vector<int> remaining = lambda.parts();
  std::uint64_t rank = 0;
  for (int letter : letters) {
    for (int c = 0; c < letter - 1; ++c) {
      if (remaining[c] == 0) continue;
      --remaining[c];
      rank += multinomial_u64(remaining);
      ++remaining[c];
    }
    --remaining[letter - 1];
  }
  return rank;
}

}  // namespace monopath
