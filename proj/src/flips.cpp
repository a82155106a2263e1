#include "monopath/flips.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "monopath/combinatorics.hpp"
#include "monopath/errors.hpp"

namespace monopath {

namespace {

// Words packed as base-d digits, letter k at weight d^k. Fits 64 bits for the
// lengths the BFS cap allows.
class WordCodec {
 public:
  explicit WordCodec(const Composition& lambda) : d_(lambda.d()), n_(lambda.n()) {
    long double bound = 1;
    for (int k = 0; k < n_; ++k) bound *= d_;
    if (bound > 1.8e19L) throw CapExceeded("word codes do not fit in 64 bits");
    weights_.resize(n_);
    std::uint64_t w = 1;
    for (int k = 0; k < n_; ++k) {
      weights_[k] = w;
      w *= static_cast<std::uint64_t>(d_);
    }
  }

  std::uint64_t encode(std::span<const int> letters) const {
    std::uint64_t code = 0;
    for (int k = 0; k < n_; ++k) code += static_cast<std::uint64_t>(letters[k] - 1) * weights_[k];
    return code;
  }

  void decode(std::uint64_t code, std::vector<int>& letters) const {
    letters.resize(n_);
    for (int k = 0; k < n_; ++k) {
      letters[k] = static_cast<int>(code % d_) + 1;
      code /= d_;
    }
  }

  // Code after swapping positions k, k + 1 holding letters a, b.
  std::uint64_t swapped(std::uint64_t code, int k, int a, int b) const {
    return code - static_cast<std::uint64_t>(a - 1) * weights_[k] -
           static_cast<std::uint64_t>(b - 1) * weights_[k + 1] +
           static_cast<std::uint64_t>(b - 1) * weights_[k] +
           static_cast<std::uint64_t>(a - 1) * weights_[k + 1];
  }

 private:
  int d_;
  int n_;
  std::vector<std::uint64_t> weights_;
};

}  // namespace

std::vector<LambdaWord> flip_neighbors(const LambdaWord& w) {
  std::vector<LambdaWord> out;
  auto letters = w.letters();
  for (int k = 0; k + 1 < w.n(); ++k) {
    if (letters[k] == letters[k + 1]) continue;
    std::swap(letters[k], letters[k + 1]);
    out.emplace_back(letters, w.composition());
    std::swap(letters[k], letters[k + 1]);
  }
  return out;
}

int incoherency(const LambdaWord& w, const Caps& caps) {
  check_length_cap(w.composition(), caps.bfs_length, "incoherency");
  const WordCodec codec(w.composition());
  const int n = w.n();
  const int d = w.d();
  std::unordered_set<std::uint64_t> visited;
  std::deque<std::pair<std::uint64_t, int>> queue;
  const std::uint64_t start = codec.encode(w.span());
  visited.insert(start);
  queue.emplace_back(start, 0);
  std::vector<int> letters;
  while (!queue.empty()) {
    const auto [code, dist] = queue.front();
    queue.pop_front();
    codec.decode(code, letters);
    if (is_non_nesting(letters, d)) return dist;
    for (int k = 0; k + 1 < n; ++k) {
      if (letters[k] == letters[k + 1]) continue;
      const std::uint64_t next = codec.swapped(code, k, letters[k], letters[k + 1]);
      if (visited.insert(next).second) queue.emplace_back(next, dist + 1);
    }
  }
  throw InvariantViolation("flip graph has no non-nesting word reachable from " + w.to_string());
}

std::vector<int> incoherency_table(const Composition& lambda, const Caps& caps) {
  check_length_cap(lambda, caps.bfs_length, "incoherency_table");
  const WordCodec codec(lambda);
  const int d = lambda.d();
  std::vector<std::uint64_t> codes;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<int> dist;
  std::deque<std::uint32_t> queue;
  for_each_word(lambda, [&](std::span<const int> letters) {
    const auto id = static_cast<std::uint32_t>(codes.size());
    codes.push_back(codec.encode(letters));
    index.emplace(codes.back(), id);
    const bool coherent = is_non_nesting(letters, d);
    dist.push_back(coherent ? 0 : -1);
    if (coherent) queue.push_back(id);
  }, Caps::with_length_cap(caps.bfs_length));

  std::vector<int> letters;
  while (!queue.empty()) {
    const std::uint32_t id = queue.front();
    queue.pop_front();
    codec.decode(codes[id], letters);
    for (int k = 0; k + 1 < lambda.n(); ++k) {
      if (letters[k] == letters[k + 1]) continue;
      const std::uint32_t next = index.at(codec.swapped(codes[id], k, letters[k], letters[k + 1]));
      if (dist[next] < 0) {
        dist[next] = dist[id] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

IncoherencyCensus max_incoherency_census(int d, const Caps& caps) {
  if (d < 1) throw InvalidInput("max_incoherency_census needs d >= 1");
  const Composition lambda = all_twos(d);
  const auto table = incoherency_table(lambda, caps);
  IncoherencyCensus census;
  census.maximum = *std::max_element(table.begin(), table.end());
  std::uint64_t rank = 0;
  for_each_word(lambda, [&](std::span<const int> letters) {
    if (table[rank++] == census.maximum) {
      census.attainers.emplace_back(std::vector<int>(letters.begin(), letters.end()), lambda);
    }
  }, Caps::with_length_cap(caps.bfs_length));
  return census;
}

std::vector<LambdaWord> palindromic_nesting_words(int d) {
  const Composition lambda = all_twos(d);
  std::vector<int> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<LambdaWord> out;
  do {
    std::vector<int> letters(sigma);
    letters.insert(letters.end(), sigma.rbegin(), sigma.rend());
    out.emplace_back(std::move(letters), lambda);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::uint64_t flip_component_size(const LambdaWord& w, const Caps& caps) {
  check_length_cap(w.composition(), caps.bfs_length, "flip_component_size");
  const WordCodec codec(w.composition());
  std::unordered_set<std::uint64_t> visited;
  std::vector<std::uint64_t> stack{codec.encode(w.span())};
  visited.insert(stack.back());
  std::vector<int> letters;
  while (!stack.empty()) {
    const std::uint64_t code = stack.back();
    stack.pop_back();
    codec.decode(code, letters);
    for (int k = 0; k + 1 < w.n(); ++k) {
      if (letters[k] == letters[k + 1]) continue;
      const std::uint64_t next = codec.swapped(code, k, letters[k], letters[k + 1]);
      if (visited.insert(next).second) stack.push_back(next);
    }
  }
  return visited.size();
}

}  // namespace monopath
