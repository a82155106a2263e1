#pragma once

#include <string>
#include <vector>

#include "monopath/composition.hpp"
#include "monopath/word.hpp"

namespace monopath {

// A proper ordered partition (B_1 | ... | B_m) of the multiset M_lambda: each
// block is a nonempty set of distinct letters, and the blocks together use
// letter i exactly lambda_i times. Blocks are stored sorted.
class OrderedPartition {
 public:
  OrderedPartition(std::vector<std::vector<int>> blocks, Composition lambda);

  // "1|1,2|2|1,2|1". Inside a block a digit run ("12") is accepted when d <= 9.
  static OrderedPartition parse(const std::string& text, const Composition& lambda);
  static OrderedPartition parse(const std::string& text);  // lambda from counts

  // The all-singleton partition (w_1 | w_2 | ... | w_n).
  static OrderedPartition singletons(const LambdaWord& w);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const Composition& composition() const { return lambda_; }
  std::size_t block_count() const { return blocks_.size(); }

  bool is_atom() const;           // every block a singleton
  LambdaWord to_word() const;     // requires is_atom()

  std::string to_string() const;

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.blocks_ == b.blocks_ && a.lambda_ == b.lambda_;
  }
  friend bool operator<(const OrderedPartition& a, const OrderedPartition& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  Composition lambda_;
};

}  // namespace monopath
