#include "monopath/ordered_partition.hpp"

#include <algorithm>
#include <sstream>

#include "monopath/errors.hpp"

namespace monopath {

OrderedPartition::OrderedPartition(std::vector<std::vector<int>> blocks, Composition lambda)
    : blocks_(std::move(blocks)), lambda_(std::move(lambda)) {
  std::vector<int> counts(lambda_.d(), 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw InvalidInput("ordered partition has an empty block");
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw InvalidInput("block repeats a letter; partition is not proper");
    }
    for (int letter : block) {
      if (letter < 1 || letter > lambda_.d()) throw InvalidInput("letter out of range in partition");
      ++counts[letter - 1];
    }
  }
  if (counts != lambda_.parts()) {
    throw InvalidInput("partition does not use the multiset of lambda = " + lambda_.to_string());
  }
}

namespace {

std::vector<std::vector<int>> parse_blocks(const std::string& text, bool allow_digit_run) {
  std::vector<std::vector<int>> blocks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '|')) blocks.push_back(parse_letters(item, allow_digit_run));
  if (!text.empty() && text.back() == '|') throw InvalidInput("bad partition '" + text + "'");
  if (blocks.empty()) throw InvalidInput("empty partition");
  return blocks;
}

}  // namespace

OrderedPartition OrderedPartition::parse(const std::string& text, const Composition& lambda) {
  return OrderedPartition(parse_blocks(text, lambda.d() <= 9), lambda);
}

OrderedPartition OrderedPartition::parse(const std::string& text) {
  auto blocks = parse_blocks(text, true);
  int d = 0;
  for (const auto& b : blocks) {
    for (int letter : b) {
      if (letter < 1) throw InvalidInput("bad letter in partition '" + text + "'");
      d = std::max(d, letter);
    }
  }
  std::vector<int> counts(d, 0);
  for (const auto& b : blocks) {
    for (int letter : b) ++counts[letter - 1];
  }
  return OrderedPartition(std::move(blocks), Composition(std::move(counts)));
}

OrderedPartition OrderedPartition::singletons(const LambdaWord& w) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(w.n());
  for (int letter : w.letters()) blocks.push_back({letter});
  return OrderedPartition(std::move(blocks), w.composition());
}

bool OrderedPartition::is_atom() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.size() == 1; });
}

LambdaWord OrderedPartition::to_word() const {
  if (!is_atom()) throw InvalidInput("partition " + to_string() + " is not an atom");
  std::vector<int> letters;
  for (const auto& b : blocks_) letters.push_back(b.front());
  return LambdaWord(std::move(letters), lambda_);
}

std::string OrderedPartition::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (j) out += '|';
    for (std::size_t t = 0; t < blocks_[j].size(); ++t) {
      if (t) out += ',';
      out += std::to_string(blocks_[j][t]);
    }
  }
  return out;
}

}  // namespace monopath
