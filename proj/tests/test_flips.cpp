#include <doctest.h>

#include <set>

#include "monopath/combinatorics.hpp"
#include "monopath/errors.hpp"
#include "monopath/flips.hpp"
#include "oracles.hpp"

using namespace monopath;

namespace {

std::vector<std::string> compact(const std::vector<LambdaWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.compact());
  return out;
}

}  // namespace

TEST_CASE("flip_neighbors") {
  CHECK(compact(flip_neighbors(LambdaWord::parse("1122"))) == std::vector<std::string>{"1212"});
  CHECK(compact(flip_neighbors(LambdaWord::parse("1212"))) ==
        std::vector<std::string>{"2112", "1122", "1221"});
  CHECK(flip_neighbors(LambdaWord::parse("11")).empty());
}

TEST_CASE("incoherency examples") {
  CHECK(incoherency(LambdaWord::parse("12121")) == 0);
  CHECK(incoherency(LambdaWord::parse("1221")) == 1);
  CHECK(incoherency(LambdaWord::parse("123321")) == 3);
  CHECK_THROWS_AS(incoherency(LambdaWord(std::vector<int>(11, 1), Composition({11}))), CapExceeded);
}

TEST_CASE("max incoherency census") {
  const auto two = max_incoherency_census(2);
  CHECK(two.maximum == 1);
  const auto two_words = compact(two.attainers);
  CHECK(std::count(two_words.begin(), two_words.end(), "1221") == 1);
  CHECK(std::count(two_words.begin(), two_words.end(), "2112") == 1);

  for (int d = 2; d <= 4; ++d) {
    const auto census = max_incoherency_census(d);
    CHECK(census.maximum == d * (d - 1) / 2);
    std::set<LambdaWord> attainers(census.attainers.begin(), census.attainers.end());
    for (const auto& w : palindromic_nesting_words(d)) CHECK(attainers.count(w) == 1);
  }
  CHECK(palindromic_nesting_words(3).size() == 6);
  CHECK(palindromic_nesting_words(3).front().compact() == "123321");
}

TEST_CASE("incoherency table agrees with per-word BFS and the oracle") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      const auto table = incoherency_table(lambda);
      const auto words = enumerate_words(lambda);
      REQUIRE(table.size() == words.size());
      for (std::size_t r = 0; r < words.size(); ++r) {
        CHECK(table[r] == oracle::incoherency(words[r].letters()));
        if (n <= 5) CHECK(table[r] == incoherency(words[r]));
      }
    }
  }
}

TEST_CASE("incoherency is zero exactly on non-nesting words (n <= 8)") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      const auto table = incoherency_table(lambda);
      std::uint64_t rank = 0;
      for_each_word(lambda, [&](std::span<const int> w) {
        CHECK((table[rank] == 0) == is_non_nesting(w, lambda.d()));
        CHECK(table[rank] >= 0);
        ++rank;
      });
    }
  }
}

TEST_CASE("incoherency bounds nesting count for lambda = (2, ..., 2), d <= 3") {
  for (int d = 1; d <= 3; ++d) {
    const auto lambda = all_twos(d);
    const auto table = incoherency_table(lambda);
    std::uint64_t rank = 0;
    for_each_word(lambda, [&](std::span<const int> w) {
      CHECK(static_cast<std::uint64_t>(table[rank]) >= nesting_count(w, d));
      ++rank;
    });
  }
}

TEST_CASE("flip graph is connected (n <= 8)") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      const LambdaWord w0(lambda.sorted_letters(), lambda);
      CHECK(BigInt(std::to_string(flip_component_size(w0))) == multinomial_count(lambda));
    }
  }
}
