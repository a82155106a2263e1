#include <doctest.h>

#include <random>
#include <set>

#include "monopath/coherence.hpp"
#include "monopath/combinatorics.hpp"
#include "monopath/errors.hpp"
#include "monopath/subdivisions.hpp"
#include "oracles.hpp"

using namespace monopath;

namespace {

GenericFunctional functional(std::vector<Rational> aprime) {
  return GenericFunctional(std::move(aprime));
}

bool strictly_increasing(const std::vector<Rational>& xs) {
  for (std::size_t k = 1; k < xs.size(); ++k)
    if (!(xs[k - 1] < xs[k])) return false;
  return true;
}

}  // namespace

TEST_CASE("delta_sequence examples") {
  const auto c = functional({0, Rational(2, 5)});
  CHECK(delta_sequence(LambdaWord::parse("1212"), c) ==
        std::vector<Rational>{0, Rational(2, 5), 1, Rational(7, 5)});
  CHECK(delta_sequence(LambdaWord::parse("11"), functional({0})) == std::vector<Rational>{0, 1});
  const auto nested = delta_sequence(LambdaWord::parse("1221"), c);
  CHECK(nested == std::vector<Rational>{0, Rational(2, 5), Rational(7, 5), 1});
  CHECK_FALSE(strictly_increasing(nested));
}

TEST_CASE("word_of_functional and region_of_point examples") {
  const auto lambda = Composition::parse("2,2");
  CHECK(word_of_functional(functional({0, Rational(2, 5)}), lambda).compact() == "1212");
  CHECK(word_of_functional(functional({0, 10}), lambda).compact() == "1122");
  CHECK_THROWS_AS(word_of_functional(functional({0, 1}), lambda), NonGenericFunctional);
  try {
    word_of_functional(functional({0, 1}), lambda);
  } catch (const NonGenericFunctional& e) {
    // a'_1 + 1 == a'_2 + 0
    CHECK(e.letter_a != e.letter_b);
  }
  CHECK(region_of_point(functional({0, Rational(2, 5)}), lambda).compact() == "1212");
  CHECK(region_of_point(functional({0, 10}), lambda).compact() == "1122");
  CHECK(region_of_point(functional({0, -10}), lambda).compact() == "2211");
  CHECK_FALSE(functional({0, 1}).is_generic(lambda));
  CHECK(functional({0, Rational(1, 2)}).is_generic(lambda));
}

TEST_CASE("functional coefficients and evaluation") {
  const auto c = functional({Rational(3, 2), Rational(1, 2)});
  CHECK(c.coefficients() == RationalVector{1, 0, Rational(1, 2)});
  CHECK(c.evaluate(RationalVector{2, 7, 4}) == 4);
}

TEST_CASE("path coherence examples") {
  CHECK(feasibility(path_coherence_system(LambdaWord::parse("12121"))).feasible);
  CHECK_FALSE(feasibility(path_coherence_system(LambdaWord::parse("12211"))).feasible);
  const auto sys = path_coherence_system(LambdaWord::parse("11"));
  CHECK(sys.variable_count() == 2);
  CHECK(feasibility(sys).feasible);

  const auto yes = is_coherent_path(LambdaWord::parse("12121"));
  CHECK(yes.coherent);
  REQUIRE(yes.witness.has_value());
  CHECK(word_of_functional(*yes.witness, Composition::parse("3,2")).compact() == "12121");

  const auto no = is_coherent_path(LambdaWord::parse("12211"));
  CHECK_FALSE(no.coherent);
  CHECK_FALSE(no.witness.has_value());
  CHECK_FALSE(no.feasibility.certificate.empty());

  for (const auto& w : enumerate_words(Composition::parse("1,1,1,1"))) {
    CHECK(is_coherent_path(w).coherent);
  }
}

TEST_CASE("coherence equals non-nesting and the witness round trips (n <= 7)") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      for (const auto& w : enumerate_words(lambda)) {
        const auto result = is_coherent_path(w);
        REQUIRE(result.coherent == oracle::non_nesting(w.letters()));
        if (result.coherent) {
          REQUIRE(result.witness.has_value());
          CHECK(result.witness->is_generic(lambda));
          CHECK(word_of_functional(*result.witness, lambda) == w);
          CHECK(strictly_increasing(delta_sequence(w, *result.witness)));
        } else {
          const auto sys = path_coherence_system(w);
          const auto weight = certificate_weight(sys, result.feasibility.certificate);
          CHECK(weight.closes);
          CHECK((weight.offset < 0 || (weight.offset == 0 && weight.strict_edges > 0)));
        }
      }
    }
  }
}

TEST_CASE("sorting law for random generic functionals") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> parts(1 + rng() % 3);
    for (int& p : parts) p = 1 + static_cast<int>(rng() % 3);
    const Composition lambda(parts);
    std::vector<Rational> aprime;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Rational a(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
      a.canonicalize();
      aprime.push_back(a);
    }
    const auto c = functional(aprime);
    if (!c.is_generic(lambda)) {
      CHECK_THROWS_AS(word_of_functional(c, lambda), NonGenericFunctional);
      continue;
    }
    const auto target = word_of_functional(c, lambda);
    CHECK(is_non_nesting(target));
    for (const auto& w : enumerate_words(lambda)) {
      CHECK(strictly_increasing(delta_sequence(w, c)) == (w == target));
    }
  }
}

TEST_CASE("region census: image of witnesses is exactly the non-nesting words") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      std::set<std::vector<int>> image, expected;
      for (const auto& w : enumerate_words(lambda)) {
        if (oracle::non_nesting(w.letters())) expected.insert(w.letters());
        const auto r = is_coherent_path(w);
        if (r.coherent) image.insert(region_of_point(*r.witness, lambda).letters());
      }
      CHECK(image == expected);
    }
  }
}

TEST_CASE("subdivision coherence examples") {
  const auto lambda = Composition::parse("4,3");
  const auto remark = OrderedPartition::parse("1|1,2|2|1,2|1", lambda);
  CHECK_FALSE(feasibility(subdivision_coherence_system(remark)).feasible);
  const auto verdict = is_coherent_subdivision(remark);
  CHECK_FALSE(verdict.coherent);
  CHECK(verdict.dimension == -1);

  const auto atom = OrderedPartition::parse("1|2|1|2|1|2|1", lambda);
  CHECK(feasibility(subdivision_coherence_system(atom)).feasible);

  const auto line = is_coherent_subdivision(OrderedPartition::parse("1|1,2", Composition::parse("2,1")));
  CHECK(line.coherent);
  CHECK(line.dimension == 1);

  const auto region = is_coherent_subdivision(OrderedPartition::singletons(LambdaWord::parse("12121")));
  CHECK(region.coherent);
  CHECK(region.dimension == 2);
}

TEST_CASE("atoms agree with path coherence, dimension d") {
  for (const char* text : {"2,2,2", "3,2,1", "1,3,2"}) {
    for (const auto& w : enumerate_words(Composition::parse(text))) {
      const auto r = is_coherent_subdivision(OrderedPartition::singletons(w));
      CHECK(r.coherent == is_non_nesting(w));
      if (r.coherent) CHECK(r.dimension == w.d());
    }
  }
}

namespace {

// Letters sharing a block are pinned to each other; count the classes.
int block_graph_components(const OrderedPartition& rho) {
  const int d = rho.composition().d();
  std::vector<int> parent(d);
  for (int i = 0; i < d; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = d;
  for (const auto& block : rho.blocks())
    for (std::size_t t = 1; t < block.size(); ++t) {
      const int a = find(block[0] - 1), b = find(block[t] - 1);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components;
}

}  // namespace

TEST_CASE("block/dimension relation and ordering cross-check") {
  // n - m = d - dim fails once two blocks repeat a letter pair: (12|12)
  // over (2,2) is the line x_1 = x_2 with n - m = 2 but d - dim = 1.
  const auto repeated = is_coherent_subdivision(OrderedPartition::parse("1,2|1,2", Composition::parse("2,2")));
  CHECK(repeated.coherent);
  CHECK(repeated.dimension == 1);

  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      for_each_proper_partition(lambda, [&](const OrderedPartition& rho) {
        const auto r = is_coherent_subdivision(rho);
        if (r.coherent) {
          CHECK(r.dimension == block_graph_components(rho));
          CHECK(n - static_cast<int>(rho.block_count()) >= lambda.d() - r.dimension);
        }
        if (n <= 6) {
          const auto pairwise = feasibility(subdivision_coherence_system(rho, BlockOrdering::Pairwise));
          CHECK(pairwise.feasible == r.coherent);
          if (pairwise.feasible) CHECK(pairwise.dimension == r.dimension);
        }
      });
    }
  }
}
