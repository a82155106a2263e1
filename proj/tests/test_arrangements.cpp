#include <doctest.h>

#include <set>

#include "monopath/arrangements.hpp"
#include "monopath/combinatorics.hpp"
#include "monopath/errors.hpp"
#include "oracles.hpp"

using namespace monopath;

TEST_CASE("build_arrangement") {
  CHECK(build_arrangement(Composition::parse("2,1")).hyperplanes ==
        std::vector<Hyperplane>{{1, 2, -1}, {1, 2, 0}});
  CHECK(build_arrangement(Composition::parse("1,1")).hyperplanes == std::vector<Hyperplane>{{1, 2, 0}});
  const auto catalan = build_arrangement(Composition::parse("2,2,2"));
  CHECK(catalan.d == 3);
  CHECK(catalan.hyperplanes.size() == 9);
  for (const auto& h : catalan.hyperplanes) CHECK((h.s >= -1 && h.s <= 1));

  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      std::size_t expected = 0;
      for (int i = 1; i <= lambda.d(); ++i)
        for (int j = i + 1; j <= lambda.d(); ++j) expected += lambda.part(i) + lambda.part(j) - 1;
      CHECK(build_arrangement(lambda).hyperplanes.size() == expected);
    }
  }
}

TEST_CASE("char_poly_closed") {
  const auto q = Polynomial::monomial_root(0);
  CHECK(char_poly_closed(Composition::parse("2,2,2")) ==
        q * Polynomial::monomial_root(4) * Polynomial::monomial_root(5));
  CHECK(char_poly_closed(Composition::parse("2,1")) == q * Polynomial::monomial_root(2));
  CHECK(char_poly_closed(Composition::parse("1")) == q);
  CHECK(char_poly_closed(Composition::parse("2,2,2")).to_string() == "q^3 - 9q^2 + 20q");
}

TEST_CASE("char_poly_finite_field examples and errors") {
  CHECK(char_poly_finite_field(Composition::parse("2,1"), 5) == 15);
  CHECK(char_poly_finite_field(Composition::parse("1,1"), 3) == 6);
  CHECK(char_poly_finite_field(Composition::parse("2,2"), 7) == 28);
  CHECK(oracle::field_points({2, 2}, 7) == 28);
  CHECK_THROWS_AS(char_poly_finite_field(Composition::parse("2,1"), 4), NotPrime);
  CHECK_THROWS_AS(char_poly_finite_field(Composition::parse("2,1"), 3), InvalidInput);
  Caps small;
  small.field_grid = 100;
  CHECK_THROWS_AS(char_poly_finite_field(Composition::parse("1,1,1"), 5, small), TooLarge);
}

TEST_CASE("finite-field count matches the closed form (n <= 5, d <= 3, q <= 23)") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      if (lambda.d() > 3) continue;
      const auto chi = char_poly_closed(lambda);
      for (std::uint64_t q = n + 1; q <= 23; ++q) {
        if (!is_prime(q)) continue;
        const auto count = char_poly_finite_field(lambda, q);
        CHECK(count == chi.evaluate(BigInt(static_cast<unsigned long>(q))));
        CHECK(count == BigInt(std::to_string(oracle::field_points(lambda.parts(), static_cast<long>(q)))));
      }
    }
  }
}

TEST_CASE("is_prime") {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 0; q < 60; ++q)
    if (is_prime(q)) primes.push_back(q);
  CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59});
  CHECK(is_prime(999983));
  CHECK_FALSE(is_prime(999981));
}

TEST_CASE("region counts") {
  CHECK(region_count(Composition::parse("2,2,2")) == 30);
  CHECK(region_count(Composition::parse("3,2,1")) == 30);
  CHECK(region_count(Composition::parse("1,1,1")) == 6);
  for (int n = 1; n <= 8; ++n) {
    std::map<int, BigInt> by_d;
    for (const auto& lambda : compositions_of(n)) {
      const auto regions = region_count(lambda);
      CHECK(regions == coherent_count_formula(lambda));
      if (n <= 6) {
        std::uint64_t census = 0;
        for_each_word(lambda, [&](std::span<const int> w) { census += oracle::non_nesting({w.begin(), w.end()}); });
        CHECK(regions == BigInt(std::to_string(census)));
      }
      auto [it, inserted] = by_d.emplace(lambda.d(), regions);
      if (!inserted) CHECK(it->second == regions);
    }
  }
}

TEST_CASE("stirling2") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  for (int d = 0; d <= 8; ++d) CHECK(stirling2(d, d) == 1);
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) CHECK(stirling2(n, k) == oracle::stirling2(n, k));
}

TEST_CASE("catalan face counts") {
  CHECK(catalan_face_count(3, 3) == 30);
  CHECK(catalan_face_count(3, 2) == 42);
  CHECK(catalan_face_count(3, 1) == 13);
  CHECK(catalan_face_count(2, 2) == 4);
  CHECK(catalan_face_count(2, 1) == 3);
  for (int d = 1; d <= 5; ++d) CHECK(catalan_face_count(d, d) == region_count(all_twos(d)));
  for (int d = 2; d <= 3; ++d) {
    BigInt euler = 0;
    for (int k = 1; k <= d; ++k) euler += ((d - k) % 2 == 0 ? 1 : -1) * catalan_face_count(d, k);
    CHECK(euler == 1);
  }
}

TEST_CASE("coset_map examples") {
  const auto lambda = Composition::parse("2,1");
  const auto a = coset_map(LambdaWord::parse("112", lambda));
  const auto b = coset_map(LambdaWord::parse("121", lambda));
  const auto c = coset_map(LambdaWord::parse("211", lambda));
  CHECK(a == CosetLabel({1, 3}, 4));
  CHECK(b == CosetLabel({1, 2}, 4));
  CHECK(c == CosetLabel({2, 1}, 4));
  CHECK_FALSE(a == b);
  CHECK_FALSE(b == c);
  CHECK_FALSE(a == c);
  CHECK(coset_map(LambdaWord::parse("12")) == CosetLabel({1, 2}, 3));
  CHECK(coset_map(LambdaWord::parse("21")) == CosetLabel({2, 1}, 3));
  CHECK(CosetLabel({1, 2}, 3) == CosetLabel({2, 0}, 3));
  CHECK(CosetLabel({3, 1}, 4).canonical() == std::vector<int>{0, 2});
  CHECK_FALSE(CosetLabel({1, 1}, 3).has_distinct_coordinates());
  CHECK_THROWS_AS(coset_map(LambdaWord::parse("1221")), NestingWord);
}

TEST_CASE("coset bijection for n <= 7") {
  CHECK(verify_coset_bijection(Composition::parse("2,1")));
  CHECK(verify_coset_bijection(Composition::parse("2,2,2")));
  CHECK(verify_coset_bijection(Composition::parse("1,1")));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      CHECK(verify_coset_bijection(lambda));
      // independent check: injective on the oracle's non-nesting words
      std::set<std::vector<int>> labels;
      std::size_t nn = 0;
      for (const auto& w : oracle::all_words(lambda.parts())) {
        if (!oracle::non_nesting(w)) continue;
        ++nn;
        labels.insert(coset_map(LambdaWord(w, lambda)).canonical());
      }
      CHECK(labels.size() == nn);
      BigInt falling = 1;
      for (int t = n; t >= n - lambda.d() + 2; --t) falling *= t;
      CHECK(BigInt(std::to_string(nn)) == falling);
    }
  }
}
