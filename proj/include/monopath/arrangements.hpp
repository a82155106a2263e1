#pragma once

#include <cstdint>
#include <vector>

#include "monopath/caps.hpp"
#include "monopath/composition.hpp"
#include "monopath/numeric.hpp"
#include "monopath/polynomial.hpp"
#include "monopath/word.hpp"

namespace monopath {

// x_i - x_j = s with 1 <= i < j <= d.
struct Hyperplane {
  int i = 0;
  int j = 0;
  int s = 0;

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

struct DeformedArrangement {
  int d = 0;
  std::vector<Hyperplane> hyperplanes;  // sorted, distinct
};

// x_i - x_j = -lambda_i + 1, ..., lambda_j - 1 for every i < j.
DeformedArrangement build_arrangement(const Composition& lambda);

// q * prod_{j = n-d+1}^{n-1} (q - j).
Polynomial char_poly_closed(const Composition& lambda);

bool is_prime(std::uint64_t q);

// Points of (Z/q)^d off every hyperplane reduced mod q; serial grid scan.
// Requires q prime, q > n and q^d within caps.field_grid.
BigInt char_poly_finite_field(const Composition& lambda, std::uint64_t q, const Caps& caps = {});

// (-1)^d chi(-1).
BigInt region_count(const Composition& lambda);

BigInt stirling2(int d, int r);

// Lower faces of dimension d - k of the monotone path polytope for
// lambda = (2, ..., 2); equivalently faces of dimension k of the Catalan
// arrangement.
BigInt catalan_face_count(int d, int k);

// Element (j_1, ..., j_d) + H of Z_{n+1}^d / H with H = <(1, ..., 1)>.
class CosetLabel {
 public:
  CosetLabel(std::vector<int> representative, int modulus);

  const std::vector<int>& representative() const { return rep_; }
  int modulus() const { return modulus_; }
  // Representative shifted so its first coordinate is 0.
  std::vector<int> canonical() const;
  bool has_distinct_coordinates() const;

  friend bool operator==(const CosetLabel& a, const CosetLabel& b) {
    return a.modulus_ == b.modulus_ && a.canonical() == b.canonical();
  }

 private:
  std::vector<int> rep_;
  int modulus_;
};

// j_i = first (1-based) position of letter i, taken mod n + 1. Throws
// NestingWord for nesting input.
CosetLabel coset_map(const LambdaWord& w);

// Whether coset_map is injective on non-nesting words with image exactly the
// cosets whose coordinates are pairwise distinct.
bool verify_coset_bijection(const Composition& lambda, const Caps& caps = {});

}  // namespace monopath
