#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monopath/caps.hpp"
#include "monopath/composition.hpp"
#include "monopath/numeric.hpp"
#include "monopath/word.hpp"

namespace monopath {

// (x, x_1^2 + ... + x_d^2) for an integer point of the box B(lambda).
RationalVector lift(const std::vector<int>& x, const Composition& lambda);

// B(lambda) cap Z^d, odometer order with x_1 fastest.
std::vector<std::vector<int>> pile_vertices(const Composition& lambda, const Caps& caps = {});

// Vertices of a monotone edge path in the lifted pile, in R^{d+1}. All
// coordinates are integers.
class LiftedPath {
 public:
  explicit LiftedPath(std::vector<std::vector<std::int64_t>> points);

  const std::vector<std::vector<std::int64_t>>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::int64_t>& operator[](std::size_t k) const { return points_[k]; }

 private:
  std::vector<std::vector<std::int64_t>> points_;
};

// gamma^w: the lattice path of w lifted pointwise.
LiftedPath lifted_path(const LambdaWord& w);

// I_gamma = (1/n) sum_k (gamma(k-1) + gamma(k)) / 2 for a path with n unit
// steps in the pi direction.
RationalVector path_integral(const LiftedPath& gamma);

// path_integral(lifted_path(w)).
RationalVector path_average(const LambdaWord& w);

// (1/n)(e_j - e_i + (2 m_j - 2 m_i) e_{d+1}) with (m_1..m_d) = v_pos, for the
// swap of positions pos, pos + 1 (0-based) holding i < j.
RationalVector swap_difference_formula(const LambdaWord& w, int pos);

// I of w with positions pos, pos + 1 swapped minus I of w, from two path
// integrals. Throws NotSwappable unless w[pos] < w[pos + 1], and
// InvariantViolation if the result differs from swap_difference_formula.
RationalVector swap_difference(const LambdaWord& w, int pos);

struct PairGenerator {
  int i = 0;  // 1-based letters, i < j
  int j = 0;
  int k = 0;  // 0 <= k < lambda_i
  int l = 0;  // 0 <= l < lambda_j
  RationalVector direction;  // e_j - e_i + (2l - 2k) e_{d+1}
};

// Z_d(lambda) = [0, s e_{d+1}] + sum of the pair segments; the monotone path
// polytope is cut from a translate of scale * Z_d(lambda).
struct ZonotopeSpec {
  int d = 0;
  std::vector<PairGenerator> pair_generators;
  Rational vertical;  // s
  Rational scale;     // 1/n

  // Pair generators in order, then s e_{d+1}.
  std::vector<RationalVector> generators() const;
  std::size_t generator_count() const { return pair_generators.size() + 1; }
};

// Default s = 2 n sum lambda_i^2.
Rational default_vertical_length(const Composition& lambda);
ZonotopeSpec zonotope_generators(const Composition& lambda,
                                 const std::optional<Rational>& s = std::nullopt);

struct UpperFacetPath {
  std::vector<int> sigma;   // permutation of 1..d
  RationalVector average;   // I of the path through the box corners
};

// Monotone paths on the upper facet lambda . x = x_{d+1}: for each sigma the
// corners 0, lambda_{s1} e_{s1}, ... lifted by f, traversed edge by edge.
std::vector<UpperFacetPath> upper_facet_paths(const Composition& lambda, const Caps& caps = {});

// Whether the witness functional of the non-nesting word w is strictly
// smaller at I_w than at I_u for every other lambda-word u.
bool vertex_certificate(const LambdaWord& w, const Caps& caps = {});

}  // namespace monopath
