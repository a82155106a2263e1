#pragma once

#include <optional>
#include <vector>

#include "monopath/difference_constraints.hpp"
#include "monopath/numeric.hpp"
#include "monopath/ordered_partition.hpp"
#include "monopath/word.hpp"

namespace monopath {

// c(x) = a_1 x_1 + ... + a_d x_d + (1/2) x_{d+1}, stored through the shifted
// coefficients a'_i = a_i + 1/2. The point (a'_1, ..., a'_d) is where c sits
// relative to the deformed arrangement.
class GenericFunctional {
 public:
  explicit GenericFunctional(std::vector<Rational> aprime);

  const std::vector<Rational>& aprime() const { return aprime_; }
  int d() const { return static_cast<int>(aprime_.size()); }

  // (a_1, ..., a_d, 1/2) as a vector acting on R^{d+1}.
  RationalVector coefficients() const;
  Rational evaluate(const RationalVector& x) const;

  // Whether the n values a'_i + m (0 <= m < lambda_i) are pairwise distinct.
  bool is_generic(const Composition& lambda) const;

 private:
  std::vector<Rational> aprime_;
};

// k-th term a'_{w_k} + m_k: the increment of c along the k-th edge of the
// lifted path.
std::vector<Rational> delta_sequence(const LambdaWord& w, const GenericFunctional& c);

// w^c: sorting the values a'_i + m places letter i at the slot of each of its
// values. Throws NonGenericFunctional on a tie.
LambdaWord word_of_functional(const GenericFunctional& c, const Composition& lambda);

// The region of the deformed arrangement containing a generic point, named
// by its (always non-nesting) word.
LambdaWord region_of_point(const GenericFunctional& c, const Composition& lambda);

// y_1 < ... < y_n plus y_k = y_j + 1 for consecutive copies j < k of a letter.
DifferenceConstraintSystem path_coherence_system(const LambdaWord& w);

struct PathCoherence {
  bool coherent = false;
  std::optional<GenericFunctional> witness;   // word_of_functional(witness) == w
  FeasibilityResult feasibility;
};

PathCoherence is_coherent_path(const LambdaWord& w);

enum class BlockOrdering {
  Adjacent,  // one strict constraint per block boundary
  Pairwise,  // every cross-block pair; slower, kept as a cross-check
};

// Variables x_1..x_d; the t-th copy of letter i reads x_i + (t - 1). Equal
// inside a block, strictly increasing from block to block.
DifferenceConstraintSystem subdivision_coherence_system(
    const OrderedPartition& rho, BlockOrdering ordering = BlockOrdering::Adjacent);

struct SubdivisionCoherence {
  bool coherent = false;
  int dimension = -1;  // dimension of the arrangement face, when coherent
  FeasibilityResult feasibility;
};

SubdivisionCoherence is_coherent_subdivision(const OrderedPartition& rho);

}  // namespace monopath
