#pragma once

#include <cstdint>
#include <vector>

#include "monopath/numeric.hpp"

namespace monopath {

// value(u) - value(v) <= offset, or < offset when strict.
struct DifferenceConstraint {
  int u = 0;
  int v = 0;
  std::int64_t offset = 0;
  bool strict = false;

  friend bool operator==(const DifferenceConstraint&, const DifferenceConstraint&) = default;
};

class DifferenceConstraintSystem {
 public:
  explicit DifferenceConstraintSystem(int variable_count);

  int variable_count() const { return variable_count_; }
  const std::vector<DifferenceConstraint>& constraints() const { return constraints_; }

  void add_le(int u, int v, std::int64_t offset);  // u - v <= offset
  void add_lt(int u, int v, std::int64_t offset);  // u - v <  offset
  void add_eq(int u, int v, std::int64_t offset);  // u - v == offset, two opposite <=

  // Whether an assignment satisfies every constraint (strict ones strictly).
  bool satisfied_by(const std::vector<Rational>& values) const;

 private:
  void add(DifferenceConstraint c);

  int variable_count_;
  std::vector<DifferenceConstraint> constraints_;
};

struct FeasibilityResult {
  bool feasible = false;
  // Feasible: one value per variable, every constraint holds exactly.
  std::vector<Rational> witness;
  // Infeasible: indices into constraints() forming a cycle u_0 <- u_1 <- ...
  // whose offsets sum to < 0, or to 0 with a strict member.
  std::vector<std::size_t> certificate;
  // Feasible: dimension of the solution set, the number of classes of
  // variables whose differences are pinned by the system. -1 otherwise.
  int dimension = -1;
};

// Bellman-Ford on integer weights (V + 1) * offset - [strict], which makes a
// cycle negative exactly when its (offset, strict count) pair is forbidden.
// Potentials divided by V + 1 give the rational witness.
FeasibilityResult feasibility(const DifferenceConstraintSystem& system);

// Sum of offsets along a certificate and whether it holds a strict edge.
struct CycleWeight {
  std::int64_t offset = 0;
  int strict_edges = 0;
  bool closes = false;  // consecutive constraints chain and the cycle closes
};
CycleWeight certificate_weight(const DifferenceConstraintSystem& system,
                               const std::vector<std::size_t>& certificate);

}  // namespace monopath
