#include <doctest.h>

#include <random>

#include "monopath/difference_constraints.hpp"
#include "monopath/errors.hpp"

using namespace monopath;

TEST_CASE("feasible chain with an equality") {
  DifferenceConstraintSystem sys(2);
  sys.add_lt(0, 1, 0);  // y1 < y2
  sys.add_eq(1, 0, 1);  // y2 = y1 + 1
  const auto r = feasibility(sys);
  REQUIRE(r.feasible);
  CHECK(sys.satisfied_by(r.witness));
  CHECK(r.witness[1] - r.witness[0] == 1);
  CHECK(r.dimension == 1);
}

TEST_CASE("nesting obstruction is infeasible") {
  DifferenceConstraintSystem sys(4);
  sys.add_lt(0, 1, 0);
  sys.add_lt(1, 2, 0);
  sys.add_lt(2, 3, 0);
  sys.add_eq(3, 0, 1);
  sys.add_eq(2, 1, 1);
  const auto r = feasibility(sys);
  CHECK_FALSE(r.feasible);
  CHECK(r.dimension == -1);
  const auto weight = certificate_weight(sys, r.certificate);
  CHECK(weight.closes);
  CHECK((weight.offset < 0 || (weight.offset == 0 && weight.strict_edges > 0)));
}

TEST_CASE("empty system") {
  DifferenceConstraintSystem sys(3);
  const auto r = feasibility(sys);
  CHECK(r.feasible);
  CHECK(r.dimension == 3);
  CHECK(r.witness.size() == 3);
}

TEST_CASE("strict self-consistency") {
  DifferenceConstraintSystem loop(2);
  loop.add_le(0, 1, 0);
  loop.add_le(1, 0, 0);
  auto r = feasibility(loop);
  CHECK(r.feasible);
  CHECK(r.dimension == 1);

  loop.add_lt(0, 1, 0);
  r = feasibility(loop);
  CHECK_FALSE(r.feasible);
}

TEST_CASE("variable index range is validated") {
  DifferenceConstraintSystem sys(2);
  CHECK_THROWS_AS(sys.add_le(0, 2, 1), InvalidInput);
  CHECK_THROWS_AS(sys.add_lt(-1, 0, 1), InvalidInput);
  CHECK_THROWS_AS(DifferenceConstraintSystem(0), InvalidInput);
}

// Random systems: every witness satisfies the constraints exactly and every
// certificate is a forbidden cycle. Dimension is checked against a brute
// count of pinned classes via Floyd-style closure on small systems.
TEST_CASE("random systems yield valid witnesses or certificates") {
  std::mt19937 rng(12345);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 6);
    DifferenceConstraintSystem sys(v);
    const int m = static_cast<int>(rng() % 10);
    for (int c = 0; c < m; ++c) {
      const int a = static_cast<int>(rng() % v), b = static_cast<int>(rng() % v);
      const int offset = static_cast<int>(rng() % 7) - 3;
      switch (rng() % 3) {
        case 0: sys.add_le(a, b, offset); break;
        case 1: sys.add_lt(a, b, offset); break;
        default: sys.add_eq(a, b, offset); break;
      }
    }
    const auto r = feasibility(sys);
    if (r.feasible) {
      ++feasible;
      REQUIRE(r.witness.size() == static_cast<std::size_t>(v));
      CHECK(sys.satisfied_by(r.witness));
      CHECK(r.dimension >= 1);
      CHECK(r.dimension <= v);
    } else {
      ++infeasible;
      REQUIRE_FALSE(r.certificate.empty());
      const auto w = certificate_weight(sys, r.certificate);
      CHECK(w.closes);
      CHECK((w.offset < 0 || (w.offset == 0 && w.strict_edges > 0)));
    }
  }
  CHECK(feasible > 100);
  CHECK(infeasible > 100);
}

// Dimension: perturbing a witness along a free class must keep it feasible;
// the number of independent free directions equals the dimension.
TEST_CASE("dimension matches the number of independently movable classes") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 5);
    DifferenceConstraintSystem sys(v);
    for (int c = 0; c < 6; ++c) {
      const int a = static_cast<int>(rng() % v), b = static_cast<int>(rng() % v);
      const int offset = static_cast<int>(rng() % 5) - 2;
      if (rng() % 2) sys.add_eq(a, b, offset);
      else sys.add_lt(a, b, offset);
    }
    const auto r = feasibility(sys);
    if (!r.feasible) continue;
    // Variables i, j are pinned together iff adding x_i - x_j < witness gap
    // (or >) makes the system infeasible.
    std::vector<int> cls(v, -1);
    int classes = 0;
    for (int i = 0; i < v; ++i) {
      if (cls[i] >= 0) continue;
      cls[i] = classes;
      for (int j = i + 1; j < v; ++j) {
        if (cls[j] >= 0) continue;
        const Rational gap = r.witness[i] - r.witness[j];
        // Offsets are integers; scale is irrelevant since gaps are pinned to
        // integer values when pinned.
        if (gap.get_den() != 1) continue;
        const auto g = gap.get_num().get_si();
        DifferenceConstraintSystem lower = sys, upper = sys;
        lower.add_lt(i, j, g);
        upper.add_lt(j, i, -g);
        if (!feasibility(lower).feasible && !feasibility(upper).feasible) cls[j] = classes;
      }
      ++classes;
    }
    CHECK(r.dimension == classes);
  }
}
