#include "monopath/difference_constraints.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "monopath/errors.hpp"

namespace monopath {

DifferenceConstraintSystem::DifferenceConstraintSystem(int variable_count)
    : variable_count_(variable_count) {
  if (variable_count < 1) throw InvalidInput("difference system needs a variable");
}

void DifferenceConstraintSystem::add(DifferenceConstraint c) {
  if (c.u < 0 || c.v < 0 || c.u >= variable_count_ || c.v >= variable_count_) {
    throw InvalidInput("constraint variable out of range");
  }
  constraints_.push_back(c);
}

void DifferenceConstraintSystem::add_le(int u, int v, std::int64_t offset) {
  add({u, v, offset, false});
}

void DifferenceConstraintSystem::add_lt(int u, int v, std::int64_t offset) {
  add({u, v, offset, true});
}

void DifferenceConstraintSystem::add_eq(int u, int v, std::int64_t offset) {
  add({u, v, offset, false});
  add({v, u, -offset, false});
}

bool DifferenceConstraintSystem::satisfied_by(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != variable_count_) return false;
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) {
    const Rational diff = values[c.u] - values[c.v];
    return c.strict ? diff < c.offset : diff <= c.offset;
  });
}

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;

// Classes of variables i ~ j with shortest(i -> j) + shortest(j -> i) == 0.
// In a feasible system every zero-offset cycle is free of strict edges, so
// these are exactly the differences the system pins down.
int pinned_class_count(const DifferenceConstraintSystem& system) {
  const int n = system.variable_count();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n) * n, kUnreachable);
  auto at = [&](int a, int b) -> std::int64_t& { return dist[static_cast<std::size_t>(a) * n + b]; };
  for (int i = 0; i < n; ++i) at(i, i) = 0;
  // Edge v -> u with weight offset bounds u - v.
  for (const auto& c : system.constraints()) at(c.v, c.u) = std::min(at(c.v, c.u), c.offset);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (at(i, k) == kUnreachable) continue;
      for (int j = 0; j < n; ++j) {
        if (at(k, j) == kUnreachable) continue;
        at(i, j) = std::min(at(i, j), at(i, k) + at(k, j));
      }
    }
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int classes = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (at(i, j) == kUnreachable || at(j, i) == kUnreachable) continue;
      if (at(i, j) + at(j, i) != 0) continue;
      const int a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --classes;
      }
    }
  }
  return classes;
}

}  // namespace

FeasibilityResult feasibility(const DifferenceConstraintSystem& system) {
  const int n = system.variable_count();
  const auto& constraints = system.constraints();
  const std::int64_t scale = n + 1;

  // Virtual source at distance 0 to every variable.
  std::vector<std::int64_t> dist(n, 0);
  std::vector<std::int64_t> pred(n, -1);  // index of the relaxing constraint
  int last_relaxed = -1;
  for (int round = 0; round < n; ++round) {
    last_relaxed = -1;
    for (std::size_t e = 0; e < constraints.size(); ++e) {
      const auto& c = constraints[e];
      const std::int64_t weight = scale * c.offset - (c.strict ? 1 : 0);
      if (dist[c.v] + weight < dist[c.u]) {
        dist[c.u] = dist[c.v] + weight;
        pred[c.u] = static_cast<std::int64_t>(e);
        last_relaxed = c.u;
      }
    }
    if (last_relaxed < 0) break;
  }

  FeasibilityResult result;
  if (last_relaxed < 0) {
    result.feasible = true;
    result.witness.reserve(n);
    for (int i = 0; i < n; ++i) result.witness.emplace_back(Rational(dist[i], scale));
    for (auto& w : result.witness) w.canonicalize();
    result.dimension = pinned_class_count(system);
    return result;
  }

  // Walking n predecessors from a vertex relaxed in round n lands on the
  // negative cycle held by the predecessor graph.
  int x = last_relaxed;
  for (int i = 0; i < n; ++i) x = constraints[pred[x]].v;
  std::vector<std::size_t> cycle;
  int y = x;
  do {
    const auto e = static_cast<std::size_t>(pred[y]);
    cycle.push_back(e);
    y = constraints[e].v;
  } while (y != x);
  std::reverse(cycle.begin(), cycle.end());
  result.certificate = std::move(cycle);
  return result;
}

CycleWeight certificate_weight(const DifferenceConstraintSystem& system,
                               const std::vector<std::size_t>& certificate) {
  CycleWeight out;
  if (certificate.empty()) return out;
  const auto& cs = system.constraints();
  out.closes = true;
  for (std::size_t i = 0; i < certificate.size(); ++i) {
    const auto& c = cs.at(certificate[i]);
    const auto& next = cs.at(certificate[(i + 1) % certificate.size()]);
    out.offset += c.offset;
    out.strict_edges += c.strict ? 1 : 0;
    // Edge v -> u followed by an edge leaving u.
    if (next.v != c.u) out.closes = false;
  }
  return out;
}

}  // namespace monopath
