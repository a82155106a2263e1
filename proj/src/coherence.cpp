#include "monopath/coherence.hpp"

#include <algorithm>
#include <tuple>

#include "monopath/combinatorics.hpp"
#include "monopath/errors.hpp"

namespace monopath {

GenericFunctional::GenericFunctional(std::vector<Rational> aprime) : aprime_(std::move(aprime)) {
  if (aprime_.empty()) throw InvalidInput("functional needs at least one coefficient");
}

RationalVector GenericFunctional::coefficients() const {
  RationalVector out(aprime_.size() + 1);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < aprime_.size(); ++i) out[i] = aprime_[i] - half;
  out[aprime_.size()] = half;
  return out;
}

Rational GenericFunctional::evaluate(const RationalVector& x) const {
  return coefficients().dot(x);
}

namespace {

struct ShiftedValue {
  Rational value;
  int letter;
  int shift;
};

std::vector<ShiftedValue> shifted_values(const GenericFunctional& c, const Composition& lambda) {
  if (c.d() != lambda.d()) throw InvalidInput("functional and composition disagree on d");
  std::vector<ShiftedValue> values;
  values.reserve(lambda.n());
  for (int i = 1; i <= lambda.d(); ++i) {
    for (int m = 0; m < lambda.part(i); ++m) values.push_back({c.aprime()[i - 1] + m, i, m});
  }
  // Ties broken by (letter, shift) so a collision is reported deterministically.
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    return std::tie(a.value, a.letter, a.shift) < std::tie(b.value, b.letter, b.shift);
  });
  return values;
}

}  // namespace

bool GenericFunctional::is_generic(const Composition& lambda) const {
  const auto values = shifted_values(*this, lambda);
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k].value == values[k - 1].value) return false;
  }
  return true;
}

std::vector<Rational> delta_sequence(const LambdaWord& w, const GenericFunctional& c) {
  if (c.d() != w.d()) throw InvalidInput("functional and word disagree on d");
  const auto occ = w.occurrence_indices();
  std::vector<Rational> out;
  out.reserve(w.n());
  for (int k = 0; k < w.n(); ++k) out.push_back(c.aprime()[w[k] - 1] + occ[k]);
  return out;
}

LambdaWord word_of_functional(const GenericFunctional& c, const Composition& lambda) {
  const auto values = shifted_values(c, lambda);
  std::vector<int> letters;
  letters.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0 && values[k].value == values[k - 1].value) {
      throw NonGenericFunctional(values[k - 1].letter, values[k - 1].shift, values[k].letter,
                                 values[k].shift);
    }
    letters.push_back(values[k].letter);
  }
  return LambdaWord(std::move(letters), lambda);
}

LambdaWord region_of_point(const GenericFunctional& c, const Composition& lambda) {
  LambdaWord w = word_of_functional(c, lambda);
  if (!is_non_nesting(w)) {
    throw InvariantViolation("region word " + w.to_string() + " is nesting");
  }
  return w;
}

DifferenceConstraintSystem path_coherence_system(const LambdaWord& w) {
  DifferenceConstraintSystem sys(w.n());
  for (int k = 0; k + 1 < w.n(); ++k) sys.add_lt(k, k + 1, 0);
  std::vector<int> last(w.d(), -1);
  for (int k = 0; k < w.n(); ++k) {
    const int letter = w[k] - 1;
    if (last[letter] >= 0) sys.add_eq(k, last[letter], 1);
    last[letter] = k;
  }
  return sys;
}

PathCoherence is_coherent_path(const LambdaWord& w) {
  PathCoherence out;
  out.feasibility = feasibility(path_coherence_system(w));
  out.coherent = out.feasibility.feasible;
  if (!out.coherent) return out;

  const auto first = w.first_positions();
  std::vector<Rational> aprime;
  aprime.reserve(w.d());
  for (int pos : first) aprime.push_back(out.feasibility.witness[pos]);
  GenericFunctional c(aprime);

  if (!c.is_generic(w.composition())) {
    const Rational eps(1, 2 * (w.n() + 1) * (w.n() + 1));
    for (int i = 0; i < w.d(); ++i) aprime[i] += eps * (i + 1);
    c = GenericFunctional(aprime);
  }
  const auto delta = delta_sequence(w, c);
  const bool increasing =
      std::adjacent_find(delta.begin(), delta.end(), std::greater_equal<>()) == delta.end();
  if (!increasing || word_of_functional(c, w.composition()) != w) {
    throw InvariantViolation("coherence witness does not select " + w.to_string());
  }
  out.witness = std::move(c);
  return out;
}

namespace {

struct Expression {
  int variable;  // 0-based letter
  int shift;     // t - 1
};

std::vector<std::vector<Expression>> shifted_blocks(const OrderedPartition& rho) {
  std::vector<int> seen(rho.composition().d(), 0);
  std::vector<std::vector<Expression>> out;
  out.reserve(rho.block_count());
  for (const auto& block : rho.blocks()) {
    std::vector<Expression> exprs;
    for (int letter : block) exprs.push_back({letter - 1, seen[letter - 1]++});
    out.push_back(std::move(exprs));
  }
  return out;
}

// x_a + s_a < x_b + s_b  <=>  x_a - x_b < s_b - s_a
void add_less(DifferenceConstraintSystem& sys, const Expression& a, const Expression& b) {
  sys.add_lt(a.variable, b.variable, b.shift - a.shift);
}

}  // namespace

DifferenceConstraintSystem subdivision_coherence_system(const OrderedPartition& rho,
                                                        BlockOrdering ordering) {
  const auto blocks = shifted_blocks(rho);
  DifferenceConstraintSystem sys(rho.composition().d());
  for (const auto& block : blocks) {
    for (std::size_t t = 1; t < block.size(); ++t) {
      sys.add_eq(block[t].variable, block[0].variable, block[0].shift - block[t].shift);
    }
  }
  for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
    if (ordering == BlockOrdering::Adjacent) {
      add_less(sys, blocks[j].front(), blocks[j + 1].front());
      continue;
    }
    for (std::size_t l = j + 1; l < blocks.size(); ++l) {
      for (const auto& a : blocks[j]) {
        for (const auto& b : blocks[l]) add_less(sys, a, b);
      }
    }
  }
  return sys;
}

SubdivisionCoherence is_coherent_subdivision(const OrderedPartition& rho) {
  SubdivisionCoherence out;
  out.feasibility = feasibility(subdivision_coherence_system(rho));
  out.coherent = out.feasibility.feasible;
  out.dimension = out.feasibility.dimension;
  return out;
}

}  // namespace monopath
