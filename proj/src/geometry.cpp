#include "monopath/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "monopath/coherence.hpp"
#include "monopath/combinatorics.hpp"
#include "monopath/errors.hpp"

namespace monopath {

RationalVector lift(const std::vector<int>& x, const Composition& lambda) {
  if (static_cast<int>(x.size()) != lambda.d()) throw OutOfBox("point has the wrong dimension");
  RationalVector out(x.size() + 1);
  Rational height = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > lambda.parts()[i]) throw OutOfBox("point outside B(lambda)");
    out[i] = x[i];
    height += x[i] * x[i];
  }
  out[x.size()] = height;
  return out;
}

std::vector<std::vector<int>> pile_vertices(const Composition& lambda, const Caps& caps) {
  long double total = 1;
  for (int p : lambda.parts()) total *= p + 1;
  if (total > static_cast<long double>(caps.box_points)) {
    throw CapExceeded("box has more than " + std::to_string(caps.box_points) + " lattice points");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> x(lambda.d(), 0);
  while (true) {
    out.push_back(x);
    int i = 0;
    for (; i < lambda.d(); ++i) {
      if (++x[i] <= lambda.parts()[i]) break;
      x[i] = 0;
    }
    if (i == lambda.d()) break;
  }
  return out;
}

LiftedPath::LiftedPath(std::vector<std::vector<std::int64_t>> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidInput("lifted path needs at least one edge");
}

LiftedPath lifted_path(const LambdaWord& w) {
  const auto path = word_to_path(w);
  std::vector<std::vector<std::int64_t>> points;
  points.reserve(path.size());
  for (const auto& v : path.points()) {
    std::vector<std::int64_t> p(v.begin(), v.end());
    std::int64_t height = 0;
    for (int x : v) height += static_cast<std::int64_t>(x) * x;
    p.push_back(height);
    points.push_back(std::move(p));
  }
  return LiftedPath(std::move(points));
}

RationalVector path_integral(const LiftedPath& gamma) {
  // (1/n) sum_k (g_{k-1} + g_k)/2 = (g_0 + g_n + 2 sum_{0<k<n} g_k) / (2n).
  const std::size_t n = gamma.size() - 1;
  const std::size_t dim = gamma[0].size();
  std::vector<std::int64_t> twice(dim, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::int64_t weight = (k == 0 || k == n) ? 1 : 2;
    for (std::size_t c = 0; c < dim; ++c) twice[c] += weight * gamma[k][c];
  }
  RationalVector out(dim);
  const auto denom = static_cast<long>(2 * n);
  for (std::size_t c = 0; c < dim; ++c) {
    out[c] = Rational(static_cast<long>(twice[c]), denom);
    out[c].canonicalize();
  }
  return out;
}

RationalVector path_average(const LambdaWord& w) { return path_integral(lifted_path(w)); }

namespace {

void check_swappable(const LambdaWord& w, int pos) {
  if (pos < 0 || pos + 1 >= w.n()) throw NotSwappable("swap position out of range");
  if (w[pos] >= w[pos + 1]) {
    throw NotSwappable("positions " + std::to_string(pos) + ", " + std::to_string(pos + 1) +
                       " do not hold an ascending pair of distinct letters");
  }
}

}  // namespace

RationalVector swap_difference_formula(const LambdaWord& w, int pos) {
  check_swappable(w, pos);
  const int i = w[pos];
  const int j = w[pos + 1];
  std::vector<int> m(w.d(), 0);
  for (int k = 0; k < pos; ++k) ++m[w[k] - 1];
  RationalVector out(w.d() + 1);
  out[i - 1] = -1;
  out[j - 1] = 1;
  out[w.d()] = 2 * m[j - 1] - 2 * m[i - 1];
  out *= Rational(1, w.n());
  return out;
}

RationalVector swap_difference(const LambdaWord& w, int pos) {
  check_swappable(w, pos);
  auto letters = w.letters();
  std::swap(letters[pos], letters[pos + 1]);
  const LambdaWord swapped(std::move(letters), w.composition());
  RationalVector diff = path_average(swapped) - path_average(w);
  if (!(diff == swap_difference_formula(w, pos))) {
    throw InvariantViolation("swap difference identity fails for " + w.to_string());
  }
  return diff;
}

std::vector<RationalVector> ZonotopeSpec::generators() const {
  std::vector<RationalVector> out;
  out.reserve(generator_count());
  for (const auto& g : pair_generators) out.push_back(g.direction);
  RationalVector up(d + 1);
  up[d] = vertical;
  out.push_back(std::move(up));
  return out;
}

Rational default_vertical_length(const Composition& lambda) {
  long squares = 0;
  for (int p : lambda.parts()) squares += static_cast<long>(p) * p;
  return Rational(2L * lambda.n() * squares);
}

ZonotopeSpec zonotope_generators(const Composition& lambda, const std::optional<Rational>& s) {
  if (s && *s <= 0) throw InvalidInput("vertical summand length must be positive");
  ZonotopeSpec spec;
  spec.d = lambda.d();
  spec.vertical = s ? *s : default_vertical_length(lambda);
  spec.scale = Rational(1, lambda.n());
  for (int i = 1; i <= lambda.d(); ++i) {
    for (int j = i + 1; j <= lambda.d(); ++j) {
      for (int k = 0; k < lambda.part(i); ++k) {
        for (int l = 0; l < lambda.part(j); ++l) {
          RationalVector dir(lambda.d() + 1);
          dir[i - 1] = -1;
          dir[j - 1] = 1;
          dir[lambda.d()] = 2 * l - 2 * k;
          spec.pair_generators.push_back({i, j, k, l, std::move(dir)});
        }
      }
    }
  }
  return spec;
}

std::vector<UpperFacetPath> upper_facet_paths(const Composition& lambda, const Caps& caps) {
  if (lambda.d() > caps.permutation_degree) {
    throw CapExceeded("upper_facet_paths: d = " + std::to_string(lambda.d()) + " exceeds cap " +
                      std::to_string(caps.permutation_degree));
  }
  const int d = lambda.d();
  std::vector<int> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<UpperFacetPath> out;
  do {
    // Each corner-to-corner edge covers lambda_{sigma_t} units of pi, so its
    // trapezoid weight is lambda_{sigma_t} (P_{t-1} + P_t) / 2.
    RationalVector corner(d + 1);
    RationalVector acc(d + 1);
    for (int letter : sigma) {
      const int len = lambda.part(letter);
      RationalVector next = corner;
      next[letter - 1] += len;
      next[d] += len * len;
      acc += Rational(len, 2) * (corner + next);
      corner = std::move(next);
    }
    acc *= Rational(1, lambda.n());
    out.push_back({sigma, std::move(acc)});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

bool vertex_certificate(const LambdaWord& w, const Caps& caps) {
  const PathCoherence coherence = is_coherent_path(w);
  if (!coherence.coherent) throw NestingWord(w.to_string() + " is nesting");
  const RationalVector c = coherence.witness->coefficients();
  const Rational own = c.dot(path_average(w));
  bool minimal = true;
  for_each_word(w.composition(), [&](std::span<const int> letters) {
    if (!minimal || std::equal(letters.begin(), letters.end(), w.letters().begin())) return;
    const LambdaWord u({letters.begin(), letters.end()}, w.composition());
    if (!(own < c.dot(path_average(u)))) minimal = false;
  }, caps);
  return minimal;
}

}  // namespace monopath
