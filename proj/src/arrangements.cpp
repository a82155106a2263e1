#include "monopath/arrangements.hpp"

#include <algorithm>
#include <set>

#include "monopath/combinatorics.hpp"
#include "monopath/detail/field_grid.hpp"
#include "monopath/errors.hpp"

namespace monopath {

DeformedArrangement build_arrangement(const Composition& lambda) {
  DeformedArrangement out;
  out.d = lambda.d();
  for (int i = 1; i <= lambda.d(); ++i) {
    for (int j = i + 1; j <= lambda.d(); ++j) {
      for (int s = -lambda.part(i) + 1; s <= lambda.part(j) - 1; ++s) {
        out.hyperplanes.push_back({i, j, s});
      }
    }
  }
  std::sort(out.hyperplanes.begin(), out.hyperplanes.end());
  out.hyperplanes.erase(std::unique(out.hyperplanes.begin(), out.hyperplanes.end()),
                        out.hyperplanes.end());
  return out;
}

Polynomial char_poly_closed(const Composition& lambda) {
  Polynomial chi({BigInt(0), BigInt(1)});
  for (int j = lambda.n() - lambda.d() + 1; j <= lambda.n() - 1; ++j) {
    chi *= Polynomial::monomial_root(j);
  }
  return chi;
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t f = 3; f * f <= q; f += 2) {
    if (q % f == 0) return false;
  }
  return true;
}

namespace detail {

FieldGrid::FieldGrid(const Composition& lambda, std::uint64_t q) : d_(lambda.d()), q_(q), size_(1) {
  for (int i = 0; i < d_; ++i) size_ *= q_;
  for (int i = 1; i <= d_; ++i) {
    for (int j = i + 1; j <= d_; ++j) {
      std::vector<char> row(q_, 0);
      for (long s = -lambda.part(i) + 1; s <= lambda.part(j) - 1; ++s) {
        const long qq = static_cast<long>(q_);
        row[static_cast<std::size_t>(((s % qq) + qq) % qq)] = 1;
      }
      pairs_.emplace_back(i - 1, j - 1);
      forbidden_.push_back(std::move(row));
    }
  }
}

std::uint64_t FieldGrid::count_range(std::uint64_t begin, std::uint64_t end) const {
  if (begin >= end) return 0;
  std::vector<std::uint64_t> x(d_);
  std::uint64_t rest = begin;
  for (int i = 0; i < d_; ++i) {
    x[i] = rest % q_;
    rest /= q_;
  }
  std::uint64_t count = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    bool ok = true;
    for (std::size_t p = 0; p < pairs_.size() && ok; ++p) {
      const auto [i, j] = pairs_[p];
      const std::uint64_t r = (x[i] + q_ - x[j]) % q_;
      ok = !forbidden_[p][r];
    }
    count += ok ? 1 : 0;
    for (int i = 0; i < d_; ++i) {
      if (++x[i] < q_) break;
      x[i] = 0;
    }
  }
  return count;
}

}  // namespace detail

namespace detail {

void check_field_preconditions(const Composition& lambda, std::uint64_t q, const Caps& caps) {
  if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
  if (q <= static_cast<std::uint64_t>(lambda.n())) {
    throw InvalidInput("finite-field count needs q > n = " + std::to_string(lambda.n()));
  }
  long double grid = 1;
  for (int i = 0; i < lambda.d(); ++i) grid *= static_cast<long double>(q);
  if (grid > static_cast<long double>(caps.field_grid)) {
    throw TooLarge("q^d exceeds the grid cap " + std::to_string(caps.field_grid));
  }
}

}  // namespace detail

BigInt char_poly_finite_field(const Composition& lambda, std::uint64_t q, const Caps& caps) {
  detail::check_field_preconditions(lambda, q, caps);
  const detail::FieldGrid grid(lambda, q);
  return BigInt(std::to_string(grid.count_range(0, grid.size())));
}

BigInt region_count(const Composition& lambda) {
  const BigInt at_minus_one = char_poly_closed(lambda).evaluate(BigInt(-1));
  return lambda.d() % 2 == 0 ? at_minus_one : BigInt(-at_minus_one);
}

BigInt stirling2(int d, int r) {
  if (d < 0 || r < 0 || r > d) throw InvalidInput("stirling2 needs 0 <= r <= d");
  // Row-by-row recurrence S(m, t) = t S(m-1, t) + S(m-1, t-1).
  std::vector<BigInt> row(r + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= d; ++m) {
    for (int t = std::min(m, r); t >= 1; --t) row[t] = t * row[t] + row[t - 1];
    row[0] = 0;
  }
  return row[r];
}

BigInt catalan_face_count(int d, int k) {
  if (k < 1 || k > d) throw InvalidInput("catalan_face_count needs 1 <= k <= d");
  BigInt total = 0;
  for (int r = k; r <= d; ++r) {
    total += factorial(r - 1) * stirling2(d, r) * binomial(r, k) * binomial(r + k, k - 1);
  }
  return total;
}

CosetLabel::CosetLabel(std::vector<int> representative, int modulus)
    : rep_(std::move(representative)), modulus_(modulus) {
  if (modulus_ < 1 || rep_.empty()) throw InvalidInput("bad coset label");
  for (int& j : rep_) j = ((j % modulus_) + modulus_) % modulus_;
}

std::vector<int> CosetLabel::canonical() const {
  std::vector<int> out(rep_.size());
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    out[i] = ((rep_[i] - rep_[0]) % modulus_ + modulus_) % modulus_;
  }
  return out;
}

bool CosetLabel::has_distinct_coordinates() const {
  auto sorted = rep_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

CosetLabel coset_map(const LambdaWord& w) {
  if (!is_non_nesting(w)) throw NestingWord(w.to_string() + " is nesting");
  auto first = w.first_positions();
  for (int& j : first) ++j;
  return CosetLabel(std::move(first), w.n() + 1);
}

bool verify_coset_bijection(const Composition& lambda, const Caps& caps) {
  check_length_cap(lambda, caps.word_length, "verify_coset_bijection");
  const int modulus = lambda.n() + 1;
  std::set<std::vector<int>> image;
  bool ok = true;
  std::uint64_t words = 0;
  for_each_word(lambda, [&](std::span<const int> letters) {
    if (!is_non_nesting(letters, lambda.d())) return;
    ++words;
    const CosetLabel label = coset_map(LambdaWord({letters.begin(), letters.end()}, lambda));
    if (!label.has_distinct_coordinates()) ok = false;
    if (!image.insert(label.canonical()).second) ok = false;
  }, caps);

  // Canonical distinct-coordinate cosets: j_1 = 0, the rest distinct and nonzero.
  std::set<std::vector<int>> target;
  std::vector<int> tuple(lambda.d(), 0);
  std::vector<char> used(modulus, 0);
  used[0] = 1;
  auto fill = [&](auto&& self, int pos) -> void {
    if (pos == lambda.d()) {
      target.insert(tuple);
      return;
    }
    for (int v = 1; v < modulus; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      tuple[pos] = v;
      self(self, pos + 1);
      used[v] = 0;
    }
  };
  fill(fill, 1);
  return ok && image == target && words == image.size();
}

}  // namespace monopath
