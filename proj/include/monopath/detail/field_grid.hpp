#pragma once

#include <cstdint>
#include <vector>

#include "monopath/caps.hpp"
#include "monopath/composition.hpp"

namespace monopath::detail {

// Throws NotPrime, InvalidInput (q <= n) or TooLarge (q^d above the cap).
void check_field_preconditions(const Composition& lambda, std::uint64_t q, const Caps& caps);

// Scans points of (Z/q)^d, indexed x_1 + q x_2 + ... , and counts those with
// every difference x_i - x_j outside {-lambda_i + 1, ..., lambda_j - 1} mod q.
class FieldGrid {
 public:
  FieldGrid(const Composition& lambda, std::uint64_t q);

  std::uint64_t size() const { return size_; }
  std::uint64_t count_range(std::uint64_t begin, std::uint64_t end) const;

 private:
  int d_;
  std::uint64_t q_;
  std::uint64_t size_;
  // forbidden_[pair][r]: residue r of x_i - x_j lies on a hyperplane.
  std::vector<std::vector<char>> forbidden_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace monopath::detail
