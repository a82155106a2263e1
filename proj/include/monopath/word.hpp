#pragma once

#include <span>
#include <string>
#include <vector>

#include "monopath/composition.hpp"

namespace monopath {

// A lambda-permutation: a word over {1,...,d} containing letter i exactly
// lambda_i times. Encodes the monotone lattice path p^w.
class LambdaWord {
 public:
  LambdaWord(std::vector<int> letters, Composition lambda);

  // Comma-separated letters ("1,2,1,2,1"); when d <= 9 a run of digits
  // ("12121") is accepted too.
  static LambdaWord parse(const std::string& text, const Composition& lambda);
  // Infers lambda from the letter counts; every letter 1..max must occur.
  static LambdaWord parse(const std::string& text);

  const std::vector<int>& letters() const { return letters_; }
  std::span<const int> span() const { return letters_; }
  const Composition& composition() const { return lambda_; }
  int n() const { return lambda_.n(); }
  int d() const { return lambda_.d(); }
  int operator[](std::size_t pos) const { return letters_[pos]; }

  // m_k: how many earlier positions carry the same letter as position pos.
  std::vector<int> occurrence_indices() const;
  // First position (0-based) of every letter, indexed by letter - 1.
  std::vector<int> first_positions() const;

  std::string to_string() const;  // comma-separated
  std::string compact() const;    // digit run, valid when d <= 9

  friend bool operator==(const LambdaWord& a, const LambdaWord& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const LambdaWord& a, const LambdaWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
  Composition lambda_;
};

// Splits "1,2,1" or "121" into integers; no multiplicity check.
std::vector<int> parse_letters(const std::string& text, bool allow_digit_run);

// v_0, ..., v_n with v_0 = 0 and v_k = v_{k-1} + e_{w_k}.
class LatticePath {
 public:
  explicit LatticePath(std::vector<std::vector<int>> points);

  const std::vector<std::vector<int>>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<int>& operator[](std::size_t k) const { return points_[k]; }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<std::vector<int>> points_;
};

LatticePath word_to_path(const LambdaWord& w);

}  // namespace monopath
