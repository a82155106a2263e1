#pragma once

#include <string>
#include <vector>

namespace monopath {

// A composition lambda = (lambda_1, ..., lambda_d) of n: positive parts in
// order. It fixes the box B(lambda), the multiset M_lambda (letter i with
// multiplicity lambda_i) and the deformed arrangement.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  // "2,2,2"; whitespace around parts is ignored.
  static Composition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int part(int letter) const { return parts_[letter - 1]; }  // 1-based letter
  int n() const { return n_; }
  int d() const { return static_cast<int>(parts_.size()); }

  // Letters of M_lambda in weakly increasing order: 1..1 2..2 ... d..d.
  std::vector<int> sorted_letters() const;

  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Every composition of n, in lexicographic order of the parts vector.
std::vector<Composition> compositions_of(int n);

// (2, 2, ..., 2) with d parts.
Composition all_twos(int d);

}  // namespace monopath
