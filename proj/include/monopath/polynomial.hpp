#pragma once

#include <string>
#include <vector>

#include "monopath/numeric.hpp"

namespace monopath {

// Integer polynomial in q; coefficients stored constant term first with no
// trailing zeros (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial monomial_root(long root);  // q - root

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  BigInt evaluate(const BigInt& q) const;

  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;  // e.g. "q^3 - 9q^2 + 20q"

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace monopath
