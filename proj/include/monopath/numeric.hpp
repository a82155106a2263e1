#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace monopath {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Lowest terms, "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

// Exact vector of rationals. Entries are kept canonical by GMP arithmetic.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static RationalVector from_integers(const std::vector<int>& xs);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const Rational& scalar);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }

  Rational dot(const RationalVector& other) const;
  std::vector<std::string> to_strings() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

}  // namespace monopath
