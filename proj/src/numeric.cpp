#include "monopath/numeric.hpp"

#include <stdexcept>

#include "monopath/errors.hpp"

namespace monopath {

NonGenericFunctional::NonGenericFunctional(int la, int sa, int lb, int sb)
    : Error("non-generic functional: value a'_" + std::to_string(la) + " + " +
            std::to_string(sa) + " equals a'_" + std::to_string(lb) + " + " +
            std::to_string(sb)),
      letter_a(la), shift_a(sa), letter_b(lb), shift_b(sb) {}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw InvalidInput("not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

RationalVector RationalVector::from_integers(const std::vector<int>& xs) {
  RationalVector v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = xs[i];
  return v;
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  if (other.size() != size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  if (other.size() != size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

Rational RationalVector::dot(const RationalVector& other) const {
  if (other.size() != size()) throw std::invalid_argument("dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < size(); ++i) acc += coords_[i] * other.coords_[i];
  return acc;
}

std::vector<std::string> RationalVector::to_strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& c : coords_) out.push_back(to_string(c));
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  return os << ')';
}

}  // namespace monopath
