#include "monopath/polynomial.hpp"

namespace monopath {

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial_root(long root) {
  return Polynomial({BigInt(-root), BigInt(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (coeffs_.empty() || other.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const BigInt& c = coeffs_[e];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || e == 0) out += mag.get_str();
    if (e >= 1) out += "q";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace monopath
