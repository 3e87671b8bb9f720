#include "cosmopoly/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosmopoly {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(std::int64_t c) { return IntPolynomial(std::vector<std::int64_t>{c}); }

IntPolynomial IntPolynomial::monomial(std::int64_t c, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::operator[](int k) const noexcept {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : 0;
}

std::int64_t IntPolynomial::evaluate(std::int64_t z) const {
  std::int64_t r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = checked_add(checked_mul(r, z), *it);
  return r;
}

bool IntPolynomial::is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

bool IntPolynomial::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

bool IntPolynomial::dominated_by(const IntPolynomial& other) const {
  const int n = std::max(degree(), other.degree());
  for (int k = 0; k <= n; ++k) {
    if ((*this)[k] > other[k]) return false;
  }
  return true;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<std::int64_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked_add((*this)[static_cast<int>(k)], o[static_cast<int>(k)]);
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<std::int64_t> neg(o.coeffs_.size());
  for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = checked_mul(o.coeffs_[k], -1);
  return *this + IntPolynomial(std::move(neg));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  IntPolynomial r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (k == 0 || mag != 1) s += std::to_string(mag);
    if (k >= 1) s += "z";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace cosmopoly
