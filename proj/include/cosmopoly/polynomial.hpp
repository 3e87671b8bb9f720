#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cosmopoly {

/// Dense univariate polynomial with int64 coefficients, index = degree.
/// Trailing zeros are trimmed; arithmetic throws std::overflow_error rather
/// than wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial constant(std::int64_t c);
  /// c * z^k
  static IntPolynomial monomial(std::int64_t c, int k);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t operator[](int k) const noexcept;

  std::int64_t evaluate(std::int64_t z) const;
  bool is_palindromic() const;
  bool all_nonnegative() const;
  /// Coefficientwise a_k <= b_k for every k.
  bool dominated_by(const IntPolynomial& other) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial pow(int e) const;

  bool operator==(const IntPolynomial& o) const = default;

  /// "1 + 3z + 5z^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace cosmopoly
