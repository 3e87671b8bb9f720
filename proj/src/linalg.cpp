#include "cosmopoly/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cosmopoly {

namespace {

// In-place Bareiss forward pass over the first `cols` columns; extra
// columns (an augmented right-hand side) are carried along. Returns the
// sign flip from row swaps, or 0 when a pivot column is all zero.
int bareiss_forward(IntMatrix& m, std::size_t cols) {
  const std::size_t n = m.size();
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n && k < cols; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

}  // namespace

mpz_class bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  const int sign = bareiss_forward(m, n);
  if (sign == 0) return 0;
  return sign * m[n - 1][n - 1];
}

std::optional<std::vector<mpq_class>> solve_exact(IntMatrix a, std::vector<mpz_class> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("right-hand side size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve with a non-square matrix");
    a[i].push_back(b[i]);
  }
  if (bareiss_forward(a, n) == 0) return std::nullopt;
  std::vector<mpq_class> x(n);
  for (std::size_t i = n; i-- > 0;) {
    mpq_class acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= mpq_class(a[i][j]) * x[j];
    x[i] = acc / mpq_class(a[i][i]);
    x[i].canonicalize();
  }
  return x;
}

}  // namespace cosmopoly
