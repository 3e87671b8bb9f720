#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace cosmopoly {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Determinant by fraction-free (Bareiss) elimination. Every intermediate
/// value is a minor of the input, so divisions are exact.
mpz_class bareiss_determinant(IntMatrix m);

/// Exact solution of a x = b for square integer a; nullopt when singular.
/// Forward elimination is fraction-free, back substitution rational.
std::optional<std::vector<mpq_class>> solve_exact(IntMatrix a, std::vector<mpz_class> b);

}  // namespace cosmopoly
