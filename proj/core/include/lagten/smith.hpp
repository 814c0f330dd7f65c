#pragma once

#include <gmpxx.h>

#include <vector>

#include "lagten/matrix.hpp"

namespace lagten {

using IntMatrix = Matrix<mpz_class>;

struct SmithForm {
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive.
  std::vector<mpz_class> factors;
  IntMatrix diagonal;  // L * m * R
  IntMatrix left;      // unimodular
  IntMatrix right;     // unimodular
};

/// Smith normal form with transforms. The result is re-multiplied and
/// checked before returning.
SmithForm smith_normal_form(const IntMatrix& m);

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);
/// Exact integer determinant (fraction-free elimination).
mpz_class int_det(const IntMatrix& m);

/// Invariant factors greater than one: the cyclic orders of coker(m) when
/// m is square and nonsingular.
std::vector<mpz_class> cokernel_orders(const IntMatrix& m);

}  // namespace lagten
