#pragma once

#include "kato/rational.hpp"

namespace kato {

/// Solves A x = b exactly over the rationals by Gaussian elimination with
/// full pivoting. Throws SingularSystem when A is singular.
RatVector solve_exact(RatMatrix a, RatVector b);

/// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
Int determinant_exact(IntMatrix a);

}  // namespace kato
