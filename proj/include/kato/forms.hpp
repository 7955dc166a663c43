#pragma once

#include "kato/rational.hpp"

#include <span>
#include <vector>

namespace kato {

/// Continued-fraction style multilinear form:
///   f() = 1, f(x1) = x1, f(x1..xn) = xn f(x1..x_{n-1}) + f(x1..x_{n-2}).
Int f_eval(std::span<const int> args);

/// Companion form: P(x1) = x1, P(x1..xn) = xn f(x1..x_{n-1}) + P(x1..x_{n-1}).
/// The empty form is taken to be 0. Throws on an empty argument list through
/// p_eval_strict; p_eval accepts the empty list with value 0.
Int p_eval(std::span<const int> args);

struct MatrixQuad {
    Int p, q, r, s;
    friend bool operator==(const MatrixQuad&, const MatrixQuad&) = default;
};

/// Product of the companion matrices (0 1; 1 k_j), with all partial products.
struct DlousskyMatrix {
    std::vector<MatrixQuad> partials;  // j = 1..N
    MatrixQuad final;                  // = partials.back()
    Int k_invariant;                   // r + s
};

DlousskyMatrix dloussky_matrix(std::span<const int> ks);

}  // namespace kato
