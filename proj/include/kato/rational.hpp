#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <span>
#include <string>
#include <vector>

namespace kato {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using RatMatrix = DenseMatrix<Rat>;
using RatVector = DenseVector<Rat>;

inline Int num(const Rat& x) { return numerator(x); }
inline Int den(const Rat& x) { return denominator(x); }
inline bool is_integer(const Rat& x) { return den(x) == 1; }

/// Floor division rounding toward negative infinity, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(num(x), den(x)); }

inline Int lcm_of_denominators(std::span<const Rat> values) {
    Int l = 1;
    for (const Rat& v : values) l = lcm(l, den(v));
    return l;
}

/// "p/q" for non-integers, plain "p" otherwise.
inline std::string fraction_string(const Rat& x) { return x.str(); }

}  // namespace kato
