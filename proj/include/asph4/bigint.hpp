#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace asph4 {

using Int = boost::multiprecision::cpp_int;

/// Quotient rounded toward negative infinity.
inline Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;
    if (n % d != 0 && ((n < 0) != (d < 0))) --q;
    return q;
}

/// Quotient rounded to the nearest integer (ties toward +infinity).
inline Int round_div(Int n, Int d) {
    if (d < 0) { n = -n; d = -d; }
    return floor_div(2 * n + d, 2 * d);
}

/// floor((p + sqrt(d)) / q) for non-square d > 0, q != 0.
/// Exact: sqrt(d) is irrational, so the value is never an integer.
inline Int floor_quadratic(const Int& p, const Int& d, const Int& q) {
    const Int s = boost::multiprecision::sqrt(d);
    if (q > 0) return floor_div(p + s, q);
    return -(floor_div(p + s, -q) + 1);
}

}  // namespace asph4
