#pragma once

#include "ratexp/ball.hpp"

namespace ratexp {

// Inverse z(y) of y = z log z on z >= 1/e. The returned midpoint r satisfies
// |r log r - y| <= 2^(1-precision) max(1, |y|), certified; the ball encloses
// z(v) for every v in the input ball. Domain: y >= -1/e.
Ball xi_inverse(const Ball& y, mpfr_prec_t precision_bits);

// Iterates z_0(y) = y, z_n(y) = y / log z_{n-1}(y). Requires y > e for n >= 1
// so every intermediate log stays positive.
Ball zn_iterate(const Ball& y, long n, mpfr_prec_t precision_bits);

// Upper bound on |z(y) - z_n(y)| for y > e:
//   n = 0:  y (1 - 1/log z)
//   n = 1:  z_1 loglog z / log z
//   n >= 2: (log y)^floor(n/2) z_1 loglog z
//           / ((log z_1)^(n-1) (log z)^(floor(n/2)+1)).
// The n <= 1 cases are exact identities, the rest strict over-estimates.
Ball zn_error_bound(const Ball& y, long n, mpfr_prec_t precision_bits);

}  // namespace ratexp
