#pragma once

#include <span>

#include "hlskit/laurent.hpp"

namespace hlskit {

/// [n]_Y = 1 + Y + ... + Y^{n-1}.
LaurentPoly y_integer(int n, VarId v);
/// [n]_Y! = [1]_Y [2]_Y ... [n]_Y.
LaurentPoly y_factorial(int n, VarId v);
/// Gaussian binomial, from the product of (1 - Y^{n-k+i}) / (1 - Y^i) with
/// each quotient taken by exact division. Requires 0 <= k <= n.
LaurentPoly y_binomial(int n, int k, VarId v);
/// Y-multinomial of a multiset I of integers in [n]: with I sorted as
/// e_1 <= ... <= e_l and e_{l+1} = n, the product of binom(e_{i+1}, e_i).
LaurentPoly y_multinomial(int n, std::span<const int> multiset, VarId v);

/// Ordinary binomial coefficient, exact.
Integer binomial(int n, int k);

}  // namespace hlskit
