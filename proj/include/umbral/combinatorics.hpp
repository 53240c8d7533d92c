#pragma once

#include <functional>
#include <span>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

BigInt factorial(int n);

/**
 * Generalized binomial coefficient with a rational upper argument:
 * alpha (alpha-1) ... (alpha-n+1) / n!.  Coincides with the ordinary
 * binomial coefficient for integer alpha >= 0.
 */
Rational rat_binomial(const Rational& alpha, int n);

/// total! / prod(part!).  Rejects compositions whose parts do not sum to total.
Rational multinomial(int total, std::span<const int> parts);

/// (x)_n = x (x-1) ... (x-n+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, int n);

/// x^(n) = x (x+1) ... (x+n-1), with x^(0) = 1.
Rational rising_factorial(const Rational& x, int n);

/**
 * Invokes fn once per composition of `total` into `parts` ordered
 * nonnegative summands.  `parts` = 0 yields the empty composition only
 * when total = 0.
 */
void for_each_composition(int total, int parts,
                          const std::function<void(std::span<const int>)>& fn);

}  // namespace umbral
