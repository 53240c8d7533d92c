#pragma once

#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

namespace umbral {

/**
 * Bivariate generating function A(t) exp(x kappa(t)) with kappa a delta
 * series.  The (1+t)^{sign x} form is the special case
 * kappa = sign log(1+t), which keeps a single expansion path for every
 * family in the kernel.
 */
struct GFRecipe {
    Series prefactor;
    Series kernel;

    GFRecipe(Series prefactor_in, Series kernel_in);

    static GFRecipe exp_kernel(Series prefactor, Series kernel);
    /// prefactor(t) * (1+t)^{sign * x}, sign in {+1, -1}.
    static GFRecipe one_plus_t_exponent(Series prefactor, int sign);
};

/**
 * Coefficient extraction: returns p_0..p_N with
 * sum_n p_n(x) t^n / n! = prefactor(t) exp(x kernel(t)) mod t^{N+1}.
 * Each p_n has degree <= n because the kernel has order >= 1.
 */
std::vector<Polynomial> gf_expand(const GFRecipe& recipe, int n_max);

}  // namespace umbral
