#include "umbral/gf.hpp"

#include <stdexcept>

#include "umbral/combinatorics.hpp"

namespace umbral {

GFRecipe::GFRecipe(Series prefactor_in, Series kernel_in)
    : prefactor(std::move(prefactor_in)), kernel(std::move(kernel_in)) {
    if (prefactor.order() != kernel.order()) {
        throw std::invalid_argument("gf recipe: prefactor/kernel order mismatch");
    }
    if (!kernel.coeff(0).is_zero()) {
        throw std::domain_error("gf recipe: kernel must have zero constant term");
    }
}

GFRecipe GFRecipe::exp_kernel(Series prefactor, Series kernel) {
    return GFRecipe(std::move(prefactor), std::move(kernel));
}

GFRecipe GFRecipe::one_plus_t_exponent(Series prefactor, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("gf recipe: sign must be +-1");
    const int order = prefactor.order();
    Series kernel = Rational(sign) * log_one_plus_t(order);
    return GFRecipe(std::move(prefactor), std::move(kernel));
}

std::vector<Polynomial> gf_expand(const GFRecipe& recipe, int n_max) {
    if (n_max < 0) throw std::invalid_argument("gf_expand: negative order");
    if (n_max > recipe.prefactor.order()) {
        throw std::invalid_argument("gf_expand: recipe order too small");
    }
    // Coefficient of x^j in p_n is n! [t^n] (prefactor * kernel^j) / j!.
    std::vector<std::vector<Rational>> table(
        static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        table[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Rational(0));
    }
    Series current = recipe.prefactor;  // prefactor * kernel^j
    Rational j_factorial(1);
    for (int j = 0; j <= n_max; ++j) {
        if (j > 0) {
            current = current * recipe.kernel;
            j_factorial *= Rational(j);
        }
        for (int n = j; n <= n_max; ++n) {
            table[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] =
                current.coeff(n) * Rational(factorial(n)) / j_factorial;
        }
    }
    std::vector<Polynomial> out;
    out.reserve(table.size());
    for (auto& row : table) out.emplace_back(std::move(row));
    return out;
}

}  // namespace umbral
