#include "umbral/mixed.hpp"

#include <stdexcept>
#include <vector>

#include "umbral/combinatorics.hpp"
#include "umbral/gf.hpp"
#include "umbral/sequences.hpp"

namespace umbral {

std::vector<Polynomial> cp_oracle(const MixedParams& params, int n_max) {
    if (n_max < 0) throw std::invalid_argument("cp_oracle: negative order");
    Series prefactor = peters_base_series(params.lambda, params.mu, n_max) *
                       compose(lif_series(params.k, n_max), log_one_plus_t(n_max));
    return gf_expand(GFRecipe::one_plus_t_exponent(prefactor, -1), n_max);
}

std::vector<Polynomial> cphat_oracle(const MixedParams& params, int n_max) {
    if (n_max < 0) throw std::invalid_argument("cphat_oracle: negative order");
    Series prefactor = peters_base_series(params.lambda, params.mu, n_max) *
                       compose(lif_series(params.k, n_max), -log_one_plus_t(n_max));
    return gf_expand(GFRecipe::one_plus_t_exponent(prefactor, +1), n_max);
}

namespace {

Series lif_at_minus_t(int k, int order) {
    Series lif = lif_series(k, order);
    for (int i = 1; i <= order; i += 2) lif.set_coeff(i, -lif.coeff(i));
    return lif;
}

}  // namespace

ShefferPair cp_sheffer_pair(const MixedParams& params, int order) {
    Series g = one_plus_exp_pow(-params.lambda, params.mu, order) *
               multiplicative_inverse(lif_at_minus_t(params.k, order));
    Series f = exp_t(Rational(-1), order);
    f.set_coeff(0, Rational(0));  // e^{-t} - 1
    return ShefferPair(std::move(g), std::move(f));
}

ShefferPair cphat_sheffer_pair(const MixedParams& params, int order) {
    Series g = one_plus_exp_pow(params.lambda, params.mu, order) *
               multiplicative_inverse(lif_at_minus_t(params.k, order));
    Series f = exp_t(Rational(1), order);
    f.set_coeff(0, Rational(0));  // e^{t} - 1
    return ShefferPair(std::move(g), std::move(f));
}

Series one_plus_exp_pow(const Rational& c, long mu, int order) {
    Series base = exp_t(c, order);
    base.set_coeff(0, base.coeff(0) + Rational(1));  // 1 + e^{ct}, constant 2
    return pow(base, Rational(mu));
}

Series one_plus_exp_pow_composition_sum(const Rational& c, long mu, int order) {
    if (order < 0) throw std::invalid_argument("one_plus_exp_pow_composition_sum: negative order");
    Series out(order);
    for (int w = 0; w <= order; ++w) {
        Rational bracket(0);
        for (int i = 0; i <= w; ++i) {
            Rational comp_sum(0);
            for_each_composition(w - i, i, [&](std::span<const int> parts) {
                std::vector<int> bumped(parts.begin(), parts.end());
                for (int& p : bumped) ++p;
                comp_sum += multinomial(w, bumped);
            });
            bracket += Rational(2).pow(mu - i) * rat_binomial(Rational(mu), i) * comp_sum;
        }
        out.set_coeff(w, bracket * c.pow(w) / Rational(factorial(w)));
    }
    return out;
}

}  // namespace umbral
