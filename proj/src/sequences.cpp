#include "umbral/sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "umbral/combinatorics.hpp"

namespace umbral {

namespace {

void require_nonnegative(int value, const char* what) {
    if (value < 0) throw std::invalid_argument(std::string(what) + ": must be nonnegative");
}

/// t truncated at `order`; degenerates to the zero series at order 0.
Series t_kernel(int order) {
    Series s(order);
    if (order >= 1) s.set_coeff(1, Rational(1));
    return s;
}

/// log(1+t)/t, an invertible series.
Series log_one_plus_t_over_t(int order) {
    Series out(order);
    for (int i = 0; i <= order; ++i) {
        out.set_coeff(i, Rational(i % 2 == 0 ? 1 : -1, i + 1));
    }
    return out;
}

}  // namespace

Rational stirling1(int n, int m) {
    if (n < 0 || m < 0 || m > n) return Rational(0);
    static std::mutex table_mutex;
    static std::vector<std::vector<BigInt>> table = {{BigInt(1)}};
    std::lock_guard<std::mutex> lock(table_mutex);
    while (static_cast<int>(table.size()) <= n) {
        int row = static_cast<int>(table.size());
        const auto& prev = table[static_cast<std::size_t>(row) - 1];
        std::vector<BigInt> next(static_cast<std::size_t>(row) + 1, BigInt(0));
        for (int j = 1; j <= row; ++j) {
            // S1(row, j) = S1(row-1, j-1) - (row-1) S1(row-1, j)
            next[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j) - 1];
            if (j < row) {
                next[static_cast<std::size_t>(j)] -= (row - 1) * prev[static_cast<std::size_t>(j)];
            }
        }
        table.push_back(std::move(next));
    }
    return Rational(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]);
}

Polynomial falling_poly(int n) {
    require_nonnegative(n, "falling_poly");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) c[static_cast<std::size_t>(l)] = stirling1(n, l);
    return Polynomial(std::move(c));
}

Polynomial rising_poly(int n) {
    require_nonnegative(n, "rising_poly");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) {
        Rational v = stirling1(n, l);
        c[static_cast<std::size_t>(l)] = ((n - l) % 2 == 0) ? v : -v;
    }
    return Polynomial(std::move(c));
}

Series lif_series(int k, int order) {
    require_nonnegative(order, "lif_series");
    Series out(order);
    for (int i = 0; i <= order; ++i) {
        out.set_coeff(i, Rational(BigInt(1), factorial(i)) * Rational(i + 1).pow(-k));
    }
    return out;
}

std::vector<Polynomial> bernoulli_polys(int order_alpha, int n_max) {
    require_nonnegative(order_alpha, "bernoulli_polys: order");
    require_nonnegative(n_max, "bernoulli_polys: n");
    // (e^t-1)/t has coefficients 1/(i+1)!.
    Series kernel_ratio(n_max);
    for (int i = 0; i <= n_max; ++i) {
        kernel_ratio.set_coeff(i, Rational(BigInt(1), factorial(i + 1)));
    }
    Series prefactor = pow(multiplicative_inverse(kernel_ratio), Rational(order_alpha));
    return gf_expand(GFRecipe::exp_kernel(prefactor, t_kernel(n_max)), n_max);
}

Polynomial bernoulli_poly(int order_alpha, int n) {
    return bernoulli_polys(order_alpha, n).back();
}

std::vector<Polynomial> frobenius_euler_polys(int order_alpha, const Rational& fe_lambda, int n_max) {
    require_nonnegative(order_alpha, "frobenius_euler_polys: order");
    require_nonnegative(n_max, "frobenius_euler_polys: n");
    if (fe_lambda == Rational(1)) {
        throw std::domain_error("frobenius_euler_polys: parameter 1 is a pole");
    }
    Series denom = exp_t(Rational(1), n_max);
    denom.set_coeff(0, denom.coeff(0) - fe_lambda);
    Series prefactor = pow((Rational(1) - fe_lambda) * multiplicative_inverse(denom),
                           Rational(order_alpha));
    return gf_expand(GFRecipe::exp_kernel(prefactor, t_kernel(n_max)), n_max);
}

Polynomial frobenius_euler_poly(int order_alpha, const Rational& fe_lambda, int n) {
    return frobenius_euler_polys(order_alpha, fe_lambda, n).back();
}

std::vector<Polynomial> cauchy1_polys(int order_alpha, int n_max) {
    require_nonnegative(order_alpha, "cauchy1_polys: order");
    require_nonnegative(n_max, "cauchy1_polys: n");
    Series prefactor = pow(multiplicative_inverse(log_one_plus_t_over_t(n_max)),
                           Rational(order_alpha));
    return gf_expand(GFRecipe::one_plus_t_exponent(prefactor, -1), n_max);
}

Polynomial cauchy1_poly(int order_alpha, int n) {
    return cauchy1_polys(order_alpha, n).back();
}

std::vector<Polynomial> cauchy2_polys(int order_alpha, int n_max) {
    require_nonnegative(order_alpha, "cauchy2_polys: order");
    require_nonnegative(n_max, "cauchy2_polys: n");
    Series base = multiplicative_inverse(log_one_plus_t_over_t(n_max)) *
                  multiplicative_inverse(one_plus_t_pow(Rational(1), n_max));
    Series prefactor = pow(base, Rational(order_alpha));
    return gf_expand(GFRecipe::one_plus_t_exponent(prefactor, +1), n_max);
}

Polynomial cauchy2_poly(int order_alpha, int n) {
    return cauchy2_polys(order_alpha, n).back();
}

Series peters_base_series(const Rational& lambda, long mu, int order) {
    require_nonnegative(order, "peters_base_series");
    Series base = one_plus_t_pow(lambda, order);
    base.set_coeff(0, base.coeff(0) + Rational(1));  // 1 + (1+t)^lambda, constant 2
    return pow(base, Rational(-mu));
}

Series peters_base_series_composition_sum(const Rational& lambda, long mu, int order) {
    require_nonnegative(order, "peters_base_series_composition_sum");
    Series out(order);
    for (int w = 0; w <= order; ++w) {
        Rational coeff(0);
        for (int i = 0; i <= w; ++i) {
            Rational comp_sum(0);
            for_each_composition(w - i, i, [&](std::span<const int> parts) {
                Rational product(1);
                for (int p : parts) product *= rat_binomial(lambda, p + 1);
                comp_sum += product;
            });
            coeff += Rational(2).pow(-mu - i) * rat_binomial(Rational(-mu), i) * comp_sum;
        }
        out.set_coeff(w, coeff);
    }
    return out;
}

std::vector<Polynomial> peters_polys(const Rational& lambda, long mu, int n_max) {
    require_nonnegative(n_max, "peters_polys");
    return gf_expand(GFRecipe::one_plus_t_exponent(peters_base_series(lambda, mu, n_max), +1),
                     n_max);
}

Polynomial peters_poly(const Rational& lambda, long mu, int n) {
    return peters_polys(lambda, mu, n).back();
}

std::vector<Polynomial> poly_cauchy1_polys(int k, int n_max) {
    require_nonnegative(n_max, "poly_cauchy1_polys");
    Series prefactor = compose(lif_series(k, n_max), log_one_plus_t(n_max));
    return gf_expand(GFRecipe::one_plus_t_exponent(prefactor, -1), n_max);
}

Polynomial poly_cauchy1(int k, int n) {
    return poly_cauchy1_polys(k, n).back();
}

std::vector<Polynomial> poly_cauchy2_polys(int k, int n_max) {
    require_nonnegative(n_max, "poly_cauchy2_polys");
    Series prefactor = compose(lif_series(k, n_max), -log_one_plus_t(n_max));
    return gf_expand(GFRecipe::one_plus_t_exponent(prefactor, +1), n_max);
}

Polynomial poly_cauchy2(int k, int n) {
    return poly_cauchy2_polys(k, n).back();
}

}  // namespace umbral
