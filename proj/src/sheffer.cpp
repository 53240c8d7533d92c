#include "umbral/sheffer.hpp"

#include <stdexcept>

#include "umbral/combinatorics.hpp"
#include "umbral/gf.hpp"

namespace umbral {

ShefferPair::ShefferPair(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
    if (g_.order() != f_.order()) {
        throw std::invalid_argument("sheffer pair: g/f order mismatch");
    }
    if (!g_.is_invertible()) {
        throw std::domain_error("sheffer pair: g must be invertible (g(0) != 0)");
    }
    if (!f_.is_delta()) {
        throw std::domain_error("sheffer pair: f must be a delta series");
    }
}

std::vector<Polynomial> sheffer_polys(const ShefferPair& pair, int n_max) {
    if (n_max < 0) throw std::invalid_argument("sheffer_polys: negative n");
    if (n_max > pair.order() - 1) {
        throw std::invalid_argument("sheffer_polys: working order too small (need n <= order-1)");
    }
    Series fbar = compositional_inverse(pair.f());
    Series prefactor = multiplicative_inverse(compose(pair.g(), fbar));
    return gf_expand(GFRecipe::exp_kernel(prefactor.truncated(n_max), fbar.truncated(n_max)),
                     n_max);
}

Polynomial sheffer_coeff_formula(const ShefferPair& pair, int n) {
    if (n < 0) throw std::invalid_argument("sheffer_coeff_formula: negative n");
    if (n > pair.order() - 1) {
        throw std::invalid_argument("sheffer_coeff_formula: working order too small");
    }
    Series fbar = compositional_inverse(pair.f());
    Series base = multiplicative_inverse(compose(pair.g(), fbar));
    Polynomial xn = Polynomial::monomial(n, Rational(1));
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    Series power = base;  // base * fbar^j
    Rational j_factorial(1);
    for (int j = 0; j <= n; ++j) {
        if (j > 0) {
            power = power * fbar;
            j_factorial *= Rational(j);
        }
        coeffs[static_cast<std::size_t>(j)] = pairing(power, xn) / j_factorial;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial sheffer_lowering(const ShefferPair& pair, int n) {
    if (n < 1) throw std::invalid_argument("sheffer_lowering: n must be >= 1");
    return apply_series(pair.f(), sheffer_polys(pair, n).back());
}

Polynomial sheffer_raising(const ShefferPair& pair, int n) {
    if (n < 0) throw std::invalid_argument("sheffer_raising: negative n");
    if (pair.order() < n + 2) {
        throw std::invalid_argument("sheffer_raising: working order too small (need >= n+2)");
    }
    Polynomial s_n = sheffer_polys(pair, n).back();
    // Apply 1/f'(t) first, then x - g'(t)/g(t).  The padded top
    // coefficient of the derivatives never reaches degree <= n+1 terms
    // because the order is at least n+2.
    Polynomial u = apply_series(multiplicative_inverse(derivative(pair.f())), s_n);
    Series log_deriv_g = derivative(pair.g()) * multiplicative_inverse(pair.g());
    return Polynomial::x() * u - apply_series(log_deriv_g, u);
}

Polynomial sheffer_derivative(const ShefferPair& pair, int n) {
    if (n < 0) throw std::invalid_argument("sheffer_derivative: negative n");
    auto polys = sheffer_polys(pair, n);
    Series fbar = compositional_inverse(pair.f());
    Polynomial out;
    for (int l = 0; l <= n - 1; ++l) {
        // <fbar | x^{n-l}> = (n-l)! [t^{n-l}] fbar
        Rational weight = rat_binomial(Rational(n), l) * Rational(factorial(n - l)) *
                          fbar.coeff(n - l);
        out = out + weight * polys[static_cast<std::size_t>(l)];
    }
    return out;
}

Polynomial binomial_expand(const ShefferPair& pair, int n, const Rational& y) {
    if (n < 0) throw std::invalid_argument("binomial_expand: negative n");
    auto polys = sheffer_polys(pair, n);
    Polynomial out;
    for (int j = 0; j <= n; ++j) {
        // P_{n-j} = g(t) s_{n-j}, evaluated at y.
        Rational p_value = apply_series(pair.g(), polys[static_cast<std::size_t>(n - j)]).evaluate(y);
        out = out + rat_binomial(Rational(n), j) * p_value * polys[static_cast<std::size_t>(j)];
    }
    return out;
}

Polynomial transfer(const Series& f, const Series& g, int n) {
    if (n < 1) throw std::invalid_argument("transfer: n must be >= 1");
    if (!f.is_delta() || !g.is_delta()) {
        throw std::domain_error("transfer: both series must be delta series");
    }
    const int order = f.order();
    if (g.order() != order) throw std::invalid_argument("transfer: order mismatch");
    ShefferPair source(Series::one(order), f);
    Polynomial p_n = sheffer_polys(source, n).back();
    if (!p_n.coeff(0).is_zero()) {
        throw std::logic_error("transfer: associated polynomial has nonzero constant term");
    }
    // (f/g)^n as an invertible series: divide both by t, then form the ratio.
    Series f_over_t(order), g_over_t(order);
    for (int i = 0; i < order; ++i) {
        f_over_t.set_coeff(i, f.coeff(i + 1));
        g_over_t.set_coeff(i, g.coeff(i + 1));
    }
    Series ratio = f_over_t * multiplicative_inverse(g_over_t);
    Series ratio_pow = pow(ratio, Rational(n));
    return Polynomial::x() * apply_series(ratio_pow, p_n.divided_by_x());
}

std::vector<Rational> connection_constants(const ShefferPair& source,
                                           const ShefferPair& target, int n) {
    if (n < 0) throw std::invalid_argument("connection_constants: negative n");
    if (source.order() != target.order()) {
        throw std::invalid_argument("connection_constants: order mismatch");
    }
    if (n > source.order() - 1) {
        throw std::invalid_argument("connection_constants: working order too small");
    }
    Series fbar = compositional_inverse(source.f());
    Series base = compose(target.g(), fbar) * multiplicative_inverse(compose(source.g(), fbar));
    Series ell = compose(target.f(), fbar);
    Polynomial xn = Polynomial::monomial(n, Rational(1));
    // C_{n,m} vanishes for m > n (degree argument), so the row stops at n.
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational(0));
    Series power = base;
    Rational m_factorial(1);
    for (int m = 0; m <= n; ++m) {
        if (m > 0) {
            power = power * ell;
            m_factorial *= Rational(m);
        }
        row[static_cast<std::size_t>(m)] = pairing(power, xn) / m_factorial;
    }
    return row;
}

}  // namespace umbral
