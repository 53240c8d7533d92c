#pragma once

#include <vector>

#include "umbral/functional.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

namespace umbral {

/**
 * A pair (g, f) with g invertible and f a delta series, determining the
 * unique Sheffer sequence s_n with <g f^k | s_n> = n! delta_{n,k}.
 * Both series share one truncation order, the pair's working order.
 */
class ShefferPair {
public:
    ShefferPair(Series g, Series f);

    const Series& g() const { return g_; }
    const Series& f() const { return f_; }
    int order() const { return g_.order(); }

private:
    Series g_;
    Series f_;
};

/**
 * s_0..s_n via the generating function route: with fbar the
 * compositional inverse of f, expand (1/g(fbar)) e^{x fbar(t)}.
 * Requires n <= order - 1.
 */
std::vector<Polynomial> sheffer_polys(const ShefferPair& pair, int n_max);

/**
 * s_n via the coefficient formula
 * s_n = sum_j (1/j!) <fbar^j / g(fbar) | x^n> x^j,
 * an independent construction from the generating-function route.
 */
Polynomial sheffer_coeff_formula(const ShefferPair& pair, int n);

/// f(t) s_n; equals n s_{n-1}.
Polynomial sheffer_lowering(const ShefferPair& pair, int n);

/// s_{n+1} built from s_n via (x - g'(t)/g(t)) (1/f'(t)) s_n; needs order >= n+2.
Polynomial sheffer_raising(const ShefferPair& pair, int n);

/// d/dx s_n computed as sum_l binom(n,l) <fbar | x^{n-l}> s_l.
Polynomial sheffer_derivative(const ShefferPair& pair, int n);

/**
 * s_n(x+y) assembled from sum_j binom(n,j) s_j(x) P_{n-j}(y) where
 * P_n = g(t) s_n; equals s_n shifted by y.
 */
Polynomial binomial_expand(const ShefferPair& pair, int n, const Rational& y);

/**
 * Transfer between associated sequences: for p_n ~ (1, f) and
 * q_n ~ (1, g), q_n = x (f/g)^n x^{-1} p_n, n >= 1.  The x^{-1} step is
 * exact because p_n(0) = 0.
 */
Polynomial transfer(const Series& f, const Series& g, int n);

/**
 * Connection constants C_{n,m} = (1/m!) <(h(fbar)/g(fbar)) l(fbar)^m | x^n>
 * expanding source s_n ~ (g, f) over target r_m ~ (h, l):
 * s_n = sum_{m=0}^{n} C_{n,m} r_m.  Returns the row m = 0..n.
 */
std::vector<Rational> connection_constants(const ShefferPair& source,
                                           const ShefferPair& target, int n);

}  // namespace umbral
